"""Krawtchouk tables, dual partitions, reflexivity, and worked dualities."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobring.characters import (
    all_generating_characters,
    canonical_generating_character,
    is_symmetric,
    translate,
)
from frobring.cyclotomic import from_exponent_counts, zero
from frobring.duality import (
    character_independence_check,
    delsarte_rank_krawtchouk,
    dual_partition,
    is_reflexive,
    is_self_dual,
    krawtchouk_table,
    left_right_agreement,
    same_entries,
    semisimple_lr_agreement,
)
from frobring.errors import InvalidParameter
from frobring.partitions import (
    Partition,
    equals,
    ex5_5_partition,
    hamming_partition,
    hom_partition,
    is_finer,
    product_partition,
    rank_partition,
    symmetrized_power_partition,
)
from frobring.rings import (
    build_gf,
    build_matrix_ring,
    build_product,
    build_zmod,
)


def _named_invariant_partitions():
    """(partition, ring) pairs covering every construction in the package."""
    out = []
    for n in (4, 6, 8, 9, 12):
        ring = build_zmod(n)
        out.append(hom_partition(ring))
    for q in (4, 8, 9):
        out.append(hamming_partition(build_gf(q)))
    m2f2 = build_matrix_ring(2, build_gf(2))
    out.append(rank_partition(m2f2))
    out.append(hom_partition(m2f2))
    gf3 = build_gf(3)
    sq = build_product([gf3, gf3])
    out.append(symmetrized_power_partition(sq, hamming_partition(gf3)))
    mixed = build_product([m2f2, build_gf(2)])
    out.append(
        product_partition(
            mixed, rank_partition(m2f2), hamming_partition(mixed.factors[1])
        )
    )
    out.append(hom_partition(mixed))
    return out


INVARIANT_PARTITIONS = _named_invariant_partitions()


# -- table mechanics and invariants ---------------------------------------------


def test_z4_table_by_hand(z4):
    """Every entry checked against a hand-evaluated character sum.

    With chi(x) = i^x and blocks {0}, {1,3}, {2}, the sums are small
    enough to write out: chi(1)+chi(3) = 0, chi(2) = -1, and so on.
    """
    char = canonical_generating_character(z4)
    table = krawtchouk_table(hom_partition(z4), char, "left")

    def c(k):
        counts = [0, 0, 0, 0]
        counts[k % 4] += 1
        return from_exponent_counts(4, counts)

    one = c(0)
    minus_one = c(2)
    assert table.entry(0, 0) == one
    assert table.entry(1, 0) == 2 * one
    assert table.entry(2, 0) == one
    assert table.entry(0, 1) == one
    assert table.entry(1, 1) == zero(4)
    assert table.entry(2, 1) == minus_one
    assert table.entry(1, 2) == 2 * minus_one
    assert table.entry(2, 2) == one
    assert table.column(3) == table.column(1)


@pytest.mark.parametrize(
    "partition", INVARIANT_PARTITIONS, ids=lambda p: f"{p.ring.expr}-{p.num_blocks}"
)
def test_table_invariants(partition):
    """Zero column lists block sizes; every other column sums to zero."""
    ring = partition.ring
    char = canonical_generating_character(ring)
    for side in ("left", "right"):
        table = krawtchouk_table(partition, char, side)
        for m, block in enumerate(partition.blocks):
            assert table.entry(m, 0).as_int() == len(block)
        for b in range(ring.size):
            total = zero(char.order)
            for m in range(partition.num_blocks):
                total = total + table.entry(m, b)
            expected = ring.size if b == 0 else 0
            assert total.as_int() == expected


def test_table_is_cached(z12):
    p = hom_partition(z12)
    char = canonical_generating_character(z12)
    assert krawtchouk_table(p, char, "left") is krawtchouk_table(p, char, "left")
    assert krawtchouk_table(p, char, "left") is not krawtchouk_table(p, char, "right")


def test_table_rejects_bad_inputs(z4, z6):
    p = hom_partition(z4)
    char = canonical_generating_character(z4)
    with pytest.raises(InvalidParameter):
        krawtchouk_table(p, char, "middle")
    with pytest.raises(InvalidParameter):
        krawtchouk_table(p, canonical_generating_character(z6), "left")
    from frobring.characters import Character

    non_gen = Character(z4, [0, 2, 0, 2])
    with pytest.raises(InvalidParameter):
        krawtchouk_table(p, non_gen, "left")


def test_table_json(z4):
    char = canonical_generating_character(z4)
    data = krawtchouk_table(hom_partition(z4), char, "left").to_json()
    assert data["ring"] == "Z4"
    assert data["side"] == "left"
    assert data["order"] == 4
    assert data["entries"][1][0] == [2, 0]  # block {1,3} at b = 0


# -- dual partitions -------------------------------------------------------------


def test_z4_weight_partition_is_self_dual(z4):
    p = hom_partition(z4)
    assert is_self_dual(p)
    assert is_reflexive(p)


def test_hamming_dual_is_hamming():
    for q in (2, 3, 4, 8, 9):
        ring = build_gf(q)
        p = hamming_partition(ring)
        assert is_self_dual(p)
        assert is_reflexive(p)
    f2xf2 = build_product([build_gf(2), build_gf(2)])
    p = hamming_partition(f2xf2)
    assert is_self_dual(p)


def test_singletons_dualize_to_singletons(z8):
    """A generating character separates elements, so the discrete

    partition is its own dual."""
    p = Partition(z8, [[x] for x in range(8)])
    char = canonical_generating_character(z8)
    assert equals(dual_partition(p, char, "left"), p)


@pytest.mark.parametrize(
    "partition", INVARIANT_PARTITIONS, ids=lambda p: f"{p.ring.expr}-{p.num_blocks}"
)
def test_block_count_never_drops_and_reflexive_iff_equal(partition):
    """The dual has at least as many blocks; equality marks reflexivity."""
    char = canonical_generating_character(partition.ring)
    for side in ("left", "right"):
        dual = dual_partition(partition, char, side)
        assert partition.num_blocks <= dual.num_blocks
    left = dual_partition(partition, char, "left")
    assert is_reflexive(partition, char) == (
        partition.num_blocks == left.num_blocks
    )


@pytest.mark.parametrize(
    "partition", INVARIANT_PARTITIONS, ids=lambda p: f"{p.ring.expr}-{p.num_blocks}"
)
def test_dual_blocks_refine_to_columns(partition):
    """Elements share a dual block exactly when their columns agree."""
    ring = partition.ring
    char = canonical_generating_character(ring)
    table = krawtchouk_table(partition, char, "left")
    dual = dual_partition(partition, char, "left")
    for block in dual.blocks:
        first = table.column(block[0])
        for b in block[1:]:
            assert table.column(b) == first
    # distinct blocks have distinct columns
    columns = [table.column(block[0]) for block in dual.blocks]
    assert len({tuple((e.order, e.coeffs) for e in col) for col in columns}) == len(
        columns
    )


@pytest.mark.parametrize(
    "partition",
    [p for p in INVARIANT_PARTITIONS if p.ring.size <= 81],
    ids=lambda p: f"{p.ring.expr}-{p.num_blocks}",
)
def test_character_choice_never_changes_the_tables(partition):
    assert character_independence_check(partition)


def test_dual_under_translated_character(z12):
    """Unit translates of the character leave the dual partition unchanged."""
    p = hom_partition(z12)
    base = canonical_generating_character(z12)
    reference = dual_partition(p, base, "left")
    for u in z12.units:
        char = translate(base, int(u), "left")
        assert equals(dual_partition(p, char, "left"), reference)


# -- left/right symmetry -----------------------------------------------------------


def test_commutative_rings_left_equals_right(z12):
    p = hom_partition(z12)
    assert left_right_agreement(p)


def test_matrix_ring_rank_partition_left_equals_right(m2f2):
    p = rank_partition(m2f2)
    char = canonical_generating_character(m2f2)
    assert is_symmetric(char)
    assert left_right_agreement(p, char)
    assert semisimple_lr_agreement(m2f2, p)


def test_semisimple_checker_rejections(z4, m2f2, ex5_5_ring):
    with pytest.raises(InvalidParameter):
        semisimple_lr_agreement(z4, hom_partition(z4))
    with pytest.raises(InvalidParameter):
        semisimple_lr_agreement(ex5_5_ring, ex5_5_partition(ex5_5_ring))
    with pytest.raises(InvalidParameter):
        semisimple_lr_agreement(m2f2, hom_partition(build_matrix_ring(2, build_gf(2))))
    # isolating the identity splits its unit orbit, breaking invariance
    split = Partition(
        m2f2, [[0], [m2f2.one], [x for x in range(1, 16) if x != m2f2.one]]
    )
    with pytest.raises(InvalidParameter):
        semisimple_lr_agreement(m2f2, split)


# -- the 16-element ring with asymmetric duals ---------------------------------------


def test_ex5_5_left_and_right_duals_differ(ex5_5_ring):
    p = ex5_5_partition(ex5_5_ring)
    char = canonical_generating_character(ex5_5_ring)
    left = dual_partition(p, char, "left")
    right = dual_partition(p, char, "right")
    assert left.num_blocks == 6
    assert right.num_blocks == 6
    assert sorted(left.block_sizes()) == [1, 1, 1, 1, 4, 8]
    assert sorted(right.block_sizes()) == [1, 1, 1, 1, 4, 8]
    assert not equals(left, right)
    # the size-4 and size-8 blocks swap between the two sides
    left_sets = {frozenset(b) for b in left.blocks}
    right_sets = {frozenset(b) for b in right.blocks}
    assert left_sets != right_sets


def test_ex5_5_weight_partition_tables_agree(ex5_5_ring):
    """The weight partition's left and right tables coincide entrywise,

    even though the ring itself tells left from right."""
    p = hom_partition(ex5_5_ring)
    char = canonical_generating_character(ex5_5_ring)
    left = krawtchouk_table(p, char, "left")
    right = krawtchouk_table(p, char, "right")
    assert same_entries(left, right)
    assert left_right_agreement(p, char)


def test_same_entries_distinguishes_partitions(z4, z6):
    a = krawtchouk_table(
        hom_partition(z4), canonical_generating_character(z4), "left"
    )
    coarse = Partition(z4, [[0], [1, 2, 3]])
    b = krawtchouk_table(coarse, canonical_generating_character(z4), "left")
    assert not same_entries(a, b)


# -- worked dualities -----------------------------------------------------------------


def _matrix_square(q):
    mat = build_matrix_ring(2, build_gf(q))
    return build_product([mat, mat]), mat


def test_matrix_square_q2_dual_is_symmetrized_rank():
    ring, mat = _matrix_square(2)
    hom = hom_partition(ring)
    char = canonical_generating_character(ring)
    dual = dual_partition(hom, char, "left")
    sym = symmetrized_power_partition(ring, rank_partition(mat))
    assert equals(dual, sym)
    assert not is_reflexive(hom, char)
    assert hom.num_blocks == 5 and dual.num_blocks == 6
    # the dual strictly refines the weight partition here
    assert is_finer(dual, hom)
    assert not is_finer(hom, dual)


def test_matrix_square_q3_weight_partition_self_dual():
    ring, _ = _matrix_square(3)
    hom = hom_partition(ring)
    char = canonical_generating_character(ring)
    assert equals(dual_partition(hom, char, "left"), hom)
    assert is_self_dual(hom, char)
    assert is_reflexive(hom, char)


def _matrix_by_field(q):
    fld = build_gf(q)
    mat = build_matrix_ring(2, fld)
    return build_product([mat, fld]), mat, fld


def test_matrix_by_field_q3_dual_is_product_partition():
    ring, mat, fld = _matrix_by_field(3)
    hom = hom_partition(ring)
    char = canonical_generating_character(ring)
    dual = dual_partition(hom, char, "left")
    prod = product_partition(ring, rank_partition(mat), hamming_partition(fld))
    assert equals(dual, prod)
    assert hom.num_blocks == 5 and dual.num_blocks == 6
    assert not is_reflexive(hom, char)


def test_matrix_by_field_q2_dual_reflexive_not_self_dual():
    ring, mat, fld = _matrix_by_field(2)
    hom = hom_partition(ring)
    char = canonical_generating_character(ring)
    dual = dual_partition(hom, char, "left")
    prod = product_partition(ring, rank_partition(mat), hamming_partition(fld))
    lab = {l: frozenset(b) for l, b in zip(prod.labels, prod.blocks)}
    stated = {
        lab[(0, (0,))],
        lab[(0, (1,))] | lab[(1, (1,))],
        lab[(1, (0,))] | lab[(2, (0,))],
        lab[(2, (1,))],
    }
    assert {frozenset(b) for b in dual.blocks} == stated
    assert hom.num_blocks == 4 and dual.num_blocks == 4
    assert is_reflexive(hom, char)
    assert not is_self_dual(hom, char)


# -- rank Krawtchouk closed form -------------------------------------------------------


def test_delsarte_frozen_values():
    assert delsarte_rank_krawtchouk(2, 2, 0, 0) == 1
    assert delsarte_rank_krawtchouk(2, 2, 0, 1) == 9
    assert delsarte_rank_krawtchouk(2, 2, 0, 2) == 6
    assert delsarte_rank_krawtchouk(2, 2, 2, 2) == 2


@pytest.mark.parametrize("q", [2, 3])
def test_delsarte_matches_character_sums_m2(q):
    ring = build_matrix_ring(2, build_gf(q))
    p = rank_partition(ring)
    char = canonical_generating_character(ring)
    table = krawtchouk_table(p, char, "left")
    for i in range(3):
        b = next(x for x in range(ring.size) if ring.rank(x) == i)
        for k in range(3):
            assert table.entry(k, b).as_int() == delsarte_rank_krawtchouk(2, q, i, k)


@pytest.mark.slow
def test_delsarte_matches_character_sums_m3():
    ring = build_matrix_ring(3, build_gf(2), max_size=600000)
    p = rank_partition(ring)
    char = canonical_generating_character(ring)
    table = krawtchouk_table(p, char, "left")
    for i in range(4):
        b = next(x for x in range(ring.size) if ring.rank(x) == i)
        for k in range(4):
            assert table.entry(k, b).as_int() == delsarte_rank_krawtchouk(3, 2, i, k)


def test_delsarte_row_sums():
    """Summing the closed form over k recovers the whole-ring count at i=0."""
    for m, q in [(1, 2), (2, 2), (2, 3), (3, 2)]:
        total = sum(delsarte_rank_krawtchouk(m, q, 0, k) for k in range(m + 1))
        assert total == q ** (m * m)


# -- property test ----------------------------------------------------------------------


@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_merging_weight_blocks_keeps_dual_block_bound(data):
    """Coarsenings of the weight partition are still invariant, and

    their duals never have fewer blocks."""
    n = data.draw(st.sampled_from([6, 8, 9, 12]))
    ring = build_zmod(n)
    hom = hom_partition(ring)
    if hom.num_blocks < 3:
        return
    i = data.draw(st.integers(min_value=1, max_value=hom.num_blocks - 2))
    blocks = [list(b) for k, b in enumerate(hom.blocks) if k not in (i, i + 1)]
    blocks.append(list(hom.blocks[i]) + list(hom.blocks[i + 1]))
    merged = Partition(ring, blocks)
    char = canonical_generating_character(ring)
    dual = dual_partition(merged, char, "left")
    assert merged.num_blocks <= dual.num_blocks
