"""Krawtchouk coefficients and dual partitions.

The left coefficient of block P_m at element b is the exact cyclotomic
sum of chi(a b) over a in P_m; the right coefficient sums chi(b a).
Grouping elements by their full coefficient column yields the left and
right dual partitions.  Everything is exact; two invariants are
asserted on every table: the b = 0 column lists the block sizes, and
each column sums to |R| exactly at b = 0 and to 0 elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import cyclotomic
from .characters import (Character, all_generating_characters,
                         canonical_generating_character, is_generating,
                         is_symmetric)
from .errors import InternalInconsistency, InvalidParameter
from .partitions import Partition, equals, is_invariant
from .rings import FiniteRing
from .weights import gaussian


@dataclass(frozen=True)
class KrawtchoukTable:
    """Exact character sums indexed by (block, element)."""

    partition: Partition
    char: Character
    side: str
    entries: tuple[tuple[cyclotomic.CycInt, ...], ...]

    def entry(self, m: int, b: int) -> cyclotomic.CycInt:
        return self.entries[m][b]

    def column(self, b: int) -> tuple[cyclotomic.CycInt, ...]:
        return tuple(row[b] for row in self.entries)

    def to_json(self) -> dict:
        return {
            "ring": self.partition.ring.expr,
            "side": self.side,
            "order": self.char.order,
            "partition": self.partition.to_json(),
            "entries": [[list(e.coeffs) for e in row] for row in self.entries],
        }


def same_entries(a: KrawtchoukTable, b: KrawtchoukTable) -> bool:
    """Entrywise exact equality of two tables over the same partition."""
    if a.partition.blocks != b.partition.blocks:
        return False
    return all(
        ea.order == eb.order and ea.coeffs == eb.coeffs
        for ra, rb in zip(a.entries, b.entries)
        for ea, eb in zip(ra, rb)
    )


def krawtchouk_table(partition: Partition, char: Character, side: str) -> KrawtchoukTable:
    if side not in ("left", "right"):
        raise InvalidParameter(f"side must be left or right, got {side!r}")
    ring = partition.ring
    if char.ring is not ring:
        raise InvalidParameter("character lives on a different ring")
    if not is_generating(char):
        raise InvalidParameter("character is not generating")
    cache = getattr(partition, "_kraw_cache", None)
    if cache is None:
        cache = partition._kraw_cache = {}
    cache_key = (char.key(), side)
    if cache_key in cache:
        return cache[cache_key]
    nblocks = partition.num_blocks
    order = char.order
    exps = char.exponents
    base = partition.block_of * order
    sizes = partition.block_sizes()
    rows: list[list] = [[None] * ring.size for _ in range(nblocks)]
    for b in range(ring.size):
        col = ring.mul_col(b) if side == "left" else ring.mul_row(b)
        counts = np.bincount(base + exps[col], minlength=nblocks * order)
        counts = counts.reshape(nblocks, order)
        column_total = 0
        for m in range(nblocks):
            ent = cyclotomic.from_exponent_counts(order, counts[m])
            rows[m][b] = ent
            if b == 0 and ent.as_int() != sizes[m]:
                raise InternalInconsistency(
                    f"column at 0 must list block sizes, block {m} gave {ent}"
                )
        total = cyclotomic.from_exponent_counts(order, counts.sum(axis=0)).as_int()
        if total != (ring.size if b == 0 else 0):
            raise InternalInconsistency(
                f"column at {b} sums to {total}, violating orthogonality"
            )
    table = KrawtchoukTable(
        partition, char, side, tuple(tuple(row) for row in rows)
    )
    cache[cache_key] = table
    return table


def dual_partition(partition: Partition, char: Character, side: str) -> Partition:
    """Group elements by exact equality of their full coefficient column."""
    table = krawtchouk_table(partition, char, side)
    groups: dict = {}
    for b in range(partition.ring.size):
        key = tuple(row[b].coeffs for row in table.entries)
        groups.setdefault(key, []).append(b)
    return Partition(partition.ring, list(groups.values()))


def is_self_dual(partition: Partition, char: Character | None = None) -> bool:
    if char is None:
        char = canonical_generating_character(partition.ring)
    return equals(partition, dual_partition(partition, char, "left"))


def is_reflexive(partition: Partition, char: Character | None = None) -> bool:
    """Does the partition equal its bidual?

    Decided twice: by comparing the right dual of the left dual with
    the partition itself, and by the block-count criterion |P| = |dual|.
    The two answers must coincide.
    """
    if char is None:
        char = canonical_generating_character(partition.ring)
    left_dual = dual_partition(partition, char, "left")
    bidual = dual_partition(left_dual, char, "right")
    by_bidual = equals(bidual, partition)
    by_count = partition.num_blocks == left_dual.num_blocks
    if by_bidual != by_count:
        raise InternalInconsistency(
            "bidual comparison and block-count criterion disagree"
        )
    return by_bidual


def left_right_agreement(partition: Partition, char: Character | None = None) -> bool:
    """Are the left and right Krawtchouk tables entrywise equal?

    Stronger than comparing the two dual partitions.
    """
    if char is None:
        char = canonical_generating_character(partition.ring)
    left = krawtchouk_table(partition, char, "left")
    right = krawtchouk_table(partition, char, "right")
    return same_entries(left, right)


def character_independence_check(partition: Partition, ring: FiniteRing | None = None) -> bool:
    """Do all generating characters give the same left/right tables?"""
    ring = ring or partition.ring
    if ring is not partition.ring:
        raise InvalidParameter("partition lives on a different ring")
    chars = all_generating_characters(ring)
    ref_left = krawtchouk_table(partition, chars[0], "left")
    ref_right = krawtchouk_table(partition, chars[0], "right")
    for char in chars[1:]:
        if not same_entries(ref_left, krawtchouk_table(partition, char, "left")):
            return False
        if not same_entries(ref_right, krawtchouk_table(partition, char, "right")):
            return False
    return True


def delsarte_rank_krawtchouk(m: int, q: int, i: int, k: int) -> int:
    """Closed-form rank-partition coefficient for m x m matrices over F_q.

    Equals the character sum over rank-k matrices B of chi(tr(B A)) for
    any rank-i matrix A.
    """
    if not (0 <= i <= m and 0 <= k <= m):
        raise InvalidParameter(f"need 0 <= i, k <= m, got i={i}, k={k}, m={m}")
    total = 0
    for j in range(k + 1):
        total += ((-1) ** (k - j) * q ** (j * m + comb(k - j, 2))
                  * gaussian(m - j, m - k, q) * gaussian(m - i, j, q))
    return total


def semisimple_lr_agreement(ring: FiniteRing, partition: Partition) -> bool:
    """Left/right table agreement on a semisimple ring, via a symmetric character."""
    if tuple(ring.radical) != (0,):
        raise InvalidParameter("ring is not semisimple")
    if partition.ring is not ring:
        raise InvalidParameter("partition lives on a different ring")
    if not is_invariant(partition):
        raise InvalidParameter("partition is not invariant")
    char = canonical_generating_character(ring)
    if not is_symmetric(char):
        for candidate in all_generating_characters(ring):
            if is_symmetric(candidate):
                char = candidate
                break
        else:
            raise InternalInconsistency(
                "semisimple ring without a symmetric generating character"
            )
    return left_right_agreement(partition, char)
