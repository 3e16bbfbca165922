"""
Rank pairs versus weight on a square of matrix rings
====================================================

On M2(Fq) x M2(Fq) the weight of a pair depends only on the unordered
pair of ranks.  Whether different rank pairs can share a weight depends
on q: over GF(3) all six values are distinct, over GF(2) two cells
collapse into one.
"""

from frobring.partitions import (
    equals,
    hom_partition,
    is_finer,
    rank_partition,
    symmetrized_power_partition,
)
from frobring.rings import build_gf, build_matrix_ring, build_product
from frobring.weights import weight_table

for q in (2, 3):
    mat = build_matrix_ring(2, build_gf(q))
    ring = build_product([mat, mat])
    table = weight_table(ring)
    sym = symmetrized_power_partition(ring, rank_partition(mat))
    hom = hom_partition(ring)

    print(f"q = {q}: ring size {ring.size}")
    for label, block in zip(sym.labels, sym.blocks):
        w = table.weights[block[0]]
        print(f"  ranks {set(label)}: {len(block)} elements, weight {w}")
    if equals(hom, sym):
        print("  weight partition = rank-pair partition")
    else:
        # the rank-pair partition still refines the weight partition
        print(f"  rank-pair blocks: {sym.num_blocks}, weight blocks: {hom.num_blocks}")
        print(f"  refinement holds: {is_finer(sym, hom)}")
    print()
