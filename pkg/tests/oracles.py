"""Independent reference computations used to pin down expected values.

Everything here derives results straight from definitions, along
routes the library does not use: ideals come from generator-closure
enumeration rather than annihilator formulas, weights from solving the
defining linear equations rather than character sums, subspace counts
from exhaustive span enumeration, and cyclotomic reductions from sympy
polynomial division.
"""

from __future__ import annotations

from fractions import Fraction


# -- ideal enumeration -------------------------------------------------------


def close_ideal(ring, seed, side: str) -> frozenset:
    """Smallest one-sided ideal containing the seed elements."""
    members = set(seed) | {0}
    changed = True
    while changed:
        changed = False
        current = list(members)
        for x in current:
            for r in range(ring.size):
                y = ring.mul(r, x) if side == "left" else ring.mul(x, r)
                if y not in members:
                    members.add(y)
                    changed = True
        current = list(members)
        for i, a in enumerate(current):
            for b in current[i:]:
                y = ring.add(a, b)
                if y not in members:
                    members.add(y)
                    changed = True
    return frozenset(members)


def principal_ideal_oracle(ring, x: int, side: str) -> frozenset:
    """One-sided principal ideal of a unital ring: all rx (or xr)."""
    if side == "left":
        return frozenset(ring.mul(r, x) for r in range(ring.size))
    return frozenset(ring.mul(x, r) for r in range(ring.size))


def all_ideals(ring, side: str) -> set[frozenset]:
    """Every one-sided ideal, by breadth-first generator extension."""
    zero = frozenset({0})
    found = {zero}
    queue = [zero]
    while queue:
        ideal = queue.pop()
        for g in range(ring.size):
            if g in ideal:
                continue
            bigger = close_ideal(ring, set(ideal) | {g}, side)
            if bigger not in found:
                found.add(bigger)
                queue.append(bigger)
    return found


def radical_oracle(ring) -> frozenset:
    """Jacobson radical as the intersection of maximal left ideals."""
    ideals = all_ideals(ring, "left")
    proper = [i for i in ideals if len(i) < ring.size]
    maximal = [
        i for i in proper
        if not any(i < j for j in proper)
    ]
    out = set(range(ring.size))
    for i in maximal:
        out &= i
    return frozenset(out)


def socle_oracle(ring, side: str) -> frozenset:
    """Socle as the sum of the minimal nonzero one-sided ideals."""
    ideals = all_ideals(ring, side)
    nonzero = [i for i in ideals if len(i) > 1]
    minimal = [
        i for i in nonzero
        if not any(j < i for j in nonzero)
    ]
    union = set()
    for i in minimal:
        union |= i
    return close_ideal(ring, union, side)


def is_frobenius_oracle(ring) -> bool:
    """Is the left socle a principal left ideal?"""
    soc = socle_oracle(ring, "left")
    return any(
        principal_ideal_oracle(ring, x, "left") == soc for x in soc
    )


def units_oracle(ring) -> list[int]:
    out = []
    for x in range(ring.size):
        for y in range(ring.size):
            if ring.mul(x, y) == ring.one and ring.mul(y, x) == ring.one:
                out.append(x)
                break
    return out


# -- homogeneous weight from the defining equations --------------------------


def homogeneous_weight_oracle(ring) -> list[Fraction]:
    """Solve for the weight directly from its defining equations.

    Unknowns: one weight per left-associate class (elements generating
    the same principal left ideal).  Equations: the weights over each
    distinct nonzero principal left ideal sum to the ideal size.  The
    solution must exist and be unique; anything else raises.
    """
    n = ring.size
    ideal_of = [principal_ideal_oracle(ring, x, "left") for x in range(n)]
    class_of: dict[frozenset, int] = {}
    classes: list[list[int]] = []
    for x in range(1, n):
        key = ideal_of[x]
        if key not in class_of:
            class_of[key] = len(classes)
            classes.append([])
        classes[class_of[key]].append(x)
    distinct_ideals = sorted(
        {ideal_of[x] for x in range(1, n)}, key=lambda i: (len(i), sorted(i))
    )
    rows = []
    for ideal in distinct_ideals:
        coeff = [Fraction(0)] * len(classes)
        for y in ideal:
            if y != 0:
                coeff[class_of[ideal_of[y]]] += 1
        rows.append((coeff, Fraction(len(ideal))))

    ncols = len(classes)
    pivots = {}
    for coeff, rhs in rows:
        coeff = list(coeff)
        for col, (pc, prhs) in pivots.items():
            factor = coeff[col]
            if factor:
                coeff = [a - factor * b for a, b in zip(coeff, pc)]
                rhs = rhs - factor * prhs
        lead = next((j for j, a in enumerate(coeff) if a), None)
        if lead is None:
            if rhs != 0:
                raise ArithmeticError("inconsistent weight equations")
            continue
        inv = Fraction(1) / coeff[lead]
        coeff = [a * inv for a in coeff]
        rhs = rhs * inv
        pivots[lead] = (coeff, rhs)
    if len(pivots) != ncols:
        raise ArithmeticError("weight equations do not determine the weight")
    values = [Fraction(0)] * ncols
    for col in sorted(pivots, reverse=True):
        coeff, rhs = pivots[col]
        acc = rhs
        for j in range(col + 1, ncols):
            acc -= coeff[j] * values[j]
        values[col] = acc
    weights = [Fraction(0)] * n
    for x in range(1, n):
        weights[x] = values[class_of[ideal_of[x]]]
    return weights


# -- linear algebra over small fields ----------------------------------------


def span_oracle(field, vectors) -> frozenset:
    """All linear combinations of the given tuples over a field ring."""
    dim = len(vectors[0]) if vectors else 0
    span = {tuple([0] * dim)}
    for vec in vectors:
        additions = []
        for scale in range(field.size):
            scaled = tuple(field.mul(scale, c) for c in vec)
            for base in span:
                additions.append(
                    tuple(field.add(a, b) for a, b in zip(base, scaled))
                )
        span.update(additions)
        # re-close under addition until stable
        changed = True
        while changed:
            changed = False
            current = list(span)
            for i, a in enumerate(current):
                for b in current[i:]:
                    s = tuple(field.add(x, y) for x, y in zip(a, b))
                    if s not in span:
                        span.add(s)
                        changed = True
    return frozenset(span)


def matrix_rank_oracle(matrix_ring, a: int) -> int:
    """Rank as log_q of the row-space size."""
    digits = matrix_ring.matrix_of(a)
    field = matrix_ring.field
    rows = [tuple(int(c) for c in row) for row in digits]
    size = len(span_oracle(field, rows))
    rank = 0
    while field.size ** rank < size:
        rank += 1
    assert field.size ** rank == size
    return rank


def count_subspaces_oracle(field, m: int, r: int) -> int:
    """Number of r-dimensional subspaces of field^m by span enumeration."""
    all_vecs = _all_vectors(field, m)
    zero_space = frozenset({tuple([0] * m)})
    seen = {zero_space}
    frontier = [zero_space]
    result = 1 if r == 0 else 0
    while frontier:
        space = frontier.pop()
        for v in all_vecs:
            if v in space:
                continue
            bigger = span_oracle(field, list(space) + [v])
            if bigger not in seen:
                seen.add(bigger)
                frontier.append(bigger)
                dim = 0
                while field.size ** dim < len(bigger):
                    dim += 1
                if dim == r:
                    result += 1
    return result


def _all_vectors(field, m: int):
    vecs = [()]
    for _ in range(m):
        vecs = [v + (c,) for v in vecs for c in range(field.size)]
    return vecs


# -- cyclotomic reduction through sympy ---------------------------------------


def sympy_cyclotomic_coeffs(order: int) -> tuple[int, ...]:
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(order, x), x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def sympy_reduce_exponents(order: int, counts) -> tuple[int, ...]:
    """Reduce sum_k counts[k] * x^k modulo the order-th cyclotomic polynomial."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(int(c) * x**k for k, c in enumerate(counts))
    phi = sympy.Poly(sympy.cyclotomic_poly(order, x), x)
    rem = sympy.Poly(expr, x).rem(phi)
    coeffs = [int(c) for c in reversed(rem.all_coeffs())]
    degree = phi.degree()
    coeffs += [0] * (degree - len(coeffs))
    return tuple(coeffs[:degree])
