"""Finite unital rings on dense integer indices.

Every ring here has elements 0..size-1 with index 0 the zero element.
Arithmetic is exposed three ways: scalar ``add``/``mul``/``neg``,
whole Cayley tables (cached as numpy arrays when the ring is small
enough), and vector kernels ``add_row``/``mul_row``/``mul_col`` that
compute one row or column of a table on demand.  The kernels are what
keep character sums and weight computations fast on rings too large to
table, e.g. products of matrix rings.

Families: integers mod n, Galois fields, full matrix rings over a
Galois field, finite direct products, and explicit table rings loaded
from Cayley data.  Derived structure (units, Jacobson radical, socles,
principal ideals, the radical quotient) is computed by the defining
property in each case, exhaustively over element indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iter_product
from math import gcd

import numpy as np

from .errors import (
    InternalInconsistency,
    InvalidParameter,
    InvalidRing,
    ResourceLimit,
)

DEFAULT_SIZE_GUARD = 10000
DEFAULT_TABLE_THRESHOLD = 4096

_EXHAUSTIVE_CHECK_LIMIT = 512


def _factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, multiplicity) pairs, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _check_size(size: int, max_size: int | None) -> None:
    guard = DEFAULT_SIZE_GUARD if max_size is None else max_size
    if size > guard:
        raise ResourceLimit(f"ring of size {size} exceeds the size guard {guard}")


class FiniteRing:
    """Common behavior for all ring families.

    Subclasses must set ``size``, ``one``, ``expr`` and implement the
    scalar operations; the vector kernels have generic fallbacks but
    every family overrides them with something faster.
    """

    size: int
    one: int
    expr: str
    structure: list[tuple[int, int]] | None = None
    zero = 0

    def __init__(self, table_threshold: int | None = None):
        self.table_threshold = (
            DEFAULT_TABLE_THRESHOLD if table_threshold is None else table_threshold
        )

    # -- scalar operations ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- vector kernels ----------------------------------------------------

    def _indices(self, sel) -> np.ndarray:
        if sel is None:
            cached = getattr(self, "_arange", None)
            if cached is None:
                cached = np.arange(self.size, dtype=np.int64)
                self._arange = cached
            return cached
        return np.asarray(sel, dtype=np.int64)

    def add_row(self, a: int, cols=None) -> np.ndarray:
        """Vector of a + b over b in cols (all elements by default)."""
        table = self.add_table
        if table is not None:
            row = table[a] if cols is None else table[a, np.asarray(cols)]
            return row.astype(np.int64)
        return self._add_row_impl(a, cols)

    def mul_row(self, a: int, cols=None) -> np.ndarray:
        """Vector of a * b over b in cols."""
        table = self.mul_table
        if table is not None:
            row = table[a] if cols is None else table[a, np.asarray(cols)]
            return row.astype(np.int64)
        return self._mul_row_impl(a, cols)

    def mul_col(self, b: int, rows=None) -> np.ndarray:
        """Vector of a * b over a in rows."""
        table = self.mul_table
        if table is not None:
            col = table[:, b] if rows is None else table[np.asarray(rows), b]
            return col.astype(np.int64)
        return self._mul_col_impl(b, rows)

    def _add_row_impl(self, a, cols):
        idx = self._indices(cols)
        return np.array([self.add(a, int(b)) for b in idx], dtype=np.int64)

    def _mul_row_impl(self, a, cols):
        idx = self._indices(cols)
        return np.array([self.mul(a, int(b)) for b in idx], dtype=np.int64)

    def _mul_col_impl(self, b, rows):
        idx = self._indices(rows)
        return np.array([self.mul(int(a), b) for a in idx], dtype=np.int64)

    # -- cached tables -----------------------------------------------------

    @cached_property
    def add_table(self) -> np.ndarray | None:
        if self.size > self.table_threshold:
            return None
        return self._build_add_table()

    @cached_property
    def mul_table(self) -> np.ndarray | None:
        if self.size > self.table_threshold:
            return None
        return self._build_mul_table()

    def _build_add_table(self) -> np.ndarray:
        return np.vstack(
            [self._add_row_impl(a, None) for a in range(self.size)]
        ).astype(np.int32)

    def _build_mul_table(self) -> np.ndarray:
        return np.vstack(
            [self._mul_row_impl(a, None) for a in range(self.size)]
        ).astype(np.int32)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return self._build_neg_table()

    def _build_neg_table(self) -> np.ndarray:
        out = np.empty(self.size, dtype=np.int64)
        for a in range(self.size):
            zeros = np.flatnonzero(self.add_row(a) == 0)
            out[a] = zeros[0]
        return out

    # -- derived structure ---------------------------------------------------

    @cached_property
    def characteristic(self) -> int:
        """Additive order of 1; equals the additive exponent of (R,+)."""
        c = 1
        acc = self.one
        while acc != 0:
            acc = self.add(acc, self.one)
            c += 1
        if self.size <= _EXHAUSTIVE_CHECK_LIMIT:
            for x in range(self.size):
                y = 0
                for _ in range(c):
                    y = self.add(y, x)
                if y != 0:
                    raise InternalInconsistency(
                        f"element {x} has additive order not dividing {c}"
                    )
        return c

    @property
    def additive_exponent(self) -> int:
        return self.characteristic

    @cached_property
    def is_commutative(self) -> bool:
        for a in range(self.size):
            if not np.array_equal(self.mul_row(a), self.mul_col(a)):
                return False
        return True

    @property
    def is_field(self) -> bool:
        return False

    @cached_property
    def units(self) -> tuple[int, ...]:
        return self._compute_units()

    def _compute_units(self) -> tuple[int, ...]:
        # brute-force two-sided inverse search
        one = self.one
        out = []
        for x in range(self.size):
            for y in np.flatnonzero(self.mul_row(x) == one):
                if self.mul(int(y), x) == one:
                    out.append(x)
                    break
        return tuple(out)

    @cached_property
    def is_unit_mask(self) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        mask[list(self.units)] = True
        return mask

    @cached_property
    def radical(self) -> tuple[int, ...]:
        """Jacobson radical: x such that 1 - r*x is a unit for every r."""
        one_plus = self.add_row(self.one)
        neg = self.neg_table
        is_unit = self.is_unit_mask
        out = []
        for x in range(self.size):
            rx = self.mul_col(x)
            if is_unit[one_plus[neg[rx]]].all():
                out.append(x)
        return tuple(out)

    def socle_members(self, side: str = "left") -> tuple[int, ...]:
        """Annihilator of the radical: the left or right socle."""
        if side not in ("left", "right"):
            raise InvalidParameter(f"side must be 'left' or 'right', got {side!r}")
        cache = getattr(self, "_socle_cache", None)
        if cache is None:
            cache = self._socle_cache = {}
        if side not in cache:
            mask = np.ones(self.size, dtype=bool)
            for j in self.radical:
                jr = self.mul_row(j) if side == "left" else self.mul_col(j)
                mask &= jr == 0
            cache[side] = tuple(int(x) for x in np.flatnonzero(mask))
        return cache[side]

    def principal_ideal_members(self, x: int, side: str = "left") -> tuple[int, ...]:
        if side not in ("left", "right"):
            raise InvalidParameter(f"side must be 'left' or 'right', got {side!r}")
        if not 0 <= x < self.size:
            raise InvalidParameter(f"element index {x} out of range")
        products = self.mul_col(x) if side == "left" else self.mul_row(x)
        return tuple(int(v) for v in np.unique(products))

    @cached_property
    def is_frobenius(self) -> bool:
        """True iff each socle is generated by a single element on its side."""
        soc_l = self.socle_members("left")
        soc_r = self.socle_members("right")
        left_ok = any(
            self.principal_ideal_members(a, "left") == soc_l for a in soc_l
        )
        right_ok = any(
            self.principal_ideal_members(a, "right") == soc_r for a in soc_r
        )
        if left_ok != right_ok:
            raise InternalInconsistency(
                "one-sided principal-socle conditions disagree; they are "
                "equivalent for finite rings"
            )
        if left_ok and soc_l != soc_r:
            raise InternalInconsistency(
                "left and right socles differ on a ring with principal socles"
            )
        return left_ok and right_ok

    def quotient_by_radical(self):
        """Quotient ring R/rad(R) as a table ring, plus the projection map.

        Cosets are indexed in order of first appearance when scanning
        element indices upward, so the zero coset gets index 0.
        """
        cached = getattr(self, "_quotient_cache", None)
        if cached is not None:
            return cached
        rad = list(self.radical)
        if rad == [0]:
            # already semisimple: the quotient is the ring itself
            self._quotient_cache = (self, list(range(self.size)))
            return self._quotient_cache
        n = self.size
        pi = [-1] * n
        reps = []
        for x in range(n):
            if pi[x] >= 0:
                continue
            idx = len(reps)
            reps.append(x)
            for y in self.add_row(x, rad):
                pi[int(y)] = idx
        m = len(reps)
        qadd = [[pi[self.add(a, b)] for b in reps] for a in reps]
        qmul = [[pi[self.mul(a, b)] for b in reps] for a in reps]
        spec = TableRingSpec(
            size=m,
            add=qadd,
            mul=qmul,
            one=pi[self.one],
            name=f"{self.expr} mod radical",
        )
        qring = build_table_ring(spec, max_size=self.size)
        qring.structure = self.structure
        self._quotient_cache = (qring, pi)
        return self._quotient_cache

    # -- presentation --------------------------------------------------------

    def element_label(self, i: int) -> str:
        return str(i)

    def describe(self) -> dict:
        soc_l = self.socle_members("left")
        soc_r = self.socle_members("right")
        return {
            "ring": self.expr,
            "size": self.size,
            "characteristic": self.characteristic,
            "is_commutative": self.is_commutative,
            "units": len(self.units),
            "radical_size": len(self.radical),
            "socle_left_size": len(soc_l),
            "socle_right_size": len(soc_r),
            "is_frobenius": self.is_frobenius,
            "structure": [list(t) for t in self.structure] if self.structure else None,
        }

    def __repr__(self):
        return f"<{type(self).__name__} {self.expr} (size {self.size})>"


class ZmodRing(FiniteRing):
    """Integers modulo n."""

    def __init__(self, n: int, table_threshold: int | None = None):
        if n < 1:
            raise InvalidParameter(f"modulus must be >= 1, got {n}")
        super().__init__(table_threshold)
        self.modulus = n
        self.size = n
        self.one = 1 % n
        self.expr = f"Z{n}"
        self.structure = [(p, 1) for p, _ in _factorize(n)] if n > 1 else []

    def add(self, a, b):
        return (a + b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def _add_row_impl(self, a, cols):
        return (self._indices(cols) + a) % self.modulus

    def _mul_row_impl(self, a, cols):
        return (self._indices(cols) * a) % self.modulus

    def _mul_col_impl(self, b, rows):
        return (self._indices(rows) * b) % self.modulus

    def _build_neg_table(self):
        return (-np.arange(self.size, dtype=np.int64)) % self.modulus

    @cached_property
    def is_commutative(self):
        return True

    @property
    def is_field(self):
        return self.modulus > 1 and _factorize(self.modulus)[0] == (self.modulus, 1)

    def _compute_units(self):
        return tuple(x for x in range(self.size) if gcd(x, self.modulus) == 1)


class GaloisField(FiniteRing):
    """The field with q = p^k elements.

    Elements are polynomials over Z_p of degree < k modulo a fixed monic
    irreducible f.  The modulus is the monic irreducible of degree k
    whose coefficient tuple (constant term first) is lexicographically
    least, so the construction is reproducible.  Element index encodes
    the coefficients in base p with the constant term as the least
    significant digit.
    """

    def __init__(self, q: int, table_threshold: int | None = None):
        factors = _factorize(q) if q > 1 else []
        if len(factors) != 1:
            raise InvalidParameter(f"{q} is not a prime power")
        super().__init__(table_threshold)
        p, k = factors[0]
        self.p = p
        self.k = k
        self.size = q
        self.one = 1
        self.expr = f"GF({q})"
        self.structure = [(q, 1)]
        self.modulus_poly = self._least_irreducible(p, k)
        # digit matrix: row i holds the coefficients of element i
        i = np.arange(q, dtype=np.int64)
        self._digits = np.stack([(i // p**j) % p for j in range(k)], axis=1)
        self._pows = p ** np.arange(k, dtype=np.int64)
        # x^j mod f for j < 2k-1, as rows of coefficients mod p
        self._xrows = self._power_rows()

    @staticmethod
    def _least_irreducible(p: int, k: int) -> tuple[int, ...]:
        if k == 1:
            return (0, 1)  # f = x, so GF(p) is Z_p with the same indexing

        def poly_mod(num, den):
            num = list(num)
            dd = len(den) - 1
            inv_lead = pow(den[-1], -1, p)
            for i in range(len(num) - 1, dd - 1, -1):
                c = num[i] * inv_lead % p
                if c:
                    for j in range(dd + 1):
                        num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
            while len(num) > 1 and num[-1] == 0:
                num.pop()
            return num

        def divisible(f, d):
            r = poly_mod(f, d)
            return len(r) == 1 and r[0] == 0

        for tail in iter_product(range(p), repeat=k):
            f = (*tail, 1)
            if f[0] == 0:
                continue
            reducible = False
            for deg in range(1, k // 2 + 1):
                for dt in iter_product(range(p), repeat=deg):
                    if divisible(f, (*dt, 1)):
                        reducible = True
                        break
                if reducible:
                    break
            if not reducible:
                return f
        raise InternalInconsistency(f"no irreducible of degree {k} over GF({p})")

    def _power_rows(self) -> np.ndarray:
        k, p = self.k, self.p
        rows = [[0] * k for _ in range(2 * k - 1)]
        cur = [0] * k
        cur[0] = 1
        for j in range(2 * k - 1):
            rows[j] = list(cur)
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for t in range(k):
                    cur[t] = (cur[t] - lead * self.modulus_poly[t]) % p
        return np.array(rows, dtype=np.int64) % p

    def _encode(self, coeff_rows: np.ndarray) -> np.ndarray:
        return coeff_rows @ self._pows

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        return int(self._encode((self._digits[a] + self._digits[b]) % self.p))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        conv = np.convolve(self._digits[a], self._digits[b])
        reduced = (conv @ self._xrows[: len(conv)]) % self.p
        return int(self._encode(reduced))

    def _add_row_impl(self, a, cols):
        if self.k == 1:
            return (self._indices(cols) + a) % self.p
        rows = (self._digits[a] + self._digits[self._indices(cols)]) % self.p
        return self._encode(rows)

    def _mul_row_impl(self, a, cols):
        if self.k == 1:
            return (self._indices(cols) * a) % self.p
        da = self._digits[a]
        db = self._digits[self._indices(cols)]
        conv = np.zeros((db.shape[0], 2 * self.k - 1), dtype=np.int64)
        for j in range(self.k):
            if da[j]:
                conv[:, j : j + self.k] += da[j] * db
        reduced = (conv @ self._xrows) % self.p
        return self._encode(reduced)

    def _mul_col_impl(self, b, rows):
        return self._mul_row_impl(b, rows)  # fields are commutative

    def _build_neg_table(self):
        return self._encode((-self._digits) % self.p)

    @cached_property
    def is_commutative(self):
        return True

    @property
    def is_field(self):
        return True

    def _compute_units(self):
        return tuple(range(1, self.size))

    def pow(self, x: int, e: int) -> int:
        acc = self.one
        base = x
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def inv(self, x: int) -> int:
        if x == 0:
            raise InvalidParameter("0 has no inverse")
        return self.pow(x, self.size - 2)

    @cached_property
    def trace_exponents(self) -> np.ndarray:
        """Absolute trace of every element, as an integer in 0..p-1.

        Prime-subfield elements are the constants, whose index equals
        their value, so the trace lands directly in 0..p-1.
        """
        if self.k == 1:
            return np.arange(self.size, dtype=np.int64)
        frob = np.array([self.pow(x, self.p) for x in range(self.size)], dtype=np.int64)
        total = np.arange(self.size, dtype=np.int64)
        cur = np.arange(self.size, dtype=np.int64)
        for _ in range(self.k - 1):
            cur = frob[cur]
            total = self._encode((self._digits[total] + self._digits[cur]) % self.p)
        if (total >= self.p).any():
            raise InternalInconsistency("trace left the prime subfield")
        return total


class MatrixRing(FiniteRing):
    """Full m-by-m matrix ring over a Galois field.

    Element index encodes the matrix entries as base-q digits in
    row-major reading order, the (0,0) entry most significant.
    """

    def __init__(self, m: int, fld: GaloisField, table_threshold: int | None = None,
                 max_size: int | None = None):
        if not isinstance(fld, GaloisField):
            raise InvalidParameter("matrix rings require a GaloisField scalar field")
        if m < 1:
            raise InvalidParameter(f"matrix dimension must be >= 1, got {m}")
        size = fld.size ** (m * m)
        _check_size(size, max_size)
        super().__init__(table_threshold)
        self.m = m
        self.field = fld
        q = fld.size
        self.size = size
        self.expr = f"M({m},{fld.expr})"
        self.structure = [(q, m)]
        npos = m * m
        self._weights = q ** np.arange(npos - 1, -1, -1, dtype=np.int64)
        i = np.arange(size, dtype=np.int64)
        digits = np.stack([(i // self._weights[pos]) % q for pos in range(npos)], axis=1)
        self._digits = digits.reshape(size, m, m)
        self.one = int(self.encode(np.eye(m, dtype=np.int64) * fld.one))
        fadd = fld.add_table
        fmul = fld.mul_table
        if fadd is None or fmul is None:
            raise InvalidParameter(
                f"scalar field {fld.expr} is too large to table; "
                "lower the matrix size guard instead"
            )
        self._fadd = fadd.astype(np.int64)
        self._fmul = fmul.astype(np.int64)

    def encode(self, mats: np.ndarray) -> np.ndarray:
        flat = np.asarray(mats, dtype=np.int64).reshape(*np.shape(mats)[:-2], -1)
        return flat @ self._weights

    def matrix_of(self, a: int) -> np.ndarray:
        return self._digits[a].copy()

    def add(self, a, b):
        return int(self.encode(self._fadd[self._digits[a], self._digits[b]]))

    def mul(self, a, b):
        A, B = self._digits[a], self._digits[b]
        m = self.m
        C = np.zeros((m, m), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                acc = self._fmul[A[i, 0], B[0, j]]
                for k in range(1, m):
                    acc = self._fadd[acc, self._fmul[A[i, k], B[k, j]]]
                C[i, j] = acc
        return int(self.encode(C))

    def _add_row_impl(self, a, cols):
        B = self._digits[self._indices(cols)]
        return self.encode(self._fadd[self._digits[a][None, :, :], B])

    def _mul_row_impl(self, a, cols):
        A = self._digits[a]
        B = self._digits[self._indices(cols)]
        m = self.m
        C = np.zeros((B.shape[0], m, m), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                acc = self._fmul[A[i, 0], B[:, 0, j]]
                for k in range(1, m):
                    acc = self._fadd[acc, self._fmul[A[i, k], B[:, k, j]]]
                C[:, i, j] = acc
        return self.encode(C)

    def _mul_col_impl(self, b, rows):
        A = self._digits[self._indices(rows)]
        B = self._digits[b]
        m = self.m
        C = np.zeros((A.shape[0], m, m), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                acc = self._fmul[A[:, i, 0], B[0, j]]
                for k in range(1, m):
                    acc = self._fadd[acc, self._fmul[A[:, i, k], B[k, j]]]
                C[:, i, j] = acc
        return self.encode(C)

    def _build_neg_table(self):
        return self.encode(self.field.neg_table[self._digits])

    @cached_property
    def is_commutative(self):
        return self.m == 1

    @property
    def is_field(self):
        return self.m == 1

    def rank(self, a: int) -> int:
        """Rank of the matrix, by Gaussian elimination over the field."""
        fld = self.field
        rows = [list(map(int, r)) for r in self._digits[a]]
        m = self.m
        rank = 0
        col = 0
        while rank < m and col < m:
            pivot = next((r for r in range(rank, m) if rows[r][col] != 0), None)
            if pivot is None:
                col += 1
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = fld.inv(rows[rank][col])
            rows[rank] = [fld.mul(inv, v) for v in rows[rank]]
            for r in range(m):
                if r != rank and rows[r][col] != 0:
                    c = rows[r][col]
                    rows[r] = [
                        fld.sub(v, fld.mul(c, w)) for v, w in zip(rows[r], rows[rank])
                    ]
            rank += 1
            col += 1
        return rank

    @cached_property
    def ranks(self) -> np.ndarray:
        return np.array([self.rank(a) for a in range(self.size)], dtype=np.int64)

    def trace(self, a: int) -> int:
        acc = int(self._digits[a][0, 0])
        for i in range(1, self.m):
            acc = int(self._fadd[acc, self._digits[a][i, i]])
        return acc

    @cached_property
    def trace_all(self) -> np.ndarray:
        acc = self._digits[:, 0, 0]
        for i in range(1, self.m):
            acc = self._fadd[acc, self._digits[:, i, i]]
        return acc

    def _compute_units(self):
        return tuple(int(x) for x in np.flatnonzero(self.ranks == self.m))

    def element_label(self, i):
        return "[" + ",".join(
            "[" + ",".join(str(int(v)) for v in row) + "]" for row in self._digits[i]
        ) + "]"


class ProductRing(FiniteRing):
    """Direct product of rings with componentwise operations.

    Element index is the mixed-radix encoding of the component indices,
    first factor most significant.  The encoding is associative: nesting
    products yields the same indexing as one flat product.
    """

    def __init__(self, factors, table_threshold: int | None = None,
                 max_size: int | None = None):
        factors = tuple(factors)
        if len(factors) < 2:
            raise InvalidParameter("ProductRing wants at least two factors")
        size = 1
        for f in factors:
            size *= f.size
        _check_size(size, max_size)
        super().__init__(table_threshold)
        self.factors = factors
        self.sizes = tuple(f.size for f in factors)
        strides = [1] * len(factors)
        for i in range(len(factors) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.sizes[i + 1]
        self.strides = tuple(strides)
        self.size = size
        self.one = self.encode(tuple(f.one for f in factors))
        self.expr = " x ".join(f.expr for f in factors)
        parts = [f.structure for f in factors]
        self.structure = (
            [t for part in parts for t in part] if all(p is not None for p in parts) else None
        )

    def encode(self, comps) -> int:
        return sum(c * s for c, s in zip(comps, self.strides))

    def decode(self, a: int) -> tuple[int, ...]:
        return tuple((a // s) % sz for s, sz in zip(self.strides, self.sizes))

    @cached_property
    def _dec(self) -> np.ndarray:
        i = np.arange(self.size, dtype=np.int64)
        return np.stack(
            [(i // s) % sz for s, sz in zip(self.strides, self.sizes)], axis=1
        )

    def add(self, a, b):
        da, db = self.decode(a), self.decode(b)
        return self.encode(tuple(f.add(x, y) for f, x, y in zip(self.factors, da, db)))

    def mul(self, a, b):
        da, db = self.decode(a), self.decode(b)
        return self.encode(tuple(f.mul(x, y) for f, x, y in zip(self.factors, da, db)))

    def _combine(self, factor_rows, cols):
        dec = self._dec if cols is None else self._dec[np.asarray(cols)]
        acc = np.zeros(dec.shape[0], dtype=np.int64)
        for i, (row, s) in enumerate(zip(factor_rows, self.strides)):
            acc += s * row[dec[:, i]]
        return acc

    def _add_row_impl(self, a, cols):
        da = self.decode(a)
        return self._combine(
            [f.add_row(x) for f, x in zip(self.factors, da)], cols
        )

    def _mul_row_impl(self, a, cols):
        da = self.decode(a)
        return self._combine(
            [f.mul_row(x) for f, x in zip(self.factors, da)], cols
        )

    def _mul_col_impl(self, b, rows):
        db = self.decode(b)
        return self._combine(
            [f.mul_col(y) for f, y in zip(self.factors, db)], rows
        )

    def _build_neg_table(self):
        acc = np.zeros(self.size, dtype=np.int64)
        for i, (f, s) in enumerate(zip(self.factors, self.strides)):
            acc += s * f.neg_table[self._dec[:, i]]
        return acc

    @cached_property
    def characteristic(self):
        c = 1
        for f in self.factors:
            c = _lcm(c, f.characteristic)
        return c

    @cached_property
    def is_commutative(self):
        return all(f.is_commutative for f in self.factors)

    def _compute_units(self):
        out = [
            self.encode(combo)
            for combo in iter_product(*(f.units for f in self.factors))
        ]
        return tuple(sorted(out))

    def element_label(self, i):
        comps = self.decode(i)
        return "(" + ",".join(
            f.element_label(c) for f, c in zip(self.factors, comps)
        ) + ")"


class TableRing(FiniteRing):
    """A ring given by explicit Cayley tables."""

    def __init__(self, add_table: np.ndarray, mul_table: np.ndarray, one: int,
                 name: str | None = None, char_exponents=None):
        super().__init__(table_threshold=add_table.shape[0])
        self.size = add_table.shape[0]
        self.one = one
        self.spec_name = name
        self.expr = name or f"table ring of size {self.size}"
        self._add = add_table
        self._mul = mul_table
        self.char_exponents = (
            None if char_exponents is None else np.asarray(char_exponents, dtype=np.int64)
        )

    def add(self, a, b):
        return int(self._add[a, b])

    def mul(self, a, b):
        return int(self._mul[a, b])

    @cached_property
    def add_table(self):
        return self._add

    @cached_property
    def mul_table(self):
        return self._mul


@dataclass(frozen=True)
class IdealSet:
    """A one- or two-sided ideal as a sorted member tuple."""

    ring: FiniteRing
    members: tuple[int, ...]
    side: str

    def __contains__(self, x):
        return x in set(self.members)

    def __len__(self):
        return len(self.members)


def _validate_ideal(ring: FiniteRing, members: tuple[int, ...], side: str) -> None:
    member_mask = np.zeros(ring.size, dtype=bool)
    member_mask[list(members)] = True
    for x in members:
        if not member_mask[ring.add_row(x, members)].all():
            raise InternalInconsistency(f"set not closed under addition at {x}")
        if side in ("left", "two-sided"):
            if not member_mask[ring.mul_col(x)].all():
                raise InternalInconsistency(f"set not closed under left scaling at {x}")
        if side in ("right", "two-sided"):
            if not member_mask[ring.mul_row(x)].all():
                raise InternalInconsistency(f"set not closed under right scaling at {x}")


@dataclass
class TableRingSpec:
    """Cayley data for a table ring, as carried by the JSON format."""

    size: int
    add: list
    mul: list
    one: int
    char_exponents: list | None = None
    name: str | None = None


def _as_table(data, size, what) -> np.ndarray:
    arr = np.asarray(data)
    if arr.shape != (size, size) or not np.issubdtype(arr.dtype, np.integer):
        raise InvalidParameter(f"{what} table must be a {size}x{size} integer matrix")
    if arr.min() < 0 or arr.max() >= size:
        raise InvalidParameter(f"{what} table entries must lie in 0..{size - 1}")
    return arr.astype(np.int32)


def validate_tables(add: np.ndarray, mul: np.ndarray, one: int) -> None:
    """Check all ring axioms on the given tables, exhaustively.

    Raises InvalidRing with the first offending element pair or triple.
    """
    n = add.shape[0]
    arange = np.arange(n)
    if not np.array_equal(add[0], arange):
        b = int(np.flatnonzero(add[0] != arange)[0])
        raise InvalidRing(f"0 + {b} != {b}", witness=(0, b))
    if not np.array_equal(add, add.T):
        a, b = map(int, np.argwhere(add != add.T)[0])
        raise InvalidRing(f"{a} + {b} != {b} + {a}", witness=(a, b))
    counts = np.apply_along_axis(np.bincount, 1, add, minlength=n)
    if not (counts == 1).all():
        a = int(np.argwhere(counts != 1)[0][0])
        raise InvalidRing(f"row {a} of the addition table is not a permutation",
                          witness=(a,))
    if not (0 <= one < n) or not np.array_equal(mul[one], arange) or not np.array_equal(
        mul[:, one], arange
    ):
        raise InvalidRing(f"element {one} is not a two-sided identity", witness=(one,))
    add64 = add.astype(np.int64)
    mul64 = mul.astype(np.int64)
    for a in range(n):
        lhs = add64[add64[a]]
        rhs = add64[a][add64]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise InvalidRing(f"addition is not associative at ({a},{b},{c})",
                              witness=(a, b, c))
        lhs = mul64[mul64[a]]
        rhs = mul64[a][mul64]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise InvalidRing(f"multiplication is not associative at ({a},{b},{c})",
                              witness=(a, b, c))
        row = mul64[a]
        lhs = row[add64]
        rhs = add64[np.ix_(row, row)]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise InvalidRing(f"left distributivity fails at ({a},{b},{c})",
                              witness=(a, b, c))
        col = mul64[:, a]
        lhs = col[add64]
        rhs = add64[np.ix_(col, col)]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise InvalidRing(f"right distributivity fails at ({a},{b},{c})",
                              witness=(a, b, c))


def _ex5_5_spec() -> TableRingSpec:
    """A 16-element noncommutative Frobenius ring that is not semisimple.

    Elements are parameterized by four bits (a,b,c,d), realized as the
    4x4 binary matrices with rows (a,0,0,0), (0,a,b,0), (0,0,c,0),
    (d,0,0,c).  Index packs the bits as a*8 + b*4 + c*2 + d.  The
    supplied character exponents a+b+c+d mod 2 define a generating
    character.
    """
    def params(i):
        return ((i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1)

    def index(t):
        a, b, c, d = t
        return a * 8 + b * 4 + c * 2 + d

    def mul(x, y):
        a, b, c, d = params(x)
        e, f, g, h = params(y)
        return index(((a * e) % 2, (a * f + b * g) % 2, (c * g) % 2, (d * e + c * h) % 2))

    def add(x, y):
        return x ^ y  # componentwise mod 2 on packed bits

    n = 16
    return TableRingSpec(
        size=n,
        add=[[add(x, y) for y in range(n)] for x in range(n)],
        mul=[[mul(x, y) for y in range(n)] for x in range(n)],
        one=index((1, 0, 1, 0)),
        char_exponents=[sum(params(x)) % 2 for x in range(n)],
        name="ex5_5",
    )


BUILTIN_TABLE_SPECS = {"ex5_5": _ex5_5_spec}


def builtin_table_spec(name: str) -> TableRingSpec:
    try:
        return BUILTIN_TABLE_SPECS[name]()
    except KeyError:
        raise InvalidParameter(f"unknown builtin ring {name!r}") from None


def load_table_spec(path: str) -> TableRingSpec:
    """Read a table-ring JSON file: size, add, mul, one, optional extras."""
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidParameter(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidParameter(f"{path}: expected a JSON object")
    missing = {"size", "add", "mul", "one"} - set(data)
    if missing:
        raise InvalidParameter(f"{path}: missing fields {sorted(missing)}")
    return TableRingSpec(
        size=data["size"],
        add=data["add"],
        mul=data["mul"],
        one=data["one"],
        char_exponents=data.get("char_exponents"),
        name=data.get("name"),
    )


# -- builders ------------------------------------------------------------


def build_zmod(n: int, max_size: int | None = None,
               table_threshold: int | None = None) -> ZmodRing:
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"modulus must be a positive integer, got {n!r}")
    _check_size(n, max_size)
    return ZmodRing(n, table_threshold)


def build_gf(q: int, max_size: int | None = None,
             table_threshold: int | None = None) -> GaloisField:
    _check_size(q, max_size)
    return GaloisField(q, table_threshold)


def build_matrix_ring(m: int, fld: GaloisField, max_size: int | None = None,
                      table_threshold: int | None = None) -> MatrixRing:
    return MatrixRing(m, fld, table_threshold, max_size=max_size)


def build_product(factors, max_size: int | None = None,
                  table_threshold: int | None = None) -> FiniteRing:
    factors = list(factors)
    if not factors:
        raise InvalidParameter("a product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    return ProductRing(factors, table_threshold, max_size=max_size)


def build_table_ring(spec: TableRingSpec | dict, max_size: int | None = None,
                     validate: bool = True) -> TableRing:
    if isinstance(spec, dict):
        spec = TableRingSpec(**spec)
    if not isinstance(spec.size, int) or spec.size < 1:
        raise InvalidParameter(f"size must be a positive integer, got {spec.size!r}")
    _check_size(spec.size, max_size)
    add = _as_table(spec.add, spec.size, "add")
    mul = _as_table(spec.mul, spec.size, "mul")
    if not isinstance(spec.one, int):
        raise InvalidParameter("one must be an element index")
    if validate:
        validate_tables(add, mul, spec.one)
    exps = spec.char_exponents
    if exps is not None:
        if len(exps) != spec.size or not all(isinstance(e, int) for e in exps):
            raise InvalidParameter("char_exponents must list one integer per element")
    return TableRing(add, mul, spec.one, name=spec.name, char_exponents=exps)


# -- module-level views of the derived structure ---------------------------


def units(ring: FiniteRing) -> list[int]:
    """Sorted list of elements with a two-sided inverse."""
    return list(ring.units)


def jacobson_radical(ring: FiniteRing) -> IdealSet:
    members = ring.radical
    ideal = IdealSet(ring, members, "two-sided")
    _validate_ideal(ring, members, "two-sided")
    return ideal


def socle(ring: FiniteRing, side: str = "left") -> IdealSet:
    members = ring.socle_members(side)
    ideal = IdealSet(ring, members, side)
    _validate_ideal(ring, members, side)
    return ideal


def principal_ideal(ring: FiniteRing, x: int, side: str = "left") -> IdealSet:
    members = ring.principal_ideal_members(x, side)
    ideal = IdealSet(ring, members, side)
    _validate_ideal(ring, members, side)
    return ideal


def quotient_by_radical(ring: FiniteRing):
    return ring.quotient_by_radical()


def is_frobenius(ring: FiniteRing) -> bool:
    return ring.is_frobenius
