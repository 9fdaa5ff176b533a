"""Exact integer and rational linear algebra.

Vectors are tuples of Python ints, matrices are tuples of such rows. Nothing
here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

IntVec = tuple
IntMatrix = tuple


def as_vec(v: Iterable[int]) -> IntVec:
    return tuple(int(x) for x in v)


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    m = tuple(as_vec(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("matrix rows have different lengths")
    return m


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def neg(v: Sequence[int]) -> IntVec:
    return tuple(-x for x in v)


def add(u: Sequence[int], v: Sequence[int]) -> IntVec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> IntVec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: int, v: Sequence[int]) -> IntVec:
    return tuple(c * x for x in v)


def vec_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> IntVec:
    """Divide ``v`` by the gcd of its entries; the sign is kept."""
    g = vec_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(x // g for x in v)


def primitive_rational(v: Sequence[Fraction]) -> IntVec:
    """Smallest integer vector that is a positive multiple of a rational vector."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive(tuple(int(Fraction(x) * den) for x in v))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def det(m: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def cofactor_vector(rows: Sequence[Sequence[int]], n: int) -> IntVec:
    """Generalized cross product of n-1 vectors in Z^n.

    The result is orthogonal to every row; it is zero iff the rows are
    linearly dependent.
    """
    assert len(rows) == n - 1
    out = []
    for i in range(n):
        minor = [r[:i] + r[i + 1:] for r in rows]
        d = det(minor)
        out.append(d if i % 2 == 0 else -d)
    return tuple(out)


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h``. ``h`` is in
    row echelon form with positive pivots, entries above each pivot reduced
    into ``[0, pivot)`` and zero rows at the bottom.
    """
    return _hnf(m, True)


def hermite_basis(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Nonzero rows of the Hermite normal form, without the transform."""
    return _nonzero_rows(_hnf(m, False)[0])


def _hnf(m, transform: bool):
    m = as_matrix(m)
    if not m:
        raise ValueError("hermite_normal_form needs a nonempty matrix")
    nrows, ncols = len(m), len(m[0])
    h = [list(r) for r in m]
    u = [list(r) for r in identity(nrows)] if transform else None
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # gcd-combine column c of rows r.. into row r
        for i in range(r + 1, nrows):
            if h[i][c] == 0:
                continue
            a, b = h[r][c], h[i][c]
            g, s, t = _xgcd(a, b)
            p, q = a // g, b // g
            hr, hi = h[r], h[i]
            h[r] = [s * x + t * y for x, y in zip(hr, hi)]
            h[i] = [-q * x + p * y for x, y in zip(hr, hi)]
            if not transform:
                continue
            ur, ui = u[r], u[i]
            u[r] = [s * x + t * y for x, y in zip(ur, ui)]
            u[i] = [-q * x + p * y for x, y in zip(ur, ui)]
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            if transform:
                u[r] = [-x for x in u[r]]
        pivots.append((r, c))
        r += 1
    for r, c in pivots:
        p = h[r][c]
        for i in range(r):
            q = h[i][c] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                if transform:
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
    return as_matrix(h), (as_matrix(u) if transform else None)


def smith_normal_form(m: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix."""
    m = as_matrix(m)
    if not m:
        raise ValueError("smith_normal_form needs a nonempty matrix")
    a = [list(r) for r in m]
    nr, nc = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(nr, nc):
        nz = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        done = False
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def rref(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in m]
    if not a:
        return [], []
    nr, nc = len(a), len(a[0])
    piv = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
        if r == nr:
            break
    return a[:r], piv


def solve_rational(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Some rational x with a @ x == b, or None if inconsistent."""
    aug = [list(r) + [bi] for r, bi in zip(a, b)]
    ncols = len(a[0]) if a else 0
    rows, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(rows, piv):
        x[c] = row[-1]
    return x


def integer_kernel(a: Sequence[Sequence[int]], n: int) -> IntMatrix:
    """Canonical (HNF) basis of {x in Z^n : a @ x == 0}; saturated by construction."""
    a = as_matrix(a)
    if not a:
        return identity(n)
    h, u = hermite_normal_form(transpose(a))
    ker = [u[i] for i in range(n) if not any(h[i])]
    if not ker:
        return ()
    return hermite_basis(ker)


def _nonzero_rows(m: IntMatrix) -> IntMatrix:
    return tuple(r for r in m if any(r))


def annihilator(vs: Sequence[Sequence[int]], n: int) -> IntMatrix:
    """Saturated lattice basis of the orthogonal complement of span(vs)."""
    return integer_kernel(vs, n)


@dataclass(frozen=True)
class Sublattice:
    """A subgroup of Z^n stored by its canonical Hermite basis."""

    basis: IntMatrix
    ambient_rank: int

    @classmethod
    def span(cls, vs: Iterable[Sequence[int]], n: int) -> "Sublattice":
        vs = tuple(dict.fromkeys(as_matrix(vs)))
        if any(len(v) != n for v in vs):
            raise ValueError(f"vectors must have length {n}")
        if not vs:
            return cls((), n)
        # fold in small batches so intermediate entries stay small
        basis: tuple = ()
        for i in range(0, len(vs), 4 * n + 4):
            basis = hermite_basis(basis + vs[i:i + 4 * n + 4])
        return cls(basis, n)

    @classmethod
    def full(cls, n: int) -> "Sublattice":
        return cls(identity(n), n)

    @classmethod
    def of_subspace(cls, vs: Iterable[Sequence[int]], n: int) -> "Sublattice":
        """The saturated lattice span_R(vs) ∩ Z^n."""
        vs = as_matrix(vs)
        if not vs or not any(any(v) for v in vs):
            return cls((), n)
        return cls(integer_kernel(integer_kernel(vs, n), n), n)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_full(self) -> bool:
        return self.rank == self.ambient_rank and all(
            self.basis[i][i] == 1 for i in range(self.rank))

    def contains(self, x: Sequence[int]) -> bool:
        x = list(x)
        for row in self.basis:
            c = next(j for j, v in enumerate(row) if v)
            q, r = divmod(x[c], row[c])
            if r:
                return False
            x = [a - q * b for a, b in zip(x, row)]
        return not any(x)

    def contains_real(self, x: Sequence[int]) -> bool:
        """Membership in the real span of the lattice."""
        return all(dot(w, x) == 0 for w in self.complement())

    def complement(self) -> IntMatrix:
        """Saturated basis of the annihilator of the real span."""
        return _complement(self.basis, self.ambient_rank)

    def saturation(self) -> "Sublattice":
        return Sublattice.of_subspace(self.basis, self.ambient_rank)

    def index_in_saturation(self) -> int:
        if not self.basis:
            return 1
        d = 1
        for x in smith_normal_form(self.basis):
            d *= x
        return d


@lru_cache(maxsize=50_000)
def _complement(basis: IntMatrix, n: int) -> IntMatrix:
    return annihilator(basis, n) if basis else identity(n)


def sublattice_span(vs: Iterable[Sequence[int]], n: int) -> Sublattice:
    return Sublattice.span(vs, n)
