"""Exact asymptotic cones of structured lattice sets.

A :class:`SlicePiece` is the set ``translation + Q`` where

    Q = {y in lattice : y in base_cone (or its relative interior),
                        <level_functional, y> = level,
                        y outside every excluded subspace}.

The asymptotic cone of such a piece is ``base_cone ∩ level_functional^⊥``
as soon as one can exhibit a lattice point ``w`` of Q for which
``w + (K ∩ lattice)`` stays inside Q: then Q is squeezed between a translate
of ``K ∩ lattice`` and a translated slice of the base cone, and both have
asymptotic cone K. :func:`piece_asymptotic_cone` only answers when it has
such a certificate.
"""
from __future__ import annotations

import itertools
import logging
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .cones import (
    Cone,
    cone_from_ineqs,
    cone_from_rays,
    hyperplane,
    intersect,
)
from .exact_linalg import (
    IntVec,
    Sublattice,
    _xgcd,
    add,
    as_vec,
    dot,
    integer_kernel,
    neg,
    primitive,
    solve_rational,
    sub,
)

log = logging.getLogger(__name__)

DEFAULT_SEARCH_CAP = 1024
# lattice points visited per radius before the box search gives up
BOX_BUDGET = 250_000


class UnsupportedPiece(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


def search_cap() -> int:
    return int(os.environ.get("TORUS_ROOTS_SEARCH_CAP", DEFAULT_SEARCH_CAP))


@dataclass(frozen=True)
class SlicePiece:
    base_cone: Cone
    level_functional: IntVec | None = None
    level: int = 0
    translation: IntVec | None = None
    interior_only: bool = False
    excluded_subspaces: tuple = ()
    lattice: Sublattice | None = None
    label: str = ""

    def __post_init__(self):
        n = self.base_cone.ambient_rank
        if self.translation is None:
            object.__setattr__(self, "translation", (0,) * n)
        if self.lattice is None:
            object.__setattr__(self, "lattice", Sublattice.full(n))
        if self.level_functional is not None:
            object.__setattr__(self, "level_functional", as_vec(self.level_functional))
            if len(self.level_functional) != n or not any(self.level_functional):
                raise ValueError("level functional must be a nonzero vector of the ambient rank")
        elif self.level != 0:
            raise ValueError("a level needs a level functional")

    @property
    def ambient_rank(self) -> int:
        return self.base_cone.ambient_rank

    @property
    def sliced(self) -> bool:
        return self.level_functional is not None

    def shifted(self, v: Sequence[int]) -> "SlicePiece":
        return SlicePiece(self.base_cone, self.level_functional, self.level,
                          add(self.translation, v), self.interior_only,
                          self.excluded_subspaces, self.lattice, self.label)

    def contains(self, x: Sequence[int]) -> bool:
        return _in_untranslated(self, sub(x, self.translation), self.interior_only)


def _in_untranslated(p: SlicePiece, y: Sequence[int], interior: bool) -> bool:
    if p.sliced and dot(p.level_functional, y) != p.level:
        return False
    if not p.base_cone.contains(y, relative_interior=interior):
        return False
    if not p.lattice.is_full and not p.lattice.contains(y):
        return False
    return not any(w.contains_real(y) for w in p.excluded_subspaces)


@dataclass(frozen=True)
class ConicLatticeSet:
    pieces: tuple
    ambient_rank: int

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if any(p.ambient_rank != self.ambient_rank for p in self.pieces):
            raise ValueError("pieces live in different ambient spaces")

    def contains(self, x: Sequence[int]) -> bool:
        return any(p.contains(x) for p in self.pieces)

    def union(self, other: "ConicLatticeSet") -> "ConicLatticeSet":
        return ConicLatticeSet(self.pieces + other.pieces, self.ambient_rank)


def contains(s: ConicLatticeSet, x: Sequence[int]) -> bool:
    return s.contains(x)


# --------------------------------------------------------------------------
# vectorized enumeration


def _mask_in_box(p: SlicePiece, pts: np.ndarray, interior: bool) -> np.ndarray:
    """Vectorized membership of points of the *translated* piece."""
    y = pts - np.asarray(p.translation, dtype=np.int64)
    c = p.base_cone
    ok = np.ones(len(pts), dtype=bool)
    for e in c.equations:
        ok &= y @ np.asarray(e, dtype=np.int64) == 0
    for f in c.facets:
        v = y @ np.asarray(f, dtype=np.int64)
        ok &= (v > 0) if interior else (v >= 0)
    if p.sliced:
        ok &= y @ np.asarray(p.level_functional, dtype=np.int64) == p.level
    if not p.lattice.is_full:
        ok &= np.array([p.lattice.contains(tuple(int(a) for a in row)) if k else False
                        for row, k in zip(y, ok)], dtype=bool)
    for w in p.excluded_subspaces:
        comp = np.asarray(w.complement(), dtype=np.int64).reshape(-1, p.ambient_rank)
        inside = np.all(y @ comp.T == 0, axis=1) if len(comp) else np.ones(len(y), dtype=bool)
        ok &= ~inside
    return ok


def _grid(ranges: Sequence[np.ndarray]) -> np.ndarray:
    if not ranges:
        return np.zeros((1, 0), dtype=np.int64)
    mesh = np.meshgrid(*ranges, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1).astype(np.int64)


def _box_chunks(p: SlicePiece, bound: int) -> Iterator[np.ndarray]:
    """Candidate integer points x with ||x||_inf <= bound, chunked.

    For sliced pieces one coordinate is solved from the level equation, so
    the enumeration runs over an (n-1)-dimensional grid.
    """
    n = p.ambient_rank
    axis = np.arange(-bound, bound + 1, dtype=np.int64)
    if not p.sliced:
        free = list(range(n))
        solve_j = None
    else:
        ell = p.level_functional
        solve_j = min((j for j in range(n) if ell[j]), key=lambda j: (abs(ell[j]), j))
        free = [j for j in range(n) if j != solve_j]
    if not free:
        blocks = [None]
    else:
        rest_size = (2 * bound + 1) ** (len(free) - 1)
        step = max(1, 1_000_000 // rest_size)
        blocks = [axis[i:i + step] for i in range(0, len(axis), step)]
    for block in blocks:
        if block is None:
            pts = np.zeros((1, n), dtype=np.int64)
        else:
            grid = _grid([block] + [axis] * (len(free) - 1))
            pts = np.zeros((len(grid), n), dtype=np.int64)
            for k, j in enumerate(free):
                pts[:, j] = grid[:, k]
        if solve_j is not None:
            ell = np.asarray(p.level_functional, dtype=np.int64)
            target = p.level + int(np.dot(ell, np.asarray(p.translation, dtype=np.int64)))
            partial = pts @ ell
            num = target - partial
            ok = num % ell[solve_j] == 0
            pts = pts[ok]
            pts[:, solve_j] = num[ok] // ell[solve_j]
            pts = pts[np.abs(pts[:, solve_j]) <= bound]
        yield pts


def members_in_box(p: SlicePiece, bound: int, min_norm: int = 0) -> np.ndarray:
    """All members x of the piece with min_norm <= ||x||_inf <= bound, sorted."""
    out = []
    for pts in _box_chunks(p, bound):
        if len(pts) == 0:
            continue
        norms = np.abs(pts).max(axis=1)
        pts = pts[norms >= min_norm]
        if len(pts):
            out.append(pts[_mask_in_box(p, pts, p.interior_only)])
    if not out:
        return np.zeros((0, p.ambient_rank), dtype=np.int64)
    pts = np.concatenate(out)
    return pts[np.lexsort(pts.T[::-1])] if len(pts) else pts


def set_members_in_box(s: ConicLatticeSet, bound: int) -> list[IntVec]:
    seen = set()
    for p in s.pieces:
        for row in members_in_box(p, bound):
            seen.add(tuple(int(a) for a in row))
    return sorted(seen)


def sample_directions(s: ConicLatticeSet, radius: int) -> list[IntVec]:
    """Primitive directions of all members x with radius <= ||x||_inf <= 2*radius."""
    return [tuple(row) for row in sample_direction_array(s, radius).tolist()]


def sample_direction_array(s: ConicLatticeSet, radius: int) -> np.ndarray:
    """Same as :func:`sample_directions`, as a sorted array of unique rows."""
    if radius < 1:
        raise ValueError("radius must be >= 1")
    found = []
    for p in s.pieces:
        for pts in _box_chunks(p, 2 * radius):
            if len(pts) == 0:
                continue
            pts = pts[np.abs(pts).max(axis=1) >= radius]
            pts = pts[_mask_in_box(p, pts, p.interior_only)]
            if len(pts) == 0:
                continue
            g = np.gcd.reduce(np.abs(pts), axis=1)
            found.append(np.unique(pts // g[:, None], axis=0))
    if not found:
        return np.zeros((0, s.ambient_rank), dtype=np.int64)
    return np.unique(np.concatenate(found), axis=0)


# --------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class WitnessSearch:
    point: IntVec | None
    bound: int
    real_feasible: bool
    lattice_feasible: bool = True
    note: str = ""


def _slice_cone(p: SlicePiece) -> Cone:
    if not p.sliced:
        return p.base_cone
    return intersect(p.base_cone, hyperplane(p.level_functional, p.ambient_rank))


def _real_feasible(p: SlicePiece, interior: bool) -> bool:
    c = p.base_cone
    if not p.sliced:
        return True
    if p.level == 0:
        if not interior:
            return True
        return c.contains(_slice_cone(p).interior_point(), relative_interior=True)
    sign = 1 if p.level > 0 else -1
    return any(sign * dot(p.level_functional, g) > 0 for g in c.generators)


def _relint_point_on_level(p: SlicePiece) -> list[Fraction]:
    """A rational point of relint(base_cone) on the level set (assumed feasible)."""
    c = p.base_cone
    x = list(c.interior_point())
    if not p.sliced or p.level == 0:
        if p.sliced:
            return [Fraction(v) for v in _slice_cone(p).interior_point()]
        return [Fraction(v) for v in x]
    ell = p.level_functional
    sign = 1 if p.level > 0 else -1
    g = next(g for g in c.generators if sign * dot(ell, g) > 0)
    val = dot(ell, x)
    if sign * val <= 0:
        lam = (-sign * val) // (sign * dot(ell, g)) + 1
        x = add(x, tuple(lam * a for a in g))
        val = dot(ell, x)
    return [Fraction(p.level * a, val) for a in x]


def _level_parametrization(p: SlicePiece) -> tuple[IntVec, tuple] | None:
    """(y0, B): lattice points on the level set are y0 + Z-span(B)."""
    n = p.ambient_rank
    lb = p.lattice.basis
    if not p.sliced:
        return (0,) * n, lb
    ell_c = [dot(row, p.level_functional) for row in lb]
    g = 0
    coeffs = [0] * len(lb)
    for i, a in enumerate(ell_c):
        g2, s, t = _xgcd(g, a)
        coeffs = [s * c for c in coeffs]
        coeffs[i] = t
        g = g2
    if g == 0 or p.level % g:
        return None
    coeffs = [c * (p.level // g) for c in coeffs]
    y0 = tuple(sum(c * row[j] for c, row in zip(coeffs, lb)) for j in range(n))
    ker = integer_kernel([ell_c], len(lb))
    basis = tuple(tuple(sum(k * row[j] for k, row in zip(kv, lb)) for j in range(n)) for kv in ker)
    return y0, basis


def find_witness(p: SlicePiece, interior: bool | None = None, cap: int | None = None) -> WitnessSearch:
    """Search a lattice point of the untranslated piece, then translate it.

    With ``interior=True`` the point is also required to lie in the relative
    interior of the base cone (the piece's own flag is always honoured).
    """
    need_int = bool(p.interior_only or interior)
    cap = search_cap() if cap is None else cap
    if not _real_feasible(p, need_int):
        return WitnessSearch(None, 0, False, note="real slice is empty")
    param = _level_parametrization(p)
    if param is None:
        return WitnessSearch(None, 0, True, False, note="level set has no lattice points")
    y0, basis = param

    def ok(y):
        return _in_untranslated(p, y, need_int)

    def done(y, bound):
        return WitnessSearch(add(y, p.translation), bound, True)

    # rounding along a ray through the relative interior of the slice
    x = _relint_point_on_level(p)
    k = _slice_cone(p).interior_point()
    if basis:
        t = 0
        while t <= cap:
            z = [a + t * b for a, b in zip(x, k)]
            coef = solve_rational(list(zip(*basis)), [zi - y0i for zi, y0i in zip(z, y0)])
            if coef is None:
                break
            base = [math.floor(cf + Fraction(1, 2)) for cf in coef]
            for off in itertools.product((0, 1, -1), repeat=len(basis)):
                y = tuple(y0[j] + sum((b + o) * row[j] for b, o, row in zip(base, off, basis))
                          for j in range(p.ambient_rank))
                if ok(y):
                    return done(y, t)
            t = 1 if t == 0 else 2 * t
    elif ok(y0):
        return done(y0, 0)
    # exhaustive search in slice coordinates
    r, prev = 1, -1
    dim = len(basis)
    while r <= cap and (2 * r + 1) ** dim <= BOX_BUDGET:
        for cf in itertools.product(range(-r, r + 1), repeat=dim):
            if max(map(abs, cf), default=0) <= prev:
                continue
            y = tuple(y0[j] + sum(c * row[j] for c, row in zip(cf, basis)) for j in range(p.ambient_rank))
            if ok(y):
                return done(y, r)
        prev, r = r, 2 * r
    return WitnessSearch(None, prev, True, note="search bound exhausted")


def nonempty_witness(p: SlicePiece, cap: int | None = None) -> IntVec | None:
    res = find_witness(p, cap=cap)
    if res.point is None:
        log.debug("no witness for %s: %s (bound %d)", p.label or p, res.note, res.bound)
    return res.point


def _bounded_members(p: SlicePiece) -> list[IntVec] | None:
    """Exact member list when the piece is a bounded set (slice cone is {0})."""
    k = _slice_cone(p)
    if not k.is_zero:
        return None
    c = p.base_cone
    if not p.sliced or p.level == 0:
        y = (0,) * p.ambient_rank
        return [p.translation] if _in_untranslated(p, y, p.interior_only) else []
    ell = p.level_functional
    sign = 1 if p.level > 0 else -1
    verts = [[Fraction(p.level * a, dot(ell, r)) for a in r] for r in c.generators if sign * dot(ell, r) > 0]
    if not verts:
        return []
    bound = max(math.ceil(abs(v)) for vert in verts for v in vert)
    q = SlicePiece(c, ell, p.level, None, p.interior_only, p.excluded_subspaces, p.lattice)
    return [add(tuple(int(a) for a in row), p.translation) for row in members_in_box(q, bound)]


def _affine_cone_meets(w: Sequence[int], k: Cone, excl: Sublattice) -> bool:
    """Does w + K intersect the real span of ``excl``? Decided by homogenizing."""
    n = k.ambient_rank
    gens = [tuple(g) + (0,) for g in k.generators] + [tuple(w) + (1,)]
    cone = cone_from_rays(gens, n + 1)
    eqs = [tuple(e) + (0,) for e in excl.complement()]
    cut = intersect(cone, cone_from_ineqs(eqs + [neg(e) for e in eqs], n + 1))
    return any(g[-1] > 0 for g in cut.generators)


def piece_asymptotic_cone(p: SlicePiece) -> Cone | None:
    """Exact asymptotic cone of one piece; None when the piece is empty."""
    n = p.ambient_rank
    if p.lattice.rank != n:
        raise UnsupportedPiece("only full-rank lattices are supported")
    k = _slice_cone(p)
    bounded = _bounded_members(p)
    if bounded is not None:
        return k if bounded else None
    wit = find_witness(p, interior=True)
    if wit.point is None:
        wit = find_witness(p)
    if wit.point is None:
        if not wit.real_feasible or not wit.lattice_feasible:
            return None
        raise UnsupportedPiece(f"no lattice point found up to bound {wit.bound}; emptiness unproven")
    y = sub(wit.point, p.translation)
    for w in p.excluded_subspaces:
        if _affine_cone_meets(y, k, w):
            raise UnsupportedPiece("could not certify that the excluded subspaces are avoided")
    return k


def asymptotic_cone(s: ConicLatticeSet) -> list[Cone]:
    """Cones whose union is the asymptotic cone of ``s`` (deduplicated, sorted)."""
    out = {c for p in s.pieces if (c := piece_asymptotic_cone(p)) is not None}
    return sorted(out, key=lambda c: (c.dim, c.lineality, c.rays))


# --------------------------------------------------------------------------
# transfer of lattice points between opposite parallel slices


def transfer_lattice_point(c: Cone, h0_normal: Sequence[int], gamma_minus: Sequence[int],
                           gamma0: Sequence[int]) -> IntVec:
    """Turn a lattice point on level -1 into one on level +1.

    Returns ``m * gamma0 - gamma_minus`` for the least integer m >= 0 that
    lands in ``c``; gamma0 must be a level-0 point of the relative interior.
    """
    h = as_vec(h0_normal)
    gm, g0 = as_vec(gamma_minus), as_vec(gamma0)
    if not c.contains(gm) or dot(h, gm) != -1:
        raise PreconditionViolated("gamma_minus must lie in C on level -1")
    if dot(h, g0) != 0:
        raise PreconditionViolated("gamma0 must lie on level 0")
    if not c.contains(g0, relative_interior=True):
        raise PreconditionViolated("gamma0 lies on the boundary of C")
    m = 0
    for f in c.facets:
        m = max(m, -(-dot(f, gm) // dot(f, g0)))
    return tuple(m * a - b for a, b in zip(g0, gm))


# --------------------------------------------------------------------------
# distance oracle for sampled directions


def _dual_ball_vertices(k: Cone) -> list[tuple[IntVec, int]]:
    """Vertices of K^∨ ∩ {||u||_1 <= 1}, as (integer numerator, denominator)."""
    n = k.ambient_rank
    ineqs = [tuple(g) + (0,) for g in k.generators]
    for signs in itertools.product((1, -1), repeat=n):
        ineqs.append(tuple(-s for s in signs) + (1,))
    hom = cone_from_ineqs(ineqs, n + 1)
    return [(r[:n], r[n]) for r in hom.rays if r[n] > 0]


def directions_outside(k: Cone, directions: Sequence[Sequence[int]], num: int, den: int) -> list[IntVec]:
    """Directions d with ||d/||d||_inf - K||_inf > num/den, decided exactly.

    Uses dist(p, K) = max{-<v, p> : v in K^∨, ||v||_1 <= 1}.
    """
    d = np.asarray(directions, dtype=np.int64)
    if d.size == 0:
        return []
    verts = _dual_ball_vertices(k)
    norms = np.abs(d).max(axis=1)
    bad = np.zeros(len(d), dtype=bool)
    for v, t in verts:
        lhs = -(d @ np.asarray(v, dtype=np.int64)) * den
        bad |= lhs > num * norms * t
    return [tuple(int(a) for a in row) for row in d[bad]]


__all__ = [
    "ConicLatticeSet", "PreconditionViolated", "SlicePiece", "UnsupportedPiece", "WitnessSearch",
    "asymptotic_cone", "contains", "directions_outside", "find_witness", "members_in_box",
    "nonempty_witness", "piece_asymptotic_cone", "sample_direction_array", "sample_directions", "set_members_in_box",
    "transfer_lattice_point",
]
