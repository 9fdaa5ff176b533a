"""Demazure roots and homogeneous Ga-actions on quasi-affine toric varieties.

A root (rho, e) consists of an extremal ray rho of sigma with primitive
generator v and a weight e in M with <e, v> = -1 and e in (sigma_rho)^∨,
where sigma_rho is spanned by the other extremal rays. It defines the
locally nilpotent derivation chi^m -> <m, v> chi^(e+m) of k[sigma^∨ ∩ M].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cones import Cone, dual, intersect, is_face, minus_ray, orthogonal_subspace
from .exact_linalg import IntVec, Sublattice, add, annihilator, as_vec, dot, primitive
from .fans import Fan, boundary_faces, require_quasi_affine
from .lattice_sets import ConicLatticeSet, SlicePiece, members_in_box, nonempty_witness


class DemazureError(ValueError):
    pass


class NotExtremalRay(DemazureError):
    pass


class NotARoot(DemazureError):
    pass


class NotAFace(DemazureError):
    pass


class ExponentOutsideCone(DemazureError):
    pass


@dataclass(frozen=True, order=True)
class DemazureRoot:
    rho: IntVec
    e: IntVec

    def __post_init__(self):
        object.__setattr__(self, "rho", as_vec(self.rho))
        object.__setattr__(self, "e", as_vec(self.e))
        if dot(self.e, self.rho) != -1:
            raise NotARoot(f"<e, v_rho> = {dot(self.e, self.rho)}, expected -1")


@dataclass(frozen=True)
class MonomialTerm:
    coeff: int
    exponent: IntVec


def _check_ray(sigma: Cone, rho: Sequence[int]) -> IntVec:
    rho = as_vec(rho)
    if not any(rho) or primitive(rho) != rho or rho not in sigma.rays or not sigma.is_strongly_convex:
        raise NotExtremalRay(f"{rho} is not a primitive extremal ray of {sigma}")
    return rho


def demazure_root(sigma: Cone, rho: Sequence[int], e: Sequence[int]) -> DemazureRoot:
    """Validated constructor: e must lie in S_rho for sigma."""
    rho = _check_ray(sigma, rho)
    r = DemazureRoot(rho, e)
    if not dual(minus_ray(sigma, rho)).contains(r.e):
        raise NotARoot(f"{r.e} is not in the dual of sigma_rho")
    return r


def root_set(sigma: Cone, rho: Sequence[int]) -> ConicLatticeSet:
    """S_rho as a one-piece lattice set, with its nonemptiness checked."""
    rho = _check_ray(sigma, rho)
    piece = SlicePiece(dual(minus_ray(sigma, rho)), rho, -1, label=f"S{list(rho)}")
    if nonempty_witness(piece) is None:
        raise AssertionError(f"S_rho empty for {sigma}, {rho}")
    return ConicLatticeSet((piece,), sigma.ambient_rank)


def apply_derivation(sigma: Cone, r: DemazureRoot, m: Sequence[int]) -> MonomialTerm:
    m = as_vec(m)
    if not dual(sigma).contains(m):
        raise ExponentOutsideCone(f"{m} is not in the dual of sigma")
    c = dot(m, r.rho)
    out = add(m, r.e)
    if c != 0 and not dual(sigma).contains(out):
        raise AssertionError(f"derivation left the semigroup: {m} + {r.e}")
    return MonomialTerm(c, out)


def annihilation_steps(sigma: Cone, r: DemazureRoot, m: Sequence[int]) -> int:
    """Number of applications of the derivation that send chi^m to 0."""
    m = as_vec(m)
    steps = 0
    while True:
        steps += 1
        term = apply_derivation(sigma, r, m)
        if term.coeff == 0:
            return steps
        m = term.exponent


def annihilation_step_counts(sigma: Cone, r: DemazureRoot, ms: np.ndarray) -> np.ndarray:
    """Vectorized :func:`annihilation_steps` for the rows of ``ms``."""
    m = np.array(ms, dtype=np.int64).reshape(-1, sigma.ambient_rank)
    # m is in sigma^∨ iff it pairs nonnegatively with the generators of sigma
    ineqs = np.asarray(sigma.generators or [(0,) * sigma.ambient_rank], dtype=np.int64)
    if len(m) and (m @ ineqs.T < 0).any():
        raise ExponentOutsideCone("some exponent is not in the dual of sigma")
    v = np.asarray(r.rho, dtype=np.int64)
    e = np.asarray(r.e, dtype=np.int64)
    steps = np.zeros(len(m), dtype=np.int64)
    alive = np.ones(len(m), dtype=bool)
    while alive.any():
        steps[alive] += 1
        alive &= m @ v != 0
        m[alive] += e
        if (m[alive] @ ineqs.T < 0).any():
            raise AssertionError("derivation left the semigroup")
    return steps


def verify_locally_nilpotent(sigma: Cone, r: DemazureRoot, degree_bound: int) -> bool:
    """Every chi^m with ||m||_inf <= bound dies after exactly <m, v> + 1 steps."""
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    demazure_root(sigma, r.rho, r.e)
    ms = members_in_box(SlicePiece(dual(sigma)), degree_bound)
    steps = annihilation_step_counts(sigma, r, ms)
    return bool((steps == ms @ np.asarray(r.rho, dtype=np.int64) + 1).all())


def dual_points_in_box(sigma: Cone, bound: int) -> list[IntVec]:
    """Lattice points of sigma^∨ with ||m||_inf <= bound."""
    pts = members_in_box(SlicePiece(dual(sigma)), bound)
    return [tuple(int(a) for a in row) for row in pts]


def _ray_in(tau: Cone, rho: IntVec) -> bool:
    return rho in tau.rays


def preserves_orbit_closure(sigma: Cone, r: DemazureRoot, tau: Cone) -> bool:
    """Closed-form test whether the Ga-action of r leaves V(tau) invariant."""
    if not is_face(tau, sigma):
        raise NotAFace(f"{tau} is not a face of {sigma}")
    if not _ray_in(tau, r.rho):
        return True
    return any(dot(r.e, w) != 0 for w in minus_ray(tau, r.rho).rays)


def violation_certificate(sigma: Cone, r: DemazureRoot, tau: Cone) -> IntVec | None:
    """A weight m breaking the ideal-stability condition, or None if V(tau) is invariant.

    When rho lies in tau and e kills tau_rho, any lattice point m of sigma^∨
    orthogonal to tau_rho with <m, v_rho> = 1 works: e + m then vanishes on tau.
    """
    if preserves_orbit_closure(sigma, r, tau):
        return None
    piece = SlicePiece(intersect(dual(sigma), orthogonal_subspace(minus_ray(tau, r.rho))), r.rho, 1)
    m = nonempty_witness(piece)
    if m is None:
        raise AssertionError("no certificate found although the criterion fails")
    return m


def brute_force_invariance(sigma: Cone, r: DemazureRoot, tau: Cone, box: int) -> bool:
    """Check the ideal-stability condition directly on all m in a box.

    For m in sigma^∨ ∩ M outside tau^⊥ and rho^⊥, e + m must stay outside
    tau^⊥.
    """
    if box < 1:
        raise ValueError("box must be >= 1")
    w = tau.rays
    for m in dual_points_in_box(sigma, box):
        if dot(m, r.rho) == 0 or all(dot(m, t) == 0 for t in w):
            continue
        if all(dot(add(m, r.e), t) == 0 for t in w):
            return False
    return True


class InvarianceOracle:
    """Vectorized :func:`brute_force_invariance` for many roots and faces of one cone.

    For each face tau the lattice points m of sigma^∨ in the box are grouped by
    their pairing vector with the rays of tau; a root violates the condition
    iff -e pairs like some m that is not orthogonal to rho.
    """

    def __init__(self, sigma: Cone, box: int):
        self.sigma = sigma
        self.box = box
        pts = members_in_box(SlicePiece(dual(sigma)), box)
        self.points = pts
        self.rays = sigma.rays
        # bit j set iff <m, ray_j> != 0
        bits = np.zeros(len(pts), dtype=np.int64)
        for j, v in enumerate(self.rays):
            bits |= (pts @ np.asarray(v, dtype=np.int64) != 0).astype(np.int64) << j
        self.bits = bits
        self._tables: dict = {}

    def _table(self, tau: Cone) -> dict:
        if tau not in self._tables:
            table: dict = {}
            if tau.rays and len(self.points):
                keys = self.points @ np.asarray(tau.rays, dtype=np.int64).T
                uniq, inv = np.unique(keys, axis=0, return_inverse=True)
                acc = np.zeros(len(uniq), dtype=np.int64)
                np.bitwise_or.at(acc, inv.ravel(), self.bits)
                table = {tuple(int(a) for a in k): int(b) for k, b in zip(uniq, acc) if any(k)}
            self._tables[tau] = table
        return self._tables[tau]

    def invariant(self, r: DemazureRoot, tau: Cone) -> bool:
        if not tau.rays:
            return True
        key = tuple(-dot(r.e, t) for t in tau.rays)
        j = self.rays.index(r.rho)
        return not (self._table(tau).get(key, 0) >> j) & 1


def descends_to_quasi_affine(f: Fan, r: DemazureRoot) -> bool:
    """Whether the root's Ga-action on X_aff restricts to the open subset X."""
    require_quasi_affine(f)
    demazure_root(f.support_hull, r.rho, r.e)
    return all(preserves_orbit_closure(f.support_hull, r, b.face) for b in boundary_faces(f))


def weight_set_pieces(f: Fan) -> dict:
    """Per-ray pieces D_rho(X), keyed by the ray."""
    require_quasi_affine(f)
    sigma = f.support_hull
    n = f.ambient_rank
    bfs = boundary_faces(f)
    out = {}
    for rho in sigma.rays:
        excl = []
        for b in bfs:
            if _ray_in(b.face, rho):
                # weights vanishing on all of (tau_i)_rho are excluded
                excl.append(Sublattice.of_subspace(annihilator(minus_ray(b.face, rho).rays, n), n))
        base = root_set(sigma, rho).pieces[0]
        out[rho] = SlicePiece(base.base_cone, rho, -1,
                              excluded_subspaces=tuple(dict.fromkeys(excl)),
                              label=f"D{list(rho)}")
    return out


def weight_set_D(f: Fan) -> ConicLatticeSet:
    """Exact description of D(X): one piece per extremal ray of sigma."""
    return ConicLatticeSet(tuple(weight_set_pieces(f).values()), f.ambient_rank)


def enumerate_roots(f: Fan, bound: int) -> list[DemazureRoot]:
    """All roots (rho, e) descending to X with ||e||_inf <= bound, sorted."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out = []
    for rho, piece in weight_set_pieces(f).items():
        for row in members_in_box(piece, bound):
            out.append(DemazureRoot(rho, tuple(int(a) for a in row)))
    return sorted(out)


def enumerate_root_set(sigma: Cone, rho: Sequence[int], bound: int) -> list[IntVec]:
    piece = root_set(sigma, rho).pieces[0]
    return [tuple(int(a) for a in row) for row in members_in_box(piece, bound)]


__all__ = [
    "DemazureError", "DemazureRoot", "ExponentOutsideCone", "InvarianceOracle", "MonomialTerm",
    "NotAFace", "NotARoot", "NotExtremalRay", "annihilation_step_counts", "annihilation_steps",
    "apply_derivation",
    "brute_force_invariance", "demazure_root", "descends_to_quasi_affine", "dual_points_in_box",
    "enumerate_root_set", "enumerate_roots", "preserves_orbit_closure", "root_set",
    "verify_locally_nilpotent", "violation_certificate", "weight_set_D", "weight_set_pieces",
]
