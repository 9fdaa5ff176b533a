"""Fans of strongly convex cones and the quasi-affinity criterion."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cones import (
    Cone,
    ConeError,
    cone_from_rays,
    contains_cone,
    faces,
    intersect,
    is_face,
)
from .exact_linalg import primitive


class FanError(ValueError):
    pass


class NonStronglyConvex(FanError):
    pass


class BadIntersection(FanError):
    pass


class NotQuasiAffine(FanError):
    pass


@dataclass(frozen=True)
class Fan:
    ambient_rank: int
    max_cones: tuple
    all_cones: frozenset = field(repr=False)
    support_hull: Cone = field(repr=False)

    @property
    def rays(self) -> tuple:
        """Primitive generators of the one-dimensional cones, sorted."""
        return tuple(sorted({r for c in self.max_cones for r in c.rays}))

    def __contains__(self, c: Cone) -> bool:
        return c in self.all_cones


@dataclass(frozen=True)
class BoundaryFace:
    face: Cone
    dim: int


def validate_fan(max_cones: Sequence[Cone]) -> Fan:
    """Check the fan axioms and materialize the face closure.

    Redundant (non-maximal) cones in the input are dropped.
    """
    cones = list(dict.fromkeys(max_cones))
    if not cones:
        raise FanError("a fan needs at least one cone")
    n = cones[0].ambient_rank
    if any(c.ambient_rank != n for c in cones):
        raise FanError("cones have different ambient ranks")
    for c in cones:
        if not c.is_strongly_convex:
            raise NonStronglyConvex(f"{c} contains a line")
    for a, b in itertools.combinations(cones, 2):
        both = intersect(a, b)
        if not (is_face(both, a) and is_face(both, b)):
            raise BadIntersection(f"{a} ∩ {b} = {both} is not a common face")
    closure = frozenset(f.cone for c in cones for f in faces(c))
    maximal = tuple(sorted(
        (c for c in cones if not any(c != d and contains_cone(d, c) for d in cones)),
        key=lambda c: (-c.dim, c.rays)))
    hull = cone_from_rays([r for c in maximal for r in c.rays], n)
    return Fan(n, maximal, closure, hull)


def fan_from_rays(rays: Sequence[Sequence[int]], max_cones: Sequence[Sequence[int]], rank: int) -> Fan:
    """Build a fan from a ray table and index lists, as in the JSON format."""
    return validate_fan([cone_from_rays([rays[i] for i in idx], rank) for idx in max_cones])


def face_fan(sigma: Cone) -> Fan:
    return validate_fan([sigma])


def is_quasi_affine(f: Fan) -> tuple[bool, dict]:
    """Quasi-affinity test with a certificate explaining a negative answer."""
    sigma = f.support_hull
    if not sigma.is_strongly_convex:
        return False, {"reason": "support hull contains a line",
                       "lineality": [list(v) for v in sigma.lineality]}
    bad = [c for c in f.max_cones if not is_face(c, sigma)]
    if bad:
        return False, {"reason": "maximal cones that are not faces of the support hull",
                       "cones": [[list(r) for r in c.rays] for c in bad]}
    return True, {}


def require_quasi_affine(f: Fan) -> None:
    ok, cert = is_quasi_affine(f)
    if not ok:
        raise NotQuasiAffine(cert["reason"])


def boundary_faces(f: Fan) -> list[BoundaryFace]:
    """Minimal faces of the support hull that are missing from the fan.

    Their orbit closures are the irreducible components of X_aff minus X.
    """
    require_quasi_affine(f)
    missing = [fc.cone for fc in faces(f.support_hull) if fc.cone not in f.all_cones]
    minimal = [t for t in missing
               if not any(s != t and contains_cone(t, s) for s in missing)]
    for t in minimal:
        if t.dim < 2:
            raise AssertionError(f"boundary face {t} of dimension < 2 in a quasi-affine fan")
    return [BoundaryFace(t, t.dim) for t in sorted(minimal, key=lambda c: (c.dim, c.rays))]


def random_strongly_convex_cone(rng: np.random.Generator, rank: int, max_rays: int = 8,
                                entry_bound: int = 4, full_dim: bool | None = None) -> Cone:
    """Cone on k <= max_rays random primitive rays, resampled until pointed."""
    while True:
        k = int(rng.integers(1, max_rays + 1))
        rays = []
        while len(rays) < k:
            v = tuple(int(x) for x in rng.integers(-entry_bound, entry_bound + 1, size=rank))
            if any(v):
                rays.append(primitive(v))
        c = cone_from_rays(rays, rank)
        if not c.is_strongly_convex:
            continue
        if full_dim is not None and (c.dim == rank) != full_dim:
            continue
        return c


def random_quasi_affine_fan(rng: np.random.Generator, rank: int, max_rays: int = 8,
                            entry_bound: int = 4) -> Fan:
    """Face fan of a random pointed cone minus a random up-set of faces of dim >= 2."""
    sigma = random_strongly_convex_cone(rng, rank, max_rays, entry_bound)
    fcs = [fc.cone for fc in faces(sigma)]
    big = [c for c in fcs if c.dim >= 2]
    removed = set()
    if big and rng.random() < 0.8:
        seeds = [c for c in big if rng.random() < 0.35] or [big[int(rng.integers(len(big)))]]
        removed = {c for c in big for s in seeds if contains_cone(c, s)}
    kept = [c for c in fcs if c not in removed]
    maximal = [c for c in kept if not any(c != d and contains_cone(d, c) for d in kept)]
    return validate_fan(maximal)


def affine_fan(rays: Sequence[Sequence[int]], rank: int) -> Fan:
    return face_fan(cone_from_rays(rays, rank))


__all__ = [
    "BadIntersection", "BoundaryFace", "ConeError", "Fan", "FanError", "NonStronglyConvex",
    "NotQuasiAffine", "affine_fan", "boundary_faces", "face_fan", "fan_from_rays",
    "is_quasi_affine", "random_quasi_affine_fan", "random_strongly_convex_cone",
    "require_quasi_affine", "validate_fan",
]
