"""Rational polyhedral cones held in both generator and inequality form.

A :class:`Cone` stores

* ``lineality`` - canonical Hermite basis of the lineality space ∩ Z^n,
* ``rays`` - primitive extremal rays of the pointed part, taken inside the
  orthogonal complement of the lineality space,
* ``equations`` - canonical basis of span(C)^⊥ ∩ Z^n,
* ``facets`` - primitive facet normals, taken inside span(C).

Every field is canonical, so two cones are equal as sets exactly when the
dataclasses compare equal.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exact_linalg import (
    IntVec,
    annihilator,
    as_vec,
    cofactor_vector,
    dot,
    identity,
    neg,
    primitive,
    rank,
)


class ConeError(ValueError):
    pass


class NonStronglyConvex(ConeError):
    pass


@lru_cache(maxsize=200_000)
def _describe(gens: tuple, n: int) -> tuple[tuple, tuple]:
    """Return (equations, facets) of the cone generated by ``gens``.

    Facets are found by enumerating (d-1)-subsets of generators; the
    candidate normal is the cofactor vector of the subset stacked with the
    span equations, which already lies in the span.
    """
    eqs = annihilator(gens, n) if gens else identity(n)
    d = n - len(eqs)
    if d == 0:
        return eqs, ()
    facets = set()
    for sub in itertools.combinations(gens, d - 1):
        u = cofactor_vector(list(sub) + list(eqs), n)
        if not any(u):
            continue
        vals = [dot(u, g) for g in gens]
        if all(v >= 0 for v in vals):
            facets.add(primitive(u))
        elif all(v <= 0 for v in vals):
            facets.add(primitive(neg(u)))
    return eqs, tuple(sorted(facets))


def _clean(vs: Iterable[Sequence[int]], n: int) -> tuple:
    out = set()
    for v in vs:
        v = as_vec(v)
        if len(v) != n:
            raise ConeError(f"vector {v} does not have length {n}")
        if any(v):
            out.add(primitive(v))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Cone:
    ambient_rank: int
    rays: tuple
    lineality: tuple
    facets: tuple
    equations: tuple

    @property
    def ineqs(self) -> tuple:
        """All supporting functionals u with <u, x> >= 0 describing the cone."""
        return self.facets + self.equations + tuple(neg(e) for e in self.equations)

    @property
    def generators(self) -> tuple:
        return self.rays + self.lineality + tuple(neg(v) for v in self.lineality)

    @property
    def lineality_rank(self) -> int:
        return len(self.lineality)

    @property
    def dim(self) -> int:
        return self.ambient_rank - len(self.equations)

    @property
    def is_strongly_convex(self) -> bool:
        return not self.lineality

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_subspace(self) -> bool:
        return not self.rays

    def contains(self, x: Sequence[int], relative_interior: bool = False) -> bool:
        if any(dot(e, x) != 0 for e in self.equations):
            return False
        if relative_interior:
            return all(dot(f, x) > 0 for f in self.facets)
        return all(dot(f, x) >= 0 for f in self.facets)

    def interior_point(self) -> IntVec:
        """An integer point of the relative interior (sum of the rays)."""
        p = [0] * self.ambient_rank
        for r in self.rays:
            p = [a + b for a, b in zip(p, r)]
        return tuple(p)

    def span_basis(self) -> tuple:
        return annihilator(self.equations, self.ambient_rank) if self.equations else identity(self.ambient_rank)

    def __repr__(self) -> str:
        extra = f", lineality={list(map(list, self.lineality))}" if self.lineality else ""
        return f"Cone(rays={list(map(list, self.rays))}{extra}, rank={self.ambient_rank})"


def _from_generators(gens: tuple, n: int) -> Cone:
    eqs, facets = _describe(gens, n)
    dual_gens = _clean(facets + eqs + tuple(neg(e) for e in eqs), n)
    lin, rays = _describe(dual_gens, n)
    # the span equations of the dual cone cut out the lineality space
    return Cone(n, rays, lin, facets, eqs)


def cone_from_rays(rays: Iterable[Sequence[int]], rank: int) -> Cone:
    """Cone generated by ``rays``; the empty list gives the zero cone."""
    return _from_generators(_clean(rays, rank), rank)


def cone_from_ineqs(ineqs: Iterable[Sequence[int]], rank: int) -> Cone:
    """The cone {x : <u, x> >= 0 for all u in ineqs}."""
    gens = _clean(ineqs, rank)
    lin, rays = _describe(gens, rank)
    primal_gens = _clean(rays + lin + tuple(neg(v) for v in lin), rank)
    eqs, facets = _describe(primal_gens, rank)
    return Cone(rank, rays, lin, facets, eqs)


def zero_cone(rank: int) -> Cone:
    return cone_from_rays([], rank)


def full_space(rank: int) -> Cone:
    return cone_from_ineqs([], rank)


def subspace(vs: Iterable[Sequence[int]], rank: int) -> Cone:
    vs = list(vs)
    return cone_from_rays(vs + [neg(v) for v in vs], rank)


def dual(c: Cone) -> Cone:
    return cone_from_rays(c.ineqs, c.ambient_rank)


def intersect(a: Cone, b: Cone) -> Cone:
    if a.ambient_rank != b.ambient_rank:
        raise ConeError("cones live in different ambient spaces")
    return cone_from_ineqs(a.ineqs + b.ineqs, a.ambient_rank)


def membership(c: Cone, x: Sequence[int], mode: str = "closed") -> bool:
    if mode not in ("closed", "relative_interior"):
        raise ValueError(f"unknown membership mode {mode!r}")
    return c.contains(x, relative_interior=mode == "relative_interior")


def contains_cone(a: Cone, b: Cone) -> bool:
    """True iff b ⊆ a."""
    return all(a.contains(g) for g in b.generators)


def orthogonal_subspace(c: Cone) -> Cone:
    """c^⊥ as a cone in the dual space."""
    vs = c.generators
    return subspace(annihilator(vs, c.ambient_rank) if vs else identity(c.ambient_rank), c.ambient_rank)


def hyperplane(u: Sequence[int], rank: int) -> Cone:
    return cone_from_ineqs([u, neg(u)], rank)


@dataclass(frozen=True)
class Face:
    cone: Cone
    normal: IntVec
    dim: int


def _face_from_facets(c: Cone, subset: frozenset) -> Face:
    normal = [0] * c.ambient_rank
    for i in subset:
        normal = [a + b for a, b in zip(normal, c.facets[i])]
    rays = [r for r in c.rays if all(dot(c.facets[i], r) == 0 for i in subset)]
    sub = cone_from_rays(rays + list(c.lineality) + [neg(v) for v in c.lineality], c.ambient_rank)
    return Face(sub, tuple(normal), sub.dim)


def faces(c: Cone) -> list[Face]:
    """All faces of a strongly convex cone, sorted by dimension then rays."""
    if not c.is_strongly_convex:
        raise NonStronglyConvex("faces() requires a strongly convex cone")
    return list(_all_faces(c))


@lru_cache(maxsize=20_000)
def _all_faces(c: Cone) -> tuple:
    # a face is determined by the set of facets containing it
    seen: dict[frozenset, Face] = {}
    ray_sets: dict[frozenset, frozenset] = {}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for s in frontier:
            rays_in = frozenset(j for j, r in enumerate(c.rays)
                                if all(dot(c.facets[i], r) == 0 for i in s))
            if rays_in in ray_sets:
                continue
            # close the facet set: all facets vanishing on the face
            closed = frozenset(i for i, f in enumerate(c.facets)
                               if all(dot(f, c.rays[j]) == 0 for j in rays_in))
            ray_sets[rays_in] = closed
            seen[closed] = _face_from_facets(c, closed)
            for i in range(len(c.facets)):
                if i not in closed:
                    nxt.append(closed | {i})
        frontier = nxt
    out = list(seen.values())
    out.sort(key=lambda f: (f.dim, f.cone.rays))
    return tuple(out)


def face_containing(c: Cone, t: Cone) -> Face:
    """Smallest face of ``c`` containing the cone ``t`` (assumed inside ``c``)."""
    gens = t.generators
    subset = frozenset(i for i, f in enumerate(c.facets) if all(dot(f, g) == 0 for g in gens))
    return _face_from_facets(c, subset)


def is_face(t: Cone, c: Cone) -> bool:
    if t.ambient_rank != c.ambient_rank:
        raise ConeError("cones live in different ambient spaces")
    if not contains_cone(c, t):
        return False
    return face_containing(c, t).cone == t


def extremal_rays(c: Cone) -> tuple:
    return c.rays if c.is_strongly_convex else ()


def is_extremal_ray(c: Cone, rho: Sequence[int]) -> bool:
    return c.is_strongly_convex and primitive(rho) in c.rays


def minus_ray(t: Cone, rho: Sequence[int]) -> Cone:
    """Cone spanned by the extremal rays of ``t`` other than ``rho``."""
    rho = primitive(rho)
    return cone_from_rays([r for r in t.rays if r != rho] + list(t.generators[len(t.rays):]),
                          t.ambient_rank)


def linear_span_dim(vs: Sequence[Sequence[int]]) -> int:
    return rank(vs) if vs else 0
