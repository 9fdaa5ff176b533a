"""Weight monoids of toric varieties and their reconstruction from D(X).

For a quasi-affine toric variety X with support hull sigma the weight monoid
is sigma^∨ ∩ M. :func:`reconstruct` recovers it from the exact description
of D(X) alone, as Conv(D_∞) ∩ Span_Z(D), with the two degenerate shapes
(a half-space, the whole lattice) handled separately.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cones import Cone, cone_from_ineqs, cone_from_rays, dual, full_space
from .exact_linalg import Sublattice, annihilator, dot, neg
from .lattice_sets import (
    ConicLatticeSet,
    SlicePiece,
    asymptotic_cone,
    members_in_box,
    nonempty_witness,
)


class MalformedWeightSet(ValueError):
    pass


@dataclass(frozen=True)
class AffineSemigroup:
    """The saturated semigroup {m in lattice : m in cone}."""

    cone: Cone
    lattice: Sublattice

    @property
    def ambient_rank(self) -> int:
        return self.cone.ambient_rank

    def contains(self, m) -> bool:
        return self.cone.contains(m) and self.lattice.contains(m)

    def hilbert_basis(self) -> list[tuple]:
        """Irreducible elements; experimental, rank <= 3 and pointed cones only."""
        if self.ambient_rank > 3:
            raise NotImplementedError("Hilbert bases are only offered for rank <= 3")
        if not self.cone.is_strongly_convex:
            raise NotImplementedError("Hilbert bases need a pointed cone")
        if self.cone.is_zero:
            return []
        # every irreducible element lies in the parallelepiped spanned by some
        # simplicial subcone, so its norm is at most the sum of the ray norms
        bound = sum(max(abs(a) for a in r) for r in self.cone.rays)
        pts = [tuple(p) for p in _cone_points(self.cone, bound) if any(p)]
        pts = [p for p in pts if self.lattice.contains(p)]
        have = set(pts)
        out = []
        for p in pts:
            if not any(q != p and tuple(a - b for a, b in zip(p, q)) in have for q in pts):
                out.append(p)
        return sorted(out)


def _cone_points(c: Cone, bound: int) -> list:
    return members_in_box(SlicePiece(c), bound).tolist()


@dataclass(frozen=True)
class NumericalMonoidWindow:
    """{k d : k >= 0}, or with ``gapped`` set, {k d : k = 0 or k >= s}."""

    modulus: int
    threshold: int
    gapped: bool = False

    def __post_init__(self):
        if self.modulus < 2 or self.threshold < 2:
            raise ValueError("need d >= 2 and s >= 2")

    def contains(self, x: int) -> bool:
        if x < 0 or x % self.modulus:
            return False
        k = x // self.modulus
        return not self.gapped or k == 0 or k >= self.threshold

    def members(self, up_to: int) -> list[int]:
        return [x for x in range(up_to + 1) if self.contains(x)]


def toric_weight_monoid(sigma: Cone) -> AffineSemigroup:
    if not sigma.is_strongly_convex:
        raise ValueError("sigma must be strongly convex")
    return AffineSemigroup(dual(sigma), Sublattice.full(sigma.ambient_rank))


def semigroup_equal(a: AffineSemigroup, b: AffineSemigroup) -> bool:
    if a.ambient_rank != b.ambient_rank:
        raise ValueError("semigroups live in different ambient ranks")
    return a.cone == b.cone and a.lattice == b.lattice


def weight_span(d: ConicLatticeSet, start_bound: int = 4, max_bound: int = 64) -> Sublattice:
    """Span_Z of a weight set from witnesses, witness shifts and growing windows."""
    n = d.ambient_rank
    gens: list = []
    for p in d.pieces:
        w = nonempty_witness(p)
        if w is None:
            continue
        gens.append(w)
        ks = asymptotic_cone(ConicLatticeSet((p,), n))
        for k in ks:
            for g in k.generators:
                x = tuple(a + b for a, b in zip(w, g))
                if p.contains(x):
                    gens.append(x)
    span = Sublattice.span(gens, n)
    bound, stable = start_bound, 0
    while stable < 2 and bound <= max_bound:
        new = list(span.basis)
        for p in d.pieces:
            new.extend(members_in_box(p, bound).tolist())
        nxt = Sublattice.span(new, n)
        stable = stable + 1 if nxt == span else 0
        span = nxt
        bound *= 2
    return span


@dataclass(frozen=True)
class Reconstruction:
    semigroup: AffineSemigroup
    case: int
    asymptotic: tuple
    span: Sublattice


def reconstruct_details(d: ConicLatticeSet) -> Reconstruction:
    n = d.ambient_rank
    if not d.pieces:
        full = AffineSemigroup(full_space(n), Sublattice.full(n))
        return Reconstruction(full, 3, (), Sublattice.full(n))
    ks = tuple(asymptotic_cone(d))
    lattice = weight_span(d)
    if not ks or lattice.rank == 0:
        raise MalformedWeightSet("nonempty weight set without asymptotic directions")
    conv = cone_from_rays([g for k in ks for g in k.generators], n)
    if conv.dim == lattice.rank:
        return Reconstruction(AffineSemigroup(conv, lattice), 1, ks, lattice)
    if not (conv.is_subspace and conv.dim == lattice.rank - 1 and conv in ks):
        raise MalformedWeightSet(
            f"Conv(D_inf) has dim {conv.dim} but Span(D) has rank {lattice.rank}")
    # case (2): the half-space of Span_R(D) bounded by D_inf that misses D
    outside = lattice.complement()
    phi = annihilator(list(conv.generators) + list(outside), n)[0] if outside else conv.equations[0]
    vals = [dot(phi, w) for p in d.pieces if (w := nonempty_witness(p)) is not None]
    if not (all(v < 0 for v in vals) or all(v > 0 for v in vals)):
        raise MalformedWeightSet("weight set is not on one side of its asymptotic hyperplane")
    if vals[0] > 0:
        phi = neg(phi)
    half = cone_from_ineqs([phi] + list(outside) + [neg(v) for v in outside], n)
    return Reconstruction(AffineSemigroup(half, lattice), 2, ks, lattice)


def reconstruct(d: ConicLatticeSet) -> AffineSemigroup:
    """Lambda^+ = Conv(D_inf) ∩ Span_Z(D), with the half-space and torus cases."""
    return reconstruct_details(d).semigroup


def counterexample_monoids(d: int, s: int) -> tuple[NumericalMonoidWindow, NumericalMonoidWindow, bool, int]:
    """Weight monoids of A^n/mu_d and of the gapped variety A^s_{d,n} (rank-one part)."""
    if d < 2 or s < 2:
        raise ValueError("need d >= 2 and s >= 2")
    a = NumericalMonoidWindow(d, s, gapped=False)
    b = NumericalMonoidWindow(d, s, gapped=True)
    witness = next(x for x in itertools.count() if a.contains(x) and not b.contains(x))
    return a, b, True, witness


__all__ = [
    "AffineSemigroup", "MalformedWeightSet", "NumericalMonoidWindow", "Reconstruction",
    "counterexample_monoids", "reconstruct", "reconstruct_details", "semigroup_equal",
    "toric_weight_monoid", "weight_span",
]
