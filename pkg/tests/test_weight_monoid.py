import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torus_roots.cones import cone_from_ineqs, cone_from_rays, full_space, zero_cone
from torus_roots.demazure import weight_set_D
from torus_roots.exact_linalg import Sublattice
from torus_roots.fans import face_fan, random_quasi_affine_fan, validate_fan
from torus_roots.lattice_sets import ConicLatticeSet, SlicePiece, asymptotic_cone
from torus_roots.weight_monoid import (
    AffineSemigroup,
    MalformedWeightSet,
    NumericalMonoidWindow,
    counterexample_monoids,
    reconstruct,
    reconstruct_details,
    semigroup_equal,
    toric_weight_monoid,
)

ORTHANT = cone_from_rays([(1, 0), (0, 1)], 2)
Z2 = Sublattice.full(2)


def test_toric_weight_monoid_examples():
    assert semigroup_equal(toric_weight_monoid(ORTHANT), AffineSemigroup(ORTHANT, Z2))
    c = toric_weight_monoid(cone_from_rays([(1, 0), (1, 2)], 2))
    assert c.cone == cone_from_rays([(0, 1), (2, -1)], 2)
    t = toric_weight_monoid(zero_cone(2))
    assert t.cone == full_space(2) and t.lattice == Z2


def test_reconstruct_examples():
    punctured = validate_fan([cone_from_rays([(1, 0)], 2), cone_from_rays([(0, 1)], 2)])
    d = weight_set_D(punctured)
    assert set(asymptotic_cone(d)) == {cone_from_rays([(0, 1)], 2), cone_from_rays([(1, 0)], 2)}
    assert semigroup_equal(reconstruct(d), AffineSemigroup(ORTHANT, Z2))
    single = reconstruct_details(weight_set_D(face_fan(cone_from_rays([(1, 0)], 2))))
    assert single.case == 2
    assert single.semigroup.cone == cone_from_ineqs([(1, 0)], 2)
    torus = reconstruct_details(ConicLatticeSet((), 2))
    assert torus.case == 3 and torus.semigroup.cone == full_space(2)


def test_semigroup_equal_examples():
    a = AffineSemigroup(ORTHANT, Z2)
    assert semigroup_equal(a, AffineSemigroup(cone_from_rays([(0, 1), (1, 0), (1, 1)], 2), Z2))
    assert not semigroup_equal(a, AffineSemigroup(ORTHANT, Sublattice.span([(2, 0), (0, 1)], 2)))
    with pytest.raises(ValueError):
        semigroup_equal(a, AffineSemigroup(zero_cone(3), Sublattice.full(3)))


def test_counterexample_examples():
    a, b, distinct, w = counterexample_monoids(2, 2)
    assert a.members(8) == [0, 2, 4, 6, 8] and b.members(8) == [0, 4, 6, 8]
    assert distinct and w == 2
    assert counterexample_monoids(3, 4)[3] == 3
    with pytest.raises(ValueError):
        counterexample_monoids(2, 1)
    with pytest.raises(ValueError):
        NumericalMonoidWindow(1, 3)


@given(st.integers(2, 30), st.integers(2, 30))
def test_counterexample_witness_sound(d, s):
    a, b, distinct, w = counterexample_monoids(d, s)
    assert w == d and a.contains(w) and not b.contains(w)
    # the witness is the smallest element of a outside b
    assert all(b.contains(x) for x in range(w) if a.contains(x))


def test_malformed_weight_set():
    # two opposite slices whose directions span a 1-dim cone inside a rank-2 span, but on
    # both sides of the hyperplane
    line = cone_from_ineqs([(1, 0), (-1, 0)], 2)
    d = ConicLatticeSet((SlicePiece(line, (1, 0), -1), SlicePiece(line, (1, 0), 1)), 2)
    with pytest.raises(MalformedWeightSet):
        reconstruct(d)
    # a single ray direction in a rank-2 span is neither full nor a hyperplane
    ray = ConicLatticeSet((SlicePiece(ORTHANT, (1, -1), 0),), 2)
    with pytest.raises(MalformedWeightSet):
        reconstruct(ConicLatticeSet(ray.pieces + (SlicePiece(zero_cone(2), translation=(1, -1)),), 2))


def test_hilbert_basis_experimental():
    c = AffineSemigroup(cone_from_rays([(1, 0), (1, 2)], 2), Z2)
    assert c.hilbert_basis() == [(1, 0), (1, 1), (1, 2)]
    assert AffineSemigroup(ORTHANT, Z2).hilbert_basis() == [(0, 1), (1, 0)]
    with pytest.raises(NotImplementedError):
        AffineSemigroup(zero_cone(4), Sublattice.full(4)).hilbert_basis()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_round_trip_and_dichotomy(seed, rank):
    f = random_quasi_affine_fan(np.random.default_rng(seed), rank)
    rec = reconstruct_details(weight_set_D(f))
    assert semigroup_equal(rec.semigroup, toric_weight_monoid(f.support_hull))
    nrays = len(f.support_hull.rays)
    assert rec.case == {0: 3, 1: 2}.get(nrays, 1)
    if nrays >= 2:
        conv = cone_from_rays([g for k in rec.asymptotic for g in k.generators], rank)
        assert conv.dim == rec.span.rank
