import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torus_roots.cones import cone_from_ineqs, cone_from_rays, dual, hyperplane, intersect, zero_cone
from torus_roots.demazure import root_set, weight_set_pieces
from torus_roots.exact_linalg import Sublattice, dot
from torus_roots.fans import random_quasi_affine_fan, random_strongly_convex_cone
from torus_roots.lattice_sets import (
    ConicLatticeSet,
    PreconditionViolated,
    SlicePiece,
    UnsupportedPiece,
    asymptotic_cone,
    contains,
    directions_outside,
    find_witness,
    members_in_box,
    nonempty_witness,
    piece_asymptotic_cone,
    sample_directions,
    search_cap,
    set_members_in_box,
    transfer_lattice_point,
)

from oracles import box_points, make_transfer_instance

ORTHANT = cone_from_rays([(1, 0), (0, 1)], 2)
S_ORTHANT = root_set(ORTHANT, (1, 0))
P_ORTHANT = S_ORTHANT.pieces[0]


def test_contains_examples():
    assert contains(S_ORTHANT, (-1, 3))
    assert not contains(S_ORTHANT, (-1, -1))
    assert not contains(S_ORTHANT, (0, 1))


def test_asymptotic_cone_examples():
    lattice_orthant = ConicLatticeSet((SlicePiece(ORTHANT),), 2)
    assert asymptotic_cone(lattice_orthant) == [ORTHANT]
    assert asymptotic_cone(S_ORTHANT) == [cone_from_rays([(0, 1)], 2)]
    moved = ConicLatticeSet((P_ORTHANT.shifted((7, -7)),), 2)
    assert asymptotic_cone(moved) == asymptotic_cone(S_ORTHANT)
    assert asymptotic_cone(ConicLatticeSet((), 2)) == []


def test_finite_and_empty_pieces():
    # a bounded slice: the orthant on level 3 of (1,1) is a finite set
    finite = SlicePiece(ORTHANT, (1, 1), 3)
    assert piece_asymptotic_cone(finite) == zero_cone(2)
    empty = SlicePiece(ORTHANT, (1, 0), -1)
    assert piece_asymptotic_cone(empty) is None
    res = find_witness(empty)
    assert res.point is None and not res.real_feasible
    # lattice-infeasible: 2x = 1
    odd = SlicePiece(cone_from_ineqs([], 2), (2, 0), 1)
    assert nonempty_witness(odd) is None
    assert piece_asymptotic_cone(odd) is None


def test_witness_examples():
    interior = SlicePiece(P_ORTHANT.base_cone, (1, 0), -1, interior_only=True)
    assert nonempty_witness(interior) == (-1, 1)
    s = root_set(cone_from_rays([(1, 0)], 2), (1, 0)).pieces[0]
    assert nonempty_witness(s) == (-1, 0)


def test_sample_directions_examples():
    d = sample_directions(S_ORTHANT, 100)
    assert d == [(-1, b) for b in range(100, 201)]
    finite = ConicLatticeSet((SlicePiece(zero_cone(2), translation=(3, 3)),), 2)
    assert sample_directions(finite, 10) == []
    dirs = sample_directions(ConicLatticeSet((SlicePiece(ORTHANT),), 2), 5)
    assert all(a >= 0 and b >= 0 and np.gcd(a, b) == 1 for a, b in dirs)
    assert (1, 5) in dirs and (5, 1) in dirs and (2, 2) not in dirs
    with pytest.raises(ValueError):
        sample_directions(S_ORTHANT, 0)


def test_transfer_examples():
    half = cone_from_ineqs([(0, 1)], 2)
    assert transfer_lattice_point(half, (1, 0), (-1, 0), (0, 1)) == (1, 0)
    assert transfer_lattice_point(ORTHANT, (1, -1), (0, 1), (1, 1)) == (1, 0)
    with pytest.raises(PreconditionViolated):
        transfer_lattice_point(ORTHANT, (1, 0), (0, 1), (0, 1))


def test_members_in_box_matches_brute_force():
    p = SlicePiece(dual(cone_from_rays([(1, 0), (1, 2)], 2)), (1, 2), -1,
                   excluded_subspaces=(Sublattice.of_subspace([(1, 0)], 2),))
    expected = [x for x in box_points(2, 6) if p.contains(x)]
    assert [tuple(r) for r in members_in_box(p, 6).tolist()] == sorted(expected)


def test_lattice_rank():
    # a finite-index sublattice keeps the asymptotic cone
    p = SlicePiece(ORTHANT, lattice=Sublattice.span([(2, 0), (0, 1)], 2))
    assert piece_asymptotic_cone(p) == ORTHANT
    assert not p.contains((1, 0)) and p.contains((2, 3))
    q = SlicePiece(ORTHANT, lattice=Sublattice.span([(1, 1)], 2))
    with pytest.raises(UnsupportedPiece):
        piece_asymptotic_cone(q)


def test_search_cap_env(monkeypatch):
    monkeypatch.setenv("TORUS_ROOTS_SEARCH_CAP", "16")
    assert search_cap() == 16
    monkeypatch.delenv("TORUS_ROOTS_SEARCH_CAP")
    assert search_cap() == 1024


@st.composite
def random_pieces(draw, ranks=(2, 3)):
    seed = draw(st.integers(0, 2**32 - 1))
    rank = draw(st.sampled_from(ranks))
    f = random_quasi_affine_fan(np.random.default_rng(seed), rank)
    pieces = list(weight_set_pieces(f).values())
    return draw(st.sampled_from(pieces)) if pieces else SlicePiece(zero_cone(rank))


@settings(max_examples=40, deadline=None)
@given(random_pieces(), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_translation_invariance(p, v):
    v = tuple(v[:p.ambient_rank])
    assert piece_asymptotic_cone(p.shifted(v)) == piece_asymptotic_cone(p)


@settings(max_examples=40, deadline=None)
@given(random_pieces())
def test_members_satisfy_constraints(p):
    for x in members_in_box(p, 5).tolist():
        assert p.contains(x)
    for x in box_points(p.ambient_rank, 3):
        assert p.contains(x) == (list(x) in members_in_box(p, 3).tolist())


@settings(max_examples=30, deadline=None)
@given(st.lists(random_pieces(ranks=(2,)), min_size=2, max_size=4))
def test_union_law(pieces):
    whole = asymptotic_cone(ConicLatticeSet(tuple(pieces), 2))
    k = len(pieces) // 2
    a = asymptotic_cone(ConicLatticeSet(tuple(pieces[:k]), 2))
    b = asymptotic_cone(ConicLatticeSet(tuple(pieces[k:]), 2))
    assert set(whole) == set(a) | set(b)


@settings(max_examples=30, deadline=None)
@given(random_pieces(ranks=(2, 3)))
def test_sampled_directions_approach_the_cone(p):
    k = piece_asymptotic_cone(p)
    s = ConicLatticeSet((p,), p.ambient_rank)
    dirs = sample_directions(s, 60)
    assert directions_outside(k, dirs, 2 * 10, 60 * 10) == [] or k.is_zero


def test_directions_outside_exact():
    k = cone_from_rays([(0, 1)], 2)
    # (1, 100) normalized is (0.01, 1): distance 0.01
    assert directions_outside(k, [(1, 100)], 1, 100) == []
    assert directions_outside(k, [(1, 99)], 1, 100) == [(1, 99)]
    assert directions_outside(k, [(-1, 50)], 2, 100) == []


@st.composite
def transfer_instances(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    return make_transfer_instance(np.random.default_rng(seed))


@settings(max_examples=60, deadline=None)
@given(transfer_instances())
def test_transfer_output_verified(inst):
    if inst is None:
        return
    c, h, gm, g0 = inst
    out = transfer_lattice_point(c, h, gm, g0)
    assert c.contains(out) and dot(h, out) == 1
    assert all(isinstance(a, int) for a in out)


def test_set_members_dedupes():
    s = ConicLatticeSet((P_ORTHANT, P_ORTHANT), 2)
    assert set_members_in_box(s, 2) == [(-1, 0), (-1, 1), (-1, 2)]


def test_hyperplane_slice_piece_cone():
    p = SlicePiece(ORTHANT, (1, -1), 0)
    assert piece_asymptotic_cone(p) == intersect(ORTHANT, hyperplane((1, -1), 2))
