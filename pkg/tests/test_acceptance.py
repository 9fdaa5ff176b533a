"""Acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion N [PASS|FAIL]`` line and the session summary
repeats them.
"""
import time

import numpy as np
import pytest

from torus_roots.cones import dual, faces
from torus_roots.demazure import (
    DemazureRoot,
    InvarianceOracle,
    annihilation_step_counts,
    descends_to_quasi_affine,
    enumerate_root_set,
    enumerate_roots,
    preserves_orbit_closure,
    root_set,
    weight_set_D,
    weight_set_pieces,
)
from torus_roots.exact_linalg import Sublattice, dot
from torus_roots.fans import random_quasi_affine_fan, random_strongly_convex_cone
from torus_roots.golden_corpus import golden_fans
from torus_roots.harness import ORACLE_BOX, ORACLE_ENTRY_BOUND, expected_asymptotic_cones, instance_seeds
from torus_roots.lattice_sets import (
    ConicLatticeSet,
    SlicePiece,
    asymptotic_cone,
    directions_outside,
    members_in_box,
    piece_asymptotic_cone,
    sample_direction_array,
    transfer_lattice_point,
)
from torus_roots.weight_monoid import (
    counterexample_monoids,
    reconstruct_details,
    semigroup_equal,
    toric_weight_monoid,
)

from oracles import make_transfer_instance

FAN_SEED = 42
N_FANS = 100


def _fan(seed, ranks=(1, 2, 3, 4)):
    rng = np.random.default_rng(seed)
    rank = int(rng.choice(ranks))
    return random_quasi_affine_fan(rng, rank)


@pytest.fixture(scope="module")
def fans():
    return [_fan(s) for s in instance_seeds(FAN_SEED, N_FANS)]


def _rows(a):
    return {tuple(r) for r in a.tolist()}


def test_criterion_1_criterion_matches_oracle(acceptance):
    t0 = time.perf_counter()
    n_cones = checks = mismatches = 0
    for seed in instance_seeds(1, 200):
        rng = np.random.default_rng(seed)
        rank = int(rng.integers(1, 5))
        sigma = random_strongly_convex_cone(rng, rank, entry_bound=ORACLE_ENTRY_BOUND)
        oracle = InvarianceOracle(sigma, ORACLE_BOX)
        fcs = [f.cone for f in faces(sigma)]
        for rho in sigma.rays:
            for e in enumerate_root_set(sigma, rho, 6):
                r = DemazureRoot(rho, e)
                for tau in fcs:
                    checks += 1
                    mismatches += preserves_orbit_closure(sigma, r, tau) != oracle.invariant(r, tau)
        n_cones += 1
    elapsed = time.perf_counter() - t0
    ok = acceptance(1, "criterion/oracle equivalence", mismatches == 0 and elapsed <= 120,
                    f"{n_cones} cones, {checks} comparisons, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_2_asymptotic_identity(acceptance, fans):
    bad = [i for i, f in enumerate(fans)
           if asymptotic_cone(weight_set_D(f)) != expected_asymptotic_cones(f.support_hull)]
    ok = acceptance(2, "asymptotic-cone identity", not bad, f"{len(fans)} fans, failures {bad}")
    assert ok


def test_criterion_3_round_trip(acceptance, fans):
    cases = {1: 0, 2: 0, 3: 0}
    bad = []
    corpus = list(golden_fans().items())
    for name, f in [(str(i), f) for i, f in enumerate(fans)] + corpus:
        rec = reconstruct_details(weight_set_D(f))
        cases[rec.case] += 1
        if not semigroup_equal(rec.semigroup, toric_weight_monoid(f.support_hull)):
            bad.append(name)
    golden_cases = {name: reconstruct_details(weight_set_D(f)).case for name, f in corpus}
    ok = not bad and golden_cases["cylinder_2"] == 2 and golden_cases["torus_2"] == 3
    ok = acceptance(3, "weight monoid round trip", ok,
                    f"{len(fans)} fans + {len(corpus)} golden, cases {cases}, failures {bad}")
    assert ok


def test_criterion_4_root_sandwich(acceptance, fans):
    violations = checked = 0
    for f in fans:
        sigma = f.support_hull
        d_pieces = weight_set_pieces(f)
        for rho in sigma.rays:
            s = root_set(sigma, rho).pieces[0]
            inner = SlicePiece(s.base_cone, rho, -1, interior_only=True)
            s_pts, i_pts = _rows(members_in_box(s, 8)), _rows(members_in_box(inner, 8))
            d_pts = _rows(members_in_box(d_pieces[rho], 8))
            violations += len(i_pts - d_pts) + len(d_pts - s_pts)
            checked += len(s_pts)
            # membership in D_rho agrees with the descent condition itself
            for e in sorted(s_pts)[:40]:
                violations += (e in d_pts) != descends_to_quasi_affine(f, DemazureRoot(rho, e))
    ok = acceptance(4, "root sandwich", violations == 0,
                    f"{len(fans)} fans, {checked} window points, {violations} violations")
    assert ok


def test_criterion_5_generation(acceptance, fans):
    bad, worst = [], 0
    for i, f in enumerate(fans):
        if f.support_hull.is_zero:
            continue
        n, bound, span = f.ambient_rank, 1, Sublattice.span([], f.ambient_rank)
        while bound <= 16:
            span = Sublattice.span([r.e for r in enumerate_roots(f, bound)], n)
            if span.is_full:
                break
            bound *= 2
        if span.is_full:
            worst = max(worst, bound)
        else:
            bad.append(i)
    ok = acceptance(5, "D(X) generates M", not bad,
                    f"largest bound needed {worst}, failures {bad}")
    assert ok


def test_criterion_6_sampling_convergence(acceptance):
    radius = 1000
    pieces, bad = [], []
    for seed in instance_seeds(6, 200):
        if len(pieces) >= 50:
            break
        f = _fan(seed, ranks=(2, 2, 3))
        pieces.extend(list(weight_set_pieces(f).values())[:2])
    for i, p in enumerate(pieces):
        k = piece_asymptotic_cone(p)
        dirs = sample_direction_array(ConicLatticeSet((p,), p.ambient_rank), radius)
        # ||d/||d|| - K||_inf <= 2/R, decided exactly
        if len(dirs) == 0 or directions_outside(k, dirs, 2, radius):
            bad.append(i)
    ranks = sorted({p.ambient_rank for p in pieces})
    ok = acceptance(6, "sampling oracle convergence", len(pieces) >= 50 and not bad,
                    f"{len(pieces)} pieces of rank {ranks}, radius {radius}, failures {bad}")
    assert ok


def test_criterion_7_nilpotency_step_count(acceptance, fans):
    n_roots = n_monomials = bad = 0
    for f in fans:
        sigma = f.support_hull
        ms = members_in_box(SlicePiece(dual(sigma)), 6)
        for r in enumerate_roots(f, 2):
            steps = annihilation_step_counts(sigma, r, ms)
            bad += int((steps != ms @ np.asarray(r.rho) + 1).sum())
            n_roots += 1
            n_monomials += len(ms)
    ok = acceptance(7, "local nilpotency step count", bad == 0,
                    f"{n_roots} roots, {n_monomials} monomials, {bad} deviations")
    assert ok


def test_criterion_8_counterexample(acceptance):
    bad = []
    for d in range(2, 7):
        for s in range(2, 7):
            a, b, distinct, w = counterexample_monoids(d, s)
            if not (distinct and w == d and a.contains(w) and not b.contains(w)):
                bad.append((d, s))
    ok = acceptance(8, "weight monoids distinct", not bad, f"25 parameter pairs, failures {bad}")
    assert ok


def test_criterion_9_transfer(acceptance):
    n, bad = 0, 0
    for seed in instance_seeds(9, 400):
        if n >= 100:
            break
        inst = make_transfer_instance(np.random.default_rng(seed))
        if inst is None:
            continue
        c, h, gm, g0 = inst
        out = transfer_lattice_point(c, h, gm, g0)
        n += 1
        bad += not (c.contains(out) and dot(h, out) == 1 and all(isinstance(a, int) for a in out))
    ok = acceptance(9, "transfer constructiveness", n >= 100 and bad == 0,
                    f"{n} instances, {bad} failures")
    assert ok
