"""Seeded random-instance verification suites.

Every instance draws its own 64-bit seed from a ``SeedSequence`` rooted at
the run seed, so a single instance can be replayed with :func:`run_instance`.
"""
from __future__ import annotations

import concurrent.futures as cf
from functools import partial

import numpy as np

from .cones import dual, faces, hyperplane, intersect
from .demazure import (
    DemazureRoot,
    InvarianceOracle,
    annihilation_step_counts,
    enumerate_root_set,
    enumerate_roots,
    preserves_orbit_closure,
    weight_set_D,
)
from .exact_linalg import Sublattice
from .fans import random_quasi_affine_fan, random_strongly_convex_cone
from .lattice_sets import ConicLatticeSet, SlicePiece, asymptotic_cone, members_in_box
from .weight_monoid import reconstruct_details, semigroup_equal, toric_weight_monoid

SUITES = ("asymcone", "demazure", "reconstruct")
# cone entries for the criterion/oracle suite; see the notes on box truncation
ORACLE_ENTRY_BOUND = 1
ROOT_BOUND = 6
ORACLE_BOX = 8


def instance_seeds(seed: int, n: int) -> list[int]:
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(n, dtype=np.uint64)]


def _cone_key(c):
    return (c.dim, c.lineality, c.rays)


def expected_asymptotic_cones(sigma) -> list:
    """sigma^∨ minus its interior, as the facet cones sigma^∨ ∩ rho^⊥."""
    n = sigma.ambient_rank
    return sorted({intersect(dual(sigma), hyperplane(r, n)) for r in sigma.rays}, key=_cone_key)


def check_asymcone(rng: np.random.Generator, max_rank: int) -> dict:
    rank = int(rng.integers(1, max_rank + 1))
    f = random_quasi_affine_fan(rng, rank)
    d = weight_set_D(f)
    got = asymptotic_cone(d)
    shift = tuple(int(x) for x in rng.integers(-3, 4, size=rank))
    moved = asymptotic_cone(ConicLatticeSet(tuple(p.shifted(shift) for p in d.pieces), rank))
    return {"rank": rank, "rays": [list(r) for r in f.support_hull.rays],
            "checks": {"asymptotic_identity": got == expected_asymptotic_cones(f.support_hull),
                       "translation_invariance": moved == got}}


def check_demazure(rng: np.random.Generator, max_rank: int) -> dict:
    rank = int(rng.integers(1, max_rank + 1))
    sigma = random_strongly_convex_cone(rng, rank, entry_bound=ORACLE_ENTRY_BOUND)
    oracle = InvarianceOracle(sigma, ORACLE_BOX)
    fcs = [fc.cone for fc in faces(sigma)]
    n_checks = mismatches = 0
    nilpotent = True
    ms = members_in_box(SlicePiece(dual(sigma)), 6)
    for rho in sigma.rays:
        for e in enumerate_root_set(sigma, rho, ROOT_BOUND):
            r = DemazureRoot(rho, e)
            for tau in fcs:
                n_checks += 1
                mismatches += preserves_orbit_closure(sigma, r, tau) != oracle.invariant(r, tau)
            if max(abs(a) for a in e) <= 2:
                steps = annihilation_step_counts(sigma, r, ms)
                nilpotent &= bool((steps == ms @ np.asarray(rho) + 1).all())
    return {"rank": rank, "rays": [list(r) for r in sigma.rays], "comparisons": n_checks,
            "checks": {"criterion_matches_oracle": mismatches == 0, "nilpotency_steps": nilpotent}}


def check_reconstruct(rng: np.random.Generator, max_rank: int) -> dict:
    rank = int(rng.integers(1, max_rank + 1))
    f = random_quasi_affine_fan(rng, rank)
    sigma = f.support_hull
    rec = reconstruct_details(weight_set_D(f))
    checks = {"round_trip": semigroup_equal(rec.semigroup, toric_weight_monoid(sigma))}
    if not sigma.is_zero:
        span, bound = Sublattice.span([], rank), 1
        while bound <= 16 and not span.is_full:
            span = Sublattice.span([r.e for r in enumerate_roots(f, bound)], rank)
            bound *= 2
        checks["generates_lattice"] = span.is_full
    return {"rank": rank, "rays": [list(r) for r in sigma.rays], "case": rec.case,
            "checks": checks}


_CHECKS = {"asymcone": check_asymcone, "demazure": check_demazure,
           "reconstruct": check_reconstruct}


def run_instance(suite: str, seed: int, max_rank: int = 4) -> dict:
    """Run one instance of a suite (or all suites) from its recorded seed."""
    names = SUITES if suite == "all" else (suite,)
    out = {"seed": seed, "results": {}}
    for name in names:
        rng = np.random.default_rng(seed)
        out["results"][name] = _CHECKS[name](rng, max_rank)
    out["pass"] = all(all(r["checks"].values()) for r in out["results"].values())
    return out


def run_verify(suite: str, instances: int, seed: int, max_rank: int = 4, workers: int = 1) -> dict:
    if suite not in SUITES + ("all",):
        raise ValueError(f"unknown suite {suite!r}")
    if instances < 1:
        raise ValueError("instances must be >= 1")
    if not 1 <= max_rank <= 4:
        raise ValueError("rank must be between 1 and 4")
    seeds = instance_seeds(seed, instances)
    job = partial(run_instance, suite, max_rank=max_rank)
    if workers > 1:
        with cf.ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(job, seeds))
    else:
        results = [job(s) for s in seeds]
    for i, r in enumerate(results):
        r["index"] = i
    passed = sum(r["pass"] for r in results)
    return {"suite": suite, "instances": instances, "seed": seed, "max_rank": max_rank,
            "passed": passed, "failed": instances - passed, "results": results,
            "pass": passed == instances}


__all__ = ["SUITES", "expected_asymptotic_cones", "instance_seeds", "run_instance", "run_verify"]
