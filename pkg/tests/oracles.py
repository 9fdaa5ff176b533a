"""Independent oracles used by the tests: brute force, LP and sympy."""
import itertools
from math import gcd

import numpy as np
from scipy.optimize import linprog

from torus_roots.exact_linalg import annihilator
from torus_roots.fans import random_strongly_convex_cone
from torus_roots.lattice_sets import SlicePiece, nonempty_witness


def determinantal_divisors(m):
    """Elementary divisors as ratios of gcds of k x k minors."""
    import sympy
    a = sympy.Matrix(m)
    ds, prev = [], 1
    for k in range(1, min(a.shape) + 1):
        g = 0
        for rows in itertools.combinations(range(a.rows), k):
            for cols in itertools.combinations(range(a.cols), k):
                g = gcd(g, int(a.extract(list(rows), list(cols)).det()))
        if g == 0:
            break
        ds.append(g // prev)
        prev = g
    return ds


def in_cone_lp(x, gens) -> bool:
    """Is x a nonnegative combination of gens? (floating LP, small integer data)."""
    if not gens:
        return not any(x)
    a = np.array(gens, dtype=float).T
    res = linprog(np.zeros(len(gens)), A_eq=a, b_eq=np.array(x, dtype=float),
                  bounds=[(0, None)] * len(gens), method="highs")
    return res.status == 0


def is_face_subset_lp(subset, rays, n) -> bool:
    """Is there u with <u, r> = 0 on subset and >= 1 on the other rays?"""
    others = [r for r in rays if r not in subset]
    a_eq = np.array(subset, dtype=float) if subset else None
    b_eq = np.zeros(len(subset)) if subset else None
    a_ub = -np.array(others, dtype=float) if others else None
    b_ub = -np.ones(len(others)) if others else None
    res = linprog(np.zeros(n), A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b_eq,
                  bounds=[(None, None)] * n, method="highs")
    return res.status == 0


def box_points(n, bound):
    return itertools.product(range(-bound, bound + 1), repeat=n)


def make_transfer_instance(rng):
    """Random (C, h0, gamma_-1, gamma_0) satisfying the preconditions, or None."""
    rank = int(rng.integers(2, 5))
    c = random_strongly_convex_cone(rng, rank, full_dim=True)
    a = [int(x) for x in rng.integers(1, 4, size=len(c.rays))]
    g0 = tuple(sum(k * r[i] for k, r in zip(a, c.rays)) for i in range(rank))
    basis = annihilator([g0], rank)
    b = [int(x) for x in rng.integers(-3, 4, size=len(basis))]
    h = tuple(sum(k * v[i] for k, v in zip(b, basis)) for i in range(rank))
    if not any(h):
        return None
    gm = nonempty_witness(SlicePiece(c, h, -1))
    if gm is None:
        return None
    return c, h, gm, g0
