"""
Demazure roots and Ga-actions
=============================

A root (rho, e) gives the derivation chi^m -> <m, v_rho> chi^(e+m). On a
quasi-affine X it descends exactly when, for every boundary face tau that
contains rho, e does not vanish on the other rays of tau.
"""

import numpy as np

from torus_roots.cones import cone_from_rays, faces
from torus_roots.demazure import (
    InvarianceOracle,
    annihilation_steps,
    apply_derivation,
    brute_force_invariance,
    demazure_root,
    enumerate_roots,
    preserves_orbit_closure,
    violation_certificate,
    weight_set_D,
)
from torus_roots.fans import face_fan, random_strongly_convex_cone, validate_fan

orthant = cone_from_rays([(1, 0), (0, 1)], 2)
r = demazure_root(orthant, (1, 0), (-1, 1))

# The derivation lowers <m, v_rho> by one each time, so chi^m dies after <m, v>+1 steps.
print("d(chi^(2,0)) =", apply_derivation(orthant, r, (2, 0)))
print("steps to kill chi^(3,0):", annihilation_steps(orthant, r, (3, 0)))

# Orbit-closure invariance: closed form versus a brute-force check of the ideal.
bad = demazure_root(orthant, (1, 0), (-1, 0))
for root in (r, bad):
    print(f"root {root.e}: criterion {preserves_orbit_closure(orthant, root, orthant)},"
          f" brute force {brute_force_invariance(orthant, root, orthant, 6)},"
          f" certificate {violation_certificate(orthant, root, orthant)}")

# Roots of A^2 versus A^2 minus the origin: the punctured plane loses (-1,0) and (0,-1).
punctured = validate_fan([cone_from_rays([(1, 0)], 2), cone_from_rays([(0, 1)], 2)])
print("A^2      :", [(x.rho, x.e) for x in enumerate_roots(face_fan(orthant), 2)])
print("A^2 \\ 0  :", [(x.rho, x.e) for x in enumerate_roots(punctured, 2)])
print("D(A^2\\0) pieces:", [p.label for p in weight_set_D(punctured).pieces])

# Criterion versus oracle on a random rank-3 cone.
sigma = random_strongly_convex_cone(np.random.default_rng(3), 3, entry_bound=1)
oracle = InvarianceOracle(sigma, 8)
agree = total = 0
for root in enumerate_roots(face_fan(sigma), 4):
    for f in faces(sigma):
        total += 1
        agree += preserves_orbit_closure(sigma, root, f.cone) == oracle.invariant(root, f.cone)
print(f"{sigma}: {agree}/{total} verdicts agree with the box-8 oracle")
