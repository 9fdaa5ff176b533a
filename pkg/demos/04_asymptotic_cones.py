"""
Asymptotic cones of weight sets
===============================

D(X) is an infinite set of lattice points. Its asymptotic cone is computed
exactly from the piece structure, and a brute-force sampler confirms it:
directions of far-away members approach the cone.
"""

from torus_roots.cones import cone_from_ineqs, cone_from_rays
from torus_roots.demazure import root_set, weight_set_D
from torus_roots.fans import validate_fan
from torus_roots.lattice_sets import (
    ConicLatticeSet,
    asymptotic_cone,
    directions_outside,
    find_witness,
    sample_directions,
    transfer_lattice_point,
)

orthant = cone_from_rays([(1, 0), (0, 1)], 2)
s = root_set(orthant, (1, 0))
print("S_rho contains (-1,3):", s.contains((-1, 3)), " (-1,-1):", s.contains((-1, -1)))
print("witness:", find_witness(s.pieces[0]).point)
print("asymptotic cone:", asymptotic_cone(s))

# Translation does not change the asymptotic cone.
moved = ConicLatticeSet((s.pieces[0].shifted((7, -7)),), 2)
print("after shifting by (7,-7):", asymptotic_cone(moved))

# Sampling: primitive directions of members in the shell 100 <= |x| <= 200.
dirs = sample_directions(s, 100)
print(f"{len(dirs)} sampled directions, first {dirs[:3]}, last {dirs[-1]}")
k = asymptotic_cone(s)[0]
print("directions farther than 2/100 from K:", directions_outside(k, dirs, 2, 100))

# D(X) for A^2 minus the origin: union of two rays, the boundary of the orthant.
punctured = validate_fan([cone_from_rays([(1, 0)], 2), cone_from_rays([(0, 1)], 2)])
print("D_inf(A^2 minus 0):", asymptotic_cone(weight_set_D(punctured)))

# Moving a lattice point from level -1 to level +1 of a hyperplane.
half = cone_from_ineqs([(0, 1)], 2)
print("transfer:", transfer_lattice_point(half, (1, 0), (-1, 0), (0, 1)))
print("transfer:", transfer_lattice_point(orthant, (1, -1), (0, 1), (1, 1)))
