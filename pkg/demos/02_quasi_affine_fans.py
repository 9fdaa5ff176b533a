"""
Quasi-affine fans and boundary faces
====================================

A toric variety is quasi-affine exactly when every maximal cone of its fan is
a face of the support hull. The faces of the hull that the fan misses are
the orbits that were removed from the affine hull X_aff.
"""

import numpy as np

from torus_roots.cones import cone_from_rays, faces
from torus_roots.fans import boundary_faces, is_quasi_affine, random_quasi_affine_fan, validate_fan

E = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

# The punctured plane: two rays, hull = the orthant, origin removed.
punctured = validate_fan([cone_from_rays([(1, 0)], 2), cone_from_rays([(0, 1)], 2)])
print("A^2 minus 0 quasi-affine:", is_quasi_affine(punctured)[0])
print("  boundary faces:", [b.face for b in boundary_faces(punctured)])

# P^1: the hull is a line, so it is not quasi-affine.
p1 = validate_fan([cone_from_rays([(1,)], 1), cone_from_rays([(-1,)], 1)])
print("P^1:", is_quasi_affine(p1))

# A^3 minus the first coordinate axis misses only the face cone(e2, e3).
a3_line = validate_fan([cone_from_rays([E[0], E[1]], 3), cone_from_rays([E[0], E[2]], 3)])
print("A^3 minus a line, boundary:", [b.face for b in boundary_faces(a3_line)])

# Random quasi-affine fans: the face fan of a pointed cone minus an up-set of faces.
rng = np.random.default_rng(0)
for _ in range(3):
    f = random_quasi_affine_fan(rng, 3)
    print(f"hull with {len(f.support_hull.rays)} rays, {len(faces(f.support_hull))} faces,"
          f" boundary dims {[b.dim for b in boundary_faces(f)]}")
