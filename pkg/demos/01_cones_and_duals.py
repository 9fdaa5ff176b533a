"""
Cones, duals and faces
======================

Cones are kept in both descriptions at once, so dual cones and faces are
cheap and every field is canonical.
"""

from torus_roots.cones import cone_from_rays, dual, faces, intersect, cone_from_ineqs
from torus_roots.exact_linalg import Sublattice, hermite_normal_form, smith_normal_form

# The interior generator (1,1) is dropped; rays are primitive and sorted.
sigma = cone_from_rays([(1, 0), (1, 2), (1, 1)], 2)
print("sigma      :", sigma)
print("dual       :", dual(sigma))
print("dual(dual) == sigma:", dual(dual(sigma)) == sigma)

# Faces come with a supporting normal taken from the dual cone.
for f in faces(sigma):
    print(f"  dim {f.dim}: rays {list(map(list, f.cone.rays))}, normal {list(f.normal)}")

# A line is not strongly convex: it shows up as lineality.
line = cone_from_rays([(1, 0), (-1, 0)], 2)
print("line lineality:", line.lineality, "strongly convex:", line.is_strongly_convex)

# Intersections go through the inequality description.
orthant = cone_from_rays([(1, 0), (0, 1)], 2)
print("orthant ∩ {x <= 0}:", intersect(orthant, cone_from_ineqs([(-1, 0)], 2)))

# Integer linear algebra underneath: Hermite and Smith forms, sublattices.
h, u = hermite_normal_form([[2, 4], [1, 3]])
print("HNF:", h, "transform:", u)
print("SNF of diag(2,3):", smith_normal_form([[2, 0], [0, 3]]))
print("span{(2,0),(0,2),(1,1)}:", Sublattice.span([(2, 0), (0, 2), (1, 1)], 2).basis)
