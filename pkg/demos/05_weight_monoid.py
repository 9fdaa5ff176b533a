"""
Recovering the weight monoid from D(X)
======================================

The weight monoid sigma^∨ ∩ M is recovered as Conv(D_inf) ∩ Span_Z(D).
A single ray gives a half-space and the torus gives the whole lattice.
The rank-one monoids {kd} and {kd : k = 0 or k >= s} show that weight
monoids alone do not tell the two varieties apart.
"""

from torus_roots.cones import cone_from_rays, zero_cone
from torus_roots.demazure import weight_set_D
from torus_roots.fans import face_fan, validate_fan
from torus_roots.weight_monoid import (
    counterexample_monoids,
    reconstruct_details,
    semigroup_equal,
    toric_weight_monoid,
)

examples = {
    "A^2 minus 0": validate_fan([cone_from_rays([(1, 0)], 2), cone_from_rays([(0, 1)], 2)]),
    "quadric cone": face_fan(cone_from_rays([(1, 0), (1, 2)], 2)),
    "A^1 x torus": face_fan(cone_from_rays([(1, 0)], 2)),
    "torus": face_fan(zero_cone(2)),
}
for name, f in examples.items():
    rec = reconstruct_details(weight_set_D(f))
    same = semigroup_equal(rec.semigroup, toric_weight_monoid(f.support_hull))
    print(f"{name:14s} case {rec.case}: {rec.semigroup.cone}, lattice rank {rec.span.rank},"
          f" equal to sigma^∨ ∩ M: {same}")

print("Hilbert basis of the quadric cone's monoid:",
      toric_weight_monoid(cone_from_rays([(1, 0), (1, 2)], 2)).hilbert_basis())

for d, s in [(2, 2), (3, 4), (5, 3)]:
    a, b, distinct, w = counterexample_monoids(d, s)
    print(f"d={d}, s={s}: {a.members(4 * d)} vs {b.members(4 * d)}, witness {w}")
