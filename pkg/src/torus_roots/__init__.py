"""Demazure roots, Ga-actions and weight monoids of quasi-affine toric varieties."""
from .cones import Cone, cone_from_ineqs, cone_from_rays, dual, faces, is_face, minus_ray
from .demazure import (
    DemazureRoot,
    apply_derivation,
    brute_force_invariance,
    demazure_root,
    descends_to_quasi_affine,
    enumerate_roots,
    preserves_orbit_closure,
    root_set,
    verify_locally_nilpotent,
    weight_set_D,
)
from .exact_linalg import Sublattice, hermite_normal_form, smith_normal_form
from .fans import Fan, boundary_faces, fan_from_rays, is_quasi_affine, validate_fan
from .lattice_sets import (
    ConicLatticeSet,
    SlicePiece,
    asymptotic_cone,
    nonempty_witness,
    sample_directions,
    transfer_lattice_point,
)
from .weight_monoid import (
    AffineSemigroup,
    counterexample_monoids,
    reconstruct,
    semigroup_equal,
    toric_weight_monoid,
)

__version__ = "0.1.0"
