"""Quasi-Hopf algebras: containers, axiom checks, derived elements, twists and variants.

Key functions: verify_quasi_hopf, verify_quasitriangular, derived_twists, pq_elements,
apply_twist, variants, r_inverse_formula, antipode_image_check
"""
from .structures import (
    QuasiBialgebra,
    QuasiHopfAlgebra,
    QuasiTriangularQHA,
    make_quasi_hopf,
    make_quasitriangular,
    opposite_coproduct,
)
from .axioms import verify_quasi_hopf, verify_quasitriangular, pentagon_sides, hexagon_sides, quasi_ybe_sides
from .derived import DerivedElements, derived_twists, pq_elements, gamma_delta
from .twists import (
    apply_twist,
    twisted_phi,
    random_admissible_twist,
    compose_twists,
    twist_chain_check,
    twist_covariance,
    coboundary_twist,
    counit_defect,
)
from .variants import op_variant, cop_variant, op_cop_variant, variants
from .r_matrix import r_inverse_formula, antipode_image_check, inverse_display
from .builders import group_algebra, sweedler_algebra

__all__ = [
    "QuasiBialgebra",
    "QuasiHopfAlgebra",
    "QuasiTriangularQHA",
    "make_quasi_hopf",
    "make_quasitriangular",
    "opposite_coproduct",
    "verify_quasi_hopf",
    "verify_quasitriangular",
    "pentagon_sides",
    "hexagon_sides",
    "quasi_ybe_sides",
    "DerivedElements",
    "derived_twists",
    "pq_elements",
    "gamma_delta",
    "apply_twist",
    "twisted_phi",
    "random_admissible_twist",
    "compose_twists",
    "twist_chain_check",
    "twist_covariance",
    "coboundary_twist",
    "counit_defect",
    "op_variant",
    "cop_variant",
    "op_cop_variant",
    "variants",
    "r_inverse_formula",
    "antipode_image_check",
    "inverse_display",
    "group_algebra",
    "sweedler_algebra",
]
