"""The quantum double D(G) of a finite-dimensional quasi-Hopf algebra.

Key functions: two_sided_coaction, omega_elements, diagonal_product, right_double,
build_double, verify_double, d_matrix, d_inverse, lt_transform, left_right_iso
"""
from .coaction import TwoSidedCoaction, coherence_element, coherence_sides, two_sided_coaction
from .omega import OmegaElements, omega_elements
from .crossed_product import DenseData, dense_data, diagonal_product, embedding_map, right_double
from .flip import (
    d_inverse,
    d_matrix,
    flip_relations,
    implementer_relations,
    l_to_t,
    lt_transform,
    t_to_l,
    target_algebra,
    universal_flip,
)
from .double import (
    DoubleAlgebra,
    build_double,
    flip_weights,
    hopf_generator_check,
    mu_inverse,
    mu_map,
    verify_double,
)
from .isomorphism import CrossedProductIso, connecting_elements, left_right_iso

__all__ = [
    "TwoSidedCoaction",
    "coherence_element",
    "coherence_sides",
    "two_sided_coaction",
    "OmegaElements",
    "omega_elements",
    "DenseData",
    "dense_data",
    "diagonal_product",
    "embedding_map",
    "right_double",
    "d_inverse",
    "d_matrix",
    "flip_relations",
    "implementer_relations",
    "l_to_t",
    "lt_transform",
    "t_to_l",
    "target_algebra",
    "universal_flip",
    "DoubleAlgebra",
    "build_double",
    "flip_weights",
    "hopf_generator_check",
    "mu_inverse",
    "mu_map",
    "verify_double",
    "CrossedProductIso",
    "connecting_elements",
    "left_right_iso",
]
