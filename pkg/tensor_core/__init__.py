"""Tensor core: sparse multilinear arithmetic in products of finite-dimensional algebras.

Key functions: tensor_product, multiply, leg_embed, apply_to_leg, pairing, evaluate_words
"""
from .signature import SpaceSignature
from .tensor import Tensor, tensor_product, tensor_power_product, leg_embed, superscript, max_abs_diff
from .algebra import (
    AlgebraData,
    register_algebra,
    resolve_algebra,
    make_space_id,
    multiply,
    multiply_chain,
    unit_tensor,
    unit_dict,
    is_unit,
    invert,
    left_multiplication_matrix,
    matrix_algebra,
)
from .legmaps import LegMap, apply_to_leg, apply_to_legs, multiply_legs
from .sweedler import Leg, evaluate_words, sandwich
from .pairing import pairing, dual_space_id, primal_space_id

__all__ = [
    "SpaceSignature",
    "Tensor",
    "tensor_product",
    "tensor_power_product",
    "leg_embed",
    "superscript",
    "max_abs_diff",
    "AlgebraData",
    "register_algebra",
    "resolve_algebra",
    "make_space_id",
    "multiply",
    "multiply_chain",
    "unit_tensor",
    "unit_dict",
    "is_unit",
    "invert",
    "left_multiplication_matrix",
    "matrix_algebra",
    "LegMap",
    "apply_to_leg",
    "apply_to_legs",
    "multiply_legs",
    "Leg",
    "evaluate_words",
    "sandwich",
    "pairing",
    "dual_space_id",
    "primal_space_id",
]
