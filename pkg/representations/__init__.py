"""Representations of D(G) as G-modules carrying a normal coherent Δ-flip.

Key functions: check_flip, extend_rep, restricted_flip, majid_conditions, hom_check
"""
from .modules import (
    DModule,
    DeltaFlip,
    GModule,
    module_checks,
    regular_double_module,
    regular_module,
    tensor_module,
    trivial_module,
    unit_flip,
    verify_module,
)
from .flips import check_flip, extend_rep, hom_check, majid_conditions, restricted_flip

__all__ = [
    "DModule",
    "DeltaFlip",
    "GModule",
    "module_checks",
    "regular_double_module",
    "regular_module",
    "tensor_module",
    "trivial_module",
    "unit_flip",
    "verify_module",
    "check_flip",
    "extend_rep",
    "hom_check",
    "majid_conditions",
    "restricted_flip",
]
