"""Finite groups, 3-cocycles, Fun(G)^ω and the twisted double D^ω(G).

Key functions: verify_cocycle, fun_qha, dpr_double, sigma_check
"""
from .groups import FiniteGroup, cyclic_group, group_from_permutations, symmetric_group
from .cocycles import (
    ThreeCocycle,
    coboundary_modified,
    cyclic_standard_cocycle,
    sparse_cocycle,
    trivial_cocycle,
    verify_cocycle,
)
from .fun_algebra import fun_algebra, fun_qha
from .dpr import (
    TwistedDouble,
    coproduct_coefficient,
    dpr_double,
    product_coefficient,
    sigma_check,
    sigma_matrix,
    verify_twisted_double,
)

__all__ = [
    "FiniteGroup",
    "cyclic_group",
    "group_from_permutations",
    "symmetric_group",
    "ThreeCocycle",
    "coboundary_modified",
    "cyclic_standard_cocycle",
    "sparse_cocycle",
    "trivial_cocycle",
    "verify_cocycle",
    "fun_algebra",
    "fun_qha",
    "TwistedDouble",
    "coproduct_coefficient",
    "dpr_double",
    "product_coefficient",
    "sigma_check",
    "sigma_matrix",
    "verify_twisted_double",
]
