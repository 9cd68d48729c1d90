"""The dual Ĝ of a quasi-Hopf algebra: coassociative coalgebra, non-associative algebra.

Key classes: DualStructure
Key functions: dual_of, arrows, arrow_checks
"""
from .structure import DualStructure, arrow_checks, arrows, coproduct_array, counit_array, dual_of, structure_array

__all__ = [
    "DualStructure",
    "arrow_checks",
    "arrows",
    "coproduct_array",
    "counit_array",
    "dual_of",
    "structure_array",
]
