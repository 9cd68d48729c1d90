"""The monodromy matrix of a quasitriangular quasi-Hopf algebra inside its double.

Key functions: monodromy_matrix, verify_monodromy, monodromy_bijectivity, monodromy_suite,
second_level_monodromy
"""
from .monodromy import (
    MonodromyData,
    monodromy_bijectivity,
    monodromy_matrix,
    monodromy_suite,
    second_level_monodromy,
    verify_monodromy,
)

__all__ = [
    "MonodromyData",
    "monodromy_bijectivity",
    "monodromy_matrix",
    "monodromy_suite",
    "second_level_monodromy",
    "verify_monodromy",
]
