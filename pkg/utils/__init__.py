"""Utility modules: error types, check reports, number and label formatting."""
from .errors import (
    QHAError,
    SignatureMismatchError,
    UnknownSpaceError,
    LegIndexError,
    SingularElementError,
    StructureError,
    SpecFileError,
)
from .report import CheckResult, Report

__all__ = [
    "QHAError",
    "SignatureMismatchError",
    "UnknownSpaceError",
    "LegIndexError",
    "SingularElementError",
    "StructureError",
    "SpecFileError",
    "CheckResult",
    "Report",
]
