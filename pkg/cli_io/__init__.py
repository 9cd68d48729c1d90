"""Spec files, exports and the command-line surface.

Key functions: load, export_algebra, export_structure, write_records, run
"""
from .readers import StructureFile, load, load_algebra, load_cocycle, load_group, resolve_spec_path
from .exporters import algebra_records, export_algebra, export_structure, write_records
from .commands import algebra_suite, build_parser, run

__all__ = [
    "StructureFile",
    "load",
    "load_algebra",
    "load_cocycle",
    "load_group",
    "resolve_spec_path",
    "algebra_records",
    "export_algebra",
    "export_structure",
    "write_records",
    "algebra_suite",
    "build_parser",
    "run",
]
