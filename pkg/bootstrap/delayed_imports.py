"""Delayed imports: modules requiring runtime dependency checks.

Loaded after run_runtime_checks(). Includes: numpy.
"""
# ruff: noqa: F401 - re-exports for other modules
import numpy as np
