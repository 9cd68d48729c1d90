"""Shared fixtures: the bundled algebras and their doubles, built once per session."""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import runtime_settings as settings  # noqa: E402
from double_construction import build_double  # noqa: E402
from group_twisted_double import (  # noqa: E402
    cyclic_group,
    cyclic_standard_cocycle,
    fun_qha,
    sparse_cocycle,
    symmetric_group,
)
from quasi_hopf import group_algebra, sweedler_algebra  # noqa: E402

_SETTINGS = ("VERDICT_TOL", "SEED", "FORCE_DEEP_CHECKS", "EMIT_PASSING", "VERBOSE", "OUTPUT_DIR")


@pytest.fixture(autouse=True)
def restore_settings():
    """CLI runs call settings.override; put the loaded values back after each test."""
    saved = {name: getattr(settings, name) for name in _SETTINGS}
    yield
    for name, value in saved.items():
        setattr(settings, name, value)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2, "Z2")


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4, "Z4")


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def omega_x(z2):
    """ω(x, x, x) = −1, all other values 1."""
    return sparse_cocycle(z2, {(1, 1, 1): -1.0}, "omega_x")


@pytest.fixture(scope="session")
def omega_z4(z4):
    return cyclic_standard_cocycle(z4, 1)


@pytest.fixture(scope="session")
def cz2(z2):
    return group_algebra(z2)


@pytest.fixture(scope="session")
def cs3(s3):
    return group_algebra(s3)


@pytest.fixture(scope="session")
def fun_z2_omega(z2, omega_x):
    return fun_qha(z2, omega_x)


@pytest.fixture(scope="session")
def fun_s3(s3):
    return fun_qha(s3)


@pytest.fixture(scope="session")
def h4():
    return sweedler_algebra(0.5)


@pytest.fixture(scope="session")
def double_cz2(cz2):
    return build_double(cz2)


@pytest.fixture(scope="session")
def double_cs3(cs3):
    return build_double(cs3)


@pytest.fixture(scope="session")
def double_fun_z2_omega(fun_z2_omega):
    return build_double(fun_z2_omega)


@pytest.fixture(scope="session")
def double_fun_s3(fun_s3):
    return build_double(fun_s3)


@pytest.fixture(scope="session")
def double_h4(h4):
    return build_double(h4)
