import numpy as np
import pytest

from double_construction import (
    build_double,
    hopf_generator_check,
    left_right_iso,
    mu_inverse,
    mu_map,
    two_sided_coaction,
    verify_double,
)
from tensor_core import max_abs_diff
from utils.report import Report

DOUBLES = ["double_cz2", "double_cs3", "double_fun_z2_omega", "double_h4"]


@pytest.mark.parametrize("name", DOUBLES)
def test_build_reports_pass(request, name):
    _, report = request.getfixturevalue(name)
    assert report.passed, report.failures()
    assert report.get("mu/crossed-product-basis").passed


@pytest.mark.parametrize("name", DOUBLES)
def test_double_is_quasitriangular_quasi_hopf(request, name):
    Dalg, _ = request.getfixturevalue(name)
    report = verify_double(Dalg)
    assert report.passed, report.failures()
    assert Dalg.dim == Dalg.source.dim ** 2


def test_pentagon_of_double_runs_below_gate(double_cz2):
    Dalg, _ = double_cz2
    report = verify_double(Dalg, theorem_suite=False)
    assert report.get("double/phi/pentagon").residual <= 1e-9


def test_double_of_abelian_group_is_commutative(double_cz2):
    Dalg, _ = double_cz2
    c = Dalg.base.algebra.dense()
    assert np.allclose(c, np.transpose(c, (1, 0, 2)))


def test_build_is_cached(cz2):
    first, _ = build_double(cz2)
    again, _ = build_double(cz2)
    assert again is first


def test_cached_build_report_is_merged_into_callers_report(cz2):
    _, built = build_double(cz2)
    mine = Report("caller")
    _, out = build_double(cz2, mine)
    assert out is mine
    assert [c.name for c in mine.checks] == [c.name for c in built.checks]
    assert len(built) == len(mine)


@pytest.mark.parametrize("name", ["double_cz2", "double_cs3", "double_h4"])
def test_hopf_generators_match_classical_formulas(request, name):
    Dalg, _ = request.getfixturevalue(name)
    report = hopf_generator_check(Dalg)
    assert report.passed, report.failures()
    assert report.get("hopf-generators/coproduct").residual <= 1e-9


def test_hopf_generators_skipped_for_nontrivial_reassociator(double_fun_z2_omega):
    Dalg, _ = double_fun_z2_omega
    report = hopf_generator_check(Dalg)
    assert report.get("hopf-generators/skipped").passed
    assert len(report) == 1


def test_mu_round_trip(double_h4, h4):
    Dalg, _ = double_h4
    phi = np.array([0.0, 1.0, 2.0, 0.5])
    a = h4.basis(3)
    x = mu_map(Dalg, phi, a)
    coeffs = mu_inverse(Dalg, x)
    expected = np.outer(phi, a.to_dense())
    assert np.allclose(coeffs, expected)


def test_mu_sends_counit_tensor_unit_to_unit(double_fun_z2_omega, fun_z2_omega):
    Dalg, _ = double_fun_z2_omega
    # the unit of the dual is ε
    x = mu_map(Dalg, Dalg.dense.counit, fun_z2_omega.unit(1))
    assert max_abs_diff(x, Dalg.base.unit(1)) <= 1e-9


@pytest.mark.parametrize("name", DOUBLES)
def test_left_right_isomorphism(request, name):
    Dalg, _ = request.getfixturevalue(name)
    iso, report = left_right_iso(Dalg)
    assert report.passed, report.failures()
    n = Dalg.dim
    x = np.arange(n, dtype=float)
    assert np.allclose(iso.to_left(iso.to_right(x)), x, atol=1e-12)


@pytest.mark.parametrize("name", ["cz2", "fun_z2_omega", "h4"])
def test_two_sided_coaction(request, name):
    H = request.getfixturevalue(name)
    _, report = two_sided_coaction(H)
    assert report.passed, report.failures()
