import pytest

from config import runtime_settings as settings
from monodromy import (
    MonodromyData,
    monodromy_bijectivity,
    monodromy_matrix,
    monodromy_suite,
    second_level_monodromy,
    verify_monodromy,
)
from tensor_core import max_abs_diff, unit_tensor
from utils.report import Report


@pytest.mark.parametrize("name", ["cz2", "cs3", "h4"])
def test_monodromy_relations(request, name):
    H = request.getfixturevalue(name)
    report = monodromy_suite(H)
    assert report.passed, report.failures()
    assert report.get("monodromy/exchange").residual <= 1e-9
    assert report.get("monodromy/bijective").passed


def test_trivial_r_matrix_gives_flip(double_cz2, cz2):
    Dalg, _ = double_cz2
    data = monodromy_matrix(Dalg, cz2.R)
    assert max_abs_diff(data.M, Dalg.D) <= 1e-12


def test_r_hat_trivial_for_group_algebra(double_cs3, cs3):
    Dalg, _ = double_cs3
    data = monodromy_matrix(Dalg, cs3.R)
    assert data.R_hat.legs == 3
    assert max_abs_diff(data.R_hat, unit_tensor(data.R_hat.sig)) <= 1e-12


def test_algebra_without_r_matrix_is_skipped(fun_z2_omega):
    report = monodromy_suite(fun_z2_omega)
    assert len(report) == 1
    assert report.get("monodromy/skipped").passed


def test_dropping_r_op_breaks_exchange_relation(double_h4, h4):
    Dalg, _ = double_h4
    data = monodromy_matrix(Dalg, h4.R)
    mutated = MonodromyData(Dalg.D, data.R_hat, data.R)
    report = verify_monodromy(Dalg, mutated)
    assert not report.get("monodromy/exchange").passed
    assert report.get("monodromy/normal").passed


def test_bijectivity_report(double_h4, h4):
    Dalg, _ = double_h4
    report = monodromy_bijectivity(Dalg, monodromy_matrix(Dalg, h4.R))
    assert report.get("monodromy/bijective").detail == "rank 16 of 16"


def test_second_level_gate(double_cz2, double_h4):
    Dalg, _ = double_cz2
    report = second_level_monodromy(Dalg)
    assert report.passed, report.failures()
    assert report.get("second-level/monodromy/exchange").passed
    big, _ = double_h4
    report = second_level_monodromy(big)
    assert report.get("monodromy-second-level/skipped").passed
    assert big.dim > settings.SECOND_LEVEL_MAX_DIM


def test_suite_fills_the_callers_report(cz2):
    report = Report("monodromy-cli")
    out = monodromy_suite(cz2, report)
    assert out is report
    assert len(report) > 1
    assert report.get("monodromy/exchange").passed
