import numpy as np
import pytest

from double_construction import build_double, verify_double
from group_twisted_double import (
    FiniteGroup,
    coboundary_modified,
    cyclic_group,
    cyclic_standard_cocycle,
    dpr_double,
    fun_qha,
    product_coefficient,
    sigma_check,
    sparse_cocycle,
    trivial_cocycle,
    verify_cocycle,
    verify_twisted_double,
)
from quasi_hopf import verify_quasi_hopf
from utils.errors import StructureError


def test_group_tables(s3):
    assert s3.order == 6
    assert s3.labels[0] == "e"
    for g in s3.elements():
        assert s3.mul(g, s3.inverse(g)) == s3.identity


def test_non_associative_table_is_rejected():
    table = [[0, 1, 2], [1, 0, 0], [2, 2, 0]]
    with pytest.raises(StructureError):
        FiniteGroup("broken", table)


def test_nontrivial_z2_cocycle_passes(z2, omega_x):
    report = verify_cocycle(z2, omega_x)
    assert report.passed, report.failures()


def test_non_cocycle_names_quadruple(z2):
    w = sparse_cocycle(z2, {(1, 1, 1): 1j}, "omega_i")
    report = verify_cocycle(z2, w)
    check = report.get("cocycle/identity")
    assert not check.passed
    assert check.detail.startswith("(x, x, x, x)")
    assert report.get("cocycle/normalized").passed


def test_non_cocycle_fails_pentagon(z2):
    w = sparse_cocycle(z2, {(1, 1, 1): 1j}, "omega_i")
    with pytest.raises(StructureError):
        fun_qha(z2, w)
    report = verify_quasi_hopf(fun_qha(z2, w, check=False))
    assert not report.get("phi/pentagon").passed
    assert report.get("phi/pentagon").anchor == "pentagon identity"


@pytest.mark.parametrize("n", range(2, 7))
def test_standard_cyclic_family(n):
    G = cyclic_group(n)
    for p in range(n):
        report = verify_cocycle(G, cyclic_standard_cocycle(G, p))
        assert report.passed, (n, p, report.failures())


def test_fun_qha_for_z4_standard_cocycle(omega_z4):
    H = fun_qha(omega_z4.group, omega_z4)
    report = verify_quasi_hopf(H)
    assert report.passed, report.failures()
    assert report.get("phi/pentagon").residual <= 1e-9


def test_square_of_x_in_twisted_double(z2, omega_x):
    assert product_coefficient(z2, omega_x, 1, 1, 0) == pytest.approx(1.0)
    assert product_coefficient(z2, omega_x, 1, 1, 1) == pytest.approx(-1.0)
    td = dpr_double(z2, omega_x)
    x1 = np.zeros(4)
    x1[[2, 3]] = 1.0
    square = np.einsum("IJK,I,J->K", td.product_array, x1, x1)
    assert np.allclose(square, [1.0, -1.0, 0.0, 0.0])


def test_commutation_with_group_elements(s3):
    td = dpr_double(s3)
    n = s3.order
    g, x = s3.labels.index("(12)"), s3.labels.index("(123)")
    left = np.zeros(n * n)
    left[s3.identity * n + g] = 1.0
    right = np.zeros(n * n)
    right[[x * n + t for t in range(n)]] = 1.0
    out = np.einsum("IJK,I,J->K", td.product_array, left, right)
    expected = np.zeros(n * n)
    expected[x * n + s3.mul(s3.inverse(x), s3.mul(g, x))] = 1.0
    assert np.allclose(out, expected)


def test_trivial_cocycle_coproduct_is_grouplike(z2):
    td = dpr_double(z2, trivial_cocycle(z2))
    x1 = np.zeros(4)
    x1[[2, 3]] = 1.0
    delta = np.einsum("IAB,I->AB", td.coproduct_array, x1)
    assert np.allclose(delta, np.outer(x1, x1))


@pytest.mark.parametrize("fixture", ["omega_x", "omega_z4"])
def test_twisted_double_axioms(request, fixture):
    w = request.getfixturevalue(fixture)
    report = verify_twisted_double(dpr_double(w.group, w))
    assert report.passed, report.failures()


@pytest.mark.parametrize("fixture", ["omega_x", "omega_z4"])
def test_sigma_identifies_the_two_presentations(request, fixture):
    w = request.getfixturevalue(fixture)
    _, report = sigma_check(w.group, w)
    assert report.passed, report.failures()
    assert report.get("sigma/product").residual <= 1e-9
    assert report.get("sigma/coproduct").residual <= 1e-9


def test_sigma_for_trivial_cocycle_on_s3(s3):
    _, report = sigma_check(s3)
    assert report.passed, report.failures()


def test_coboundary_modified_cocycle(z2, omega_x):
    c = np.ones((2, 2), dtype=complex)
    c[1, 1] = 1j
    w = coboundary_modified(omega_x, c)
    assert verify_cocycle(z2, w).passed
    H = fun_qha(z2, w)
    assert verify_quasi_hopf(H).passed
    Dalg, report = build_double(H)
    assert report.passed, report.failures()
    report = verify_double(Dalg)
    assert report.passed, report.failures()


def test_counit_is_multiplicative_for_larger_groups(s3, omega_z4):
    for td in (dpr_double(s3), dpr_double(omega_z4.group, omega_z4)):
        report = verify_twisted_double(td)
        assert report.get("twisted-double/counit-multiplicative").residual <= 1e-9
