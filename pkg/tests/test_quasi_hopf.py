import numpy as np
import pytest

from quasi_hopf import (
    antipode_image_check,
    apply_twist,
    coboundary_twist,
    derived_twists,
    make_quasi_hopf,
    make_quasitriangular,
    pq_elements,
    r_inverse_formula,
    random_admissible_twist,
    sweedler_algebra,
    twist_chain_check,
    twist_covariance,
    variants,
    verify_quasi_hopf,
    verify_quasitriangular,
)
from group_twisted_double import coboundary_modified, fun_qha
from tensor_core import Tensor, max_abs_diff
from utils.errors import StructureError

ALGEBRAS = ["cz2", "cs3", "fun_z2_omega", "fun_s3", "h4"]
QUASITRIANGULAR = ["cz2", "cs3", "h4"]


@pytest.mark.parametrize("name", ALGEBRAS)
def test_bundled_algebras_pass_axioms(request, name):
    H = request.getfixturevalue(name)
    report = verify_quasi_hopf(H)
    assert report.passed, report.failures()
    assert report.get("phi/pentagon").residual <= 1e-9


@pytest.mark.parametrize("name", QUASITRIANGULAR)
def test_r_matrix_suite(request, name):
    H = request.getfixturevalue(name)
    report = verify_quasitriangular(H)
    assert report.passed, report.failures()


@pytest.mark.parametrize("name", ALGEBRAS)
def test_derived_elements(request, name):
    H = request.getfixturevalue(name)
    _, report = derived_twists(H)
    assert report.passed, report.failures()
    _, report = pq_elements(H)
    assert report.passed, report.failures()


@pytest.mark.parametrize("name", QUASITRIANGULAR)
def test_closed_inverse_and_antipode_image(request, name):
    H = request.getfixturevalue(name)
    first, second, report = r_inverse_formula(H)
    assert report.passed, report.failures()
    assert max_abs_diff(first, second) <= 1e-9
    report = antipode_image_check(H)
    assert report.passed, report.failures()


def test_fun_z2_beta_from_cocycle(fun_z2_omega):
    # β = Σ_g ω(g⁻¹, g, g⁻¹) δ_g
    assert fun_z2_omega.beta.as_dict() == pytest.approx({0: 1.0, 1: -1.0})
    assert fun_z2_omega.alpha.as_dict() == pytest.approx({0: 1.0, 1: 1.0})


def test_pentagon_gate_reports_skip(cs3):
    report = verify_quasi_hopf(cs3, deep=False)
    assert report.passed
    assert report.get("phi/pentagon-skipped").passed
    with pytest.raises(KeyError):
        report.get("phi/pentagon")


def test_corrupted_beta_fails_zigzag(cz2):
    beta = Tensor.vector(cz2.algebra, {0: 2.0})
    bad = make_quasi_hopf("C[Z2]-bad-beta", cz2.algebra, cz2.coproduct, cz2.counit, cz2.phi,
                          cz2.S, cz2.alpha, beta, phi_inv=cz2.phi_inv)
    report = verify_quasi_hopf(bad)
    assert not report.get("antipode/zigzag-phi").passed
    assert not report.get("antipode/counit-alpha-beta").passed
    assert report.get("antipode/zigzag-phi").anchor == "zig-zag identities"
    assert report.get("antipode/alpha-relation").passed


@pytest.mark.parametrize("name", ["fun_z2_omega", "h4"])
def test_variants_are_quasi_hopf(request, name):
    H = request.getfixturevalue(name)
    for label, V in variants(H).items():
        report = verify_quasi_hopf(V)
        assert report.passed, (label, report.failures())


def test_variants_keep_r_matrix(h4):
    for label, V in variants(h4).items():
        report = verify_quasitriangular(V)
        assert report.passed, (label, report.failures())


def test_twist_must_be_counit_normalized(h4):
    F = h4.unit(2).scale(2.0)
    with pytest.raises(StructureError):
        apply_twist(h4, F)


def test_random_twist_is_normalized(h4):
    rng = np.random.default_rng(7)
    F, F_inv = random_admissible_twist(h4, rng)
    one = h4.unit(1)
    assert max_abs_diff(h4.eps(F, 0), one) <= 1e-9
    assert max_abs_diff(h4.eps(F, 1), one) <= 1e-9
    assert max_abs_diff(h4.mul(F, F_inv), h4.unit(2)) <= 1e-9


def test_twisted_h4_is_quasitriangular(h4):
    F, F_inv = random_admissible_twist(h4, np.random.default_rng(11))
    twisted = apply_twist(h4, F, F_inv)
    assert verify_quasi_hopf(twisted).passed
    report = verify_quasitriangular(twisted)
    assert report.passed, report.failures()


def test_twist_chain_rule(h4):
    rng = np.random.default_rng(3)
    F1, _ = random_admissible_twist(h4, rng)
    F2, _ = random_admissible_twist(h4, rng)
    report = twist_chain_check(h4, F1, F2)
    assert report.passed, report.failures()


def test_twist_covariance_is_seeded(fun_z2_omega):
    first = twist_covariance(fun_z2_omega, samples=10, seed=5)
    second = twist_covariance(fun_z2_omega, samples=10, seed=5)
    assert first.passed, first.failures()
    assert [c.residual for c in first.checks] == [c.residual for c in second.checks]
    assert first.get("twist-9/phi/pentagon").passed


@pytest.mark.parametrize("lam", [0.0, 0.5, 1.0, -0.3])
def test_sweedler_r_matrix_family(lam):
    H = sweedler_algebra(lam)
    report = verify_quasitriangular(H)
    assert report.passed, report.failures()
    assert report.get("r-matrix/hexagon-left").residual <= 1e-9
    assert report.get("r-matrix/hexagon-right").residual <= 1e-9


def test_trivial_r_matrix_fails_on_non_cocommutative_coproduct(cs3):
    F, F_inv = random_admissible_twist(cs3, np.random.default_rng(2))
    twisted = apply_twist(cs3, F, F_inv, name="C[S3]-twisted-coproduct")
    assert verify_quasitriangular(twisted).get("r-matrix/intertwines").passed
    trivial = make_quasitriangular(twisted.qha, twisted.unit(2), twisted.unit(2))
    report = verify_quasitriangular(trivial)
    assert not report.get("r-matrix/intertwines").passed
    assert report.get("r-matrix/counit").passed


def test_twisted_double_base_is_quasitriangular(double_cz2):
    Dalg, _ = double_cz2
    F, F_inv = random_admissible_twist(Dalg.base, np.random.default_rng(4))
    twisted = apply_twist(Dalg.base, F, F_inv, name="D(C[Z2])-twisted")
    assert verify_quasi_hopf(twisted).passed
    report = verify_quasitriangular(twisted)
    assert report.passed, report.failures()
    assert report.get("r-matrix/quasi-ybe-conjugated").residual <= 1e-9


@pytest.mark.parametrize("group_name, cocycle_name", [("z2", "omega_x"), ("z4", "omega_z4")])
def test_coboundary_twist_multiplies_cocycle(request, group_name, cocycle_name):
    G = request.getfixturevalue(group_name)
    w = request.getfixturevalue(cocycle_name)
    n = G.order
    c = np.exp(1j * np.random.default_rng(13).uniform(0, 2 * np.pi, size=(n, n)))
    c[G.identity, :] = 1
    c[:, G.identity] = 1
    H = fun_qha(G, w)
    F = coboundary_twist(H, {(g, h): c[g, h] for g in range(n) for h in range(n)})
    twisted = apply_twist(H, F, name=f"{H.name}-coboundary")
    shifted = fun_qha(G, coboundary_modified(w, c))
    assert max_abs_diff(twisted.phi, shifted.phi) <= 1e-9
    report = verify_quasi_hopf(twisted)
    assert report.passed, report.failures()
