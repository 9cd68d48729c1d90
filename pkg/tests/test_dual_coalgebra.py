import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from dual_coalgebra import arrow_checks, arrows, coproduct_array, counit_array, dual_of
from quasi_hopf import apply_twist, random_admissible_twist
from tensor_core import pairing


@pytest.mark.parametrize("name", ["cz2", "cs3", "fun_z2_omega", "h4"])
def test_dual_laws(request, name):
    H = request.getfixturevalue(name)
    dual, report = dual_of(H)
    assert report.passed, report.failures()
    report = arrow_checks(H, dual)
    assert report.passed, report.failures()


def test_dual_of_group_algebra_is_function_algebra(cs3):
    dual, _ = dual_of(cs3)
    # e^g e^h = δ_{g,h} e^g for the dual of ℂ[G]
    for g in range(6):
        for h in range(6):
            prod = dual.vec(dual.mul(dual.basis(g), dual.basis(h)))
            expected = np.eye(6)[g] if g == h else np.zeros(6)
            assert np.allclose(prod, expected)
    assert np.allclose(dual.unit, np.ones(6))


def test_dual_product_is_associative_for_coassociative_coproduct(fun_s3):
    dual, _ = dual_of(fun_s3)
    assert np.max(np.abs(dual.associator())) == 0


def test_dual_of_twisted_algebra_is_non_associative(h4):
    F, F_inv = random_admissible_twist(h4, np.random.default_rng(1))
    twisted = apply_twist(h4, F, F_inv, name="H4-twisted-for-dual")
    dual, report = dual_of(twisted)
    assert report.passed, report.failures()
    assert np.max(np.abs(dual.associator())) > 1e-6


def test_arrows_pair_through_multiplication(h4):
    dual, _ = dual_of(h4)
    a = np.array([0.0, 1.0, 0.0, 0.0])
    phi = dual.basis(2)
    left, right = arrows(dual, a, phi)
    for b in range(4):
        eb = h4.basis(b)
        ba = h4.mul(eb, h4.basis(1))
        ab = h4.mul(h4.basis(1), eb)
        assert pairing(left, eb) == pytest.approx(pairing(phi, ba))
        assert pairing(right, eb) == pytest.approx(pairing(phi, ab))


def test_dense_coproduct_and_counit(cz2):
    dl = coproduct_array(cz2)
    assert dl[1, 1, 1] == 1
    assert np.count_nonzero(dl) == 2
    assert np.allclose(counit_array(cz2), [1, 1])


@pytest.mark.parametrize("name", ["cz2", "cs3", "fun_z2_omega", "h4"])
@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(data=st.data())
def test_right_arrow_is_multiplicative_on_basis_triples(request, name, data):
    H = request.getfixturevalue(name)
    dual, _ = dual_of(H)
    n = H.dim
    index = st.integers(0, n - 1)
    s, t, a = data.draw(index), data.draw(index), data.draw(index)
    phi, psi, eye = dual.basis(s), dual.basis(t), np.eye(n)
    # (φψ)↼a = Σ (φ↼a₁)(ψ↼a₂)
    lhs = dual.vec(dual.right_arrow(dual.mul(phi, psi), eye[a]))
    dl = coproduct_array(H)
    rhs = np.zeros(n, dtype=complex)
    for p, q in zip(*np.nonzero(dl[a])):
        rhs += dl[a, p, q] * dual.vec(dual.mul(dual.right_arrow(phi, eye[p]), dual.right_arrow(psi, eye[q])))
    assert np.allclose(lhs, rhs, atol=1e-9)
