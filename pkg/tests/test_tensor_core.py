import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from tensor_core import (
    AlgebraData,
    Leg,
    LegMap,
    SpaceSignature,
    Tensor,
    apply_to_leg,
    evaluate_words,
    invert,
    leg_embed,
    matrix_algebra,
    max_abs_diff,
    multiply,
    superscript,
    unit_dict,
    unit_tensor,
)
from utils.errors import LegIndexError, SignatureMismatchError, SingularElementError


@pytest.fixture(scope="module")
def m2():
    return matrix_algebra(2)


def test_entries_below_prune_threshold_are_dropped(m2):
    t = Tensor.vector(m2, {0: 1.0, 1: 1e-20})
    assert t.nnz == 1
    assert t.get((1,)) == 0


def test_index_out_of_range_raises(m2):
    with pytest.raises(LegIndexError):
        Tensor.vector(m2, {7: 1.0})


def test_permute_moves_legs(m2):
    sig = SpaceSignature.power(m2, 3)
    t = Tensor.basis(sig, (0, 1, 2))
    assert t.permute(superscript("312")).get((2, 0, 1)) == 1
    with pytest.raises(LegIndexError):
        t.permute((0, 0, 1))


def test_matrix_units_multiply(m2):
    sig = SpaceSignature.of(m2)
    e01 = Tensor.basis(sig, (1,))
    e10 = Tensor.basis(sig, (2,))
    assert multiply(e01, e10).as_dict() == {0: 1}
    assert multiply(e10, e01).as_dict() == {3: 1}
    assert multiply(e01, e01).is_zero()


def test_multiply_rejects_mismatched_signatures(m2):
    a = Tensor.vector(m2, {0: 1.0})
    b = unit_tensor(SpaceSignature.power(m2, 2))
    with pytest.raises(SignatureMismatchError):
        multiply(a, b)


def test_invert_two_leg_element(m2):
    sig = SpaceSignature.power(m2, 2)
    t = unit_tensor(sig) + Tensor.basis(sig, (1, 1), 0.5)
    inv = invert(t)
    assert max_abs_diff(multiply(t, inv), unit_tensor(sig)) < 1e-12
    assert max_abs_diff(multiply(inv, t), unit_tensor(sig)) < 1e-12


def test_invert_singular_raises(m2):
    with pytest.raises(SingularElementError):
        invert(Tensor.vector(m2, {0: 1.0}))


def test_leg_embed_fills_units(m2):
    sig3 = SpaceSignature.power(m2, 3)
    psi = Tensor.basis(SpaceSignature.power(m2, 2), (1, 2))
    out = leg_embed(psi, (0, 2), 3, sig3, unit_dict)
    assert out.get((1, 0, 2)) == 1
    assert out.get((1, 3, 2)) == 1
    assert out.nnz == 2


def test_algebra_from_dense_checks_residuals():
    c = np.zeros((2, 2, 2))
    c[0, 0, 0] = c[0, 1, 1] = c[1, 0, 1] = 1.0
    alg = AlgebraData.from_dense("dual-numbers", c, [1.0, 0.0], labels=["1", "eps"])
    assert alg.associativity_residual() == 0
    assert alg.unit_residual() == 0
    assert np.allclose(alg.dense(), c)


def test_legmap_matrix_columns_are_images(m2):
    transpose = np.zeros((4, 4))
    for i in range(2):
        for j in range(2):
            transpose[j * 2 + i, i * 2 + j] = 1.0
    m = LegMap.matrix(transpose, m2)
    t = Tensor.vector(m2, {1: 2.0})
    assert apply_to_leg(m, t, 0).as_dict() == {2: 2.0}
    assert np.allclose(m.to_matrix(), transpose)


def test_counit_removes_leg(m2):
    eps = LegMap.counit({0: 1.0, 3: 1.0}, m2)
    t = Tensor(SpaceSignature.power(m2, 2), {(0, 1): 2.0, (3, 3): 5.0})
    out = apply_to_leg(eps, t, 0)
    assert out.legs == 1
    assert out.as_dict() == {1: 2.0, 3: 5.0}


def test_evaluate_words_multiplies_legs_in_order(m2):
    sig2 = SpaceSignature.power(m2, 2)
    t = Tensor.basis(sig2, (1, 2))
    out = evaluate_words(t, [[Leg(0), Leg(1)]], [m2])
    assert out.as_dict() == {0: 1}
    out = evaluate_words(t, [[Leg(1), Leg(0)]], [m2])
    assert out.as_dict() == {3: 1}


_coefficients = st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def sparse_triples(draw, dim):
    """Three sparse {index: coefficient} vectors over an algebra of dimension dim."""
    vec = st.dictionaries(st.integers(0, dim - 1), _coefficients, min_size=1, max_size=dim)
    return draw(vec), draw(vec), draw(vec)


@pytest.mark.parametrize("name", ["cz2", "cs3", "fun_z2_omega", "fun_s3", "h4"])
@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(data=st.data())
def test_multiply_is_associative_on_sparse_triples(request, name, data):
    alg = request.getfixturevalue(name).algebra
    a, b, c = (Tensor.vector(alg, v) for v in data.draw(sparse_triples(alg.dim)))
    lhs = multiply(multiply(a, b), c)
    rhs = multiply(a, multiply(b, c))
    assert max_abs_diff(lhs, rhs) <= 1e-9 * max(1.0, lhs.max_abs())
