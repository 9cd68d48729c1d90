import numpy as np
import pytest

from representations import (
    DeltaFlip,
    GModule,
    check_flip,
    extend_rep,
    hom_check,
    majid_conditions,
    regular_double_module,
    regular_module,
    restricted_flip,
    tensor_module,
    trivial_module,
    unit_flip,
    verify_module,
)
from utils.errors import SignatureMismatchError, StructureError

DOUBLES = ["double_cz2", "double_fun_z2_omega", "double_h4"]


@pytest.mark.parametrize("name", ["cz2", "cs3", "fun_z2_omega", "h4"])
def test_regular_and_tensor_modules(request, name):
    H = request.getfixturevalue(name)
    reg = regular_module(H)
    assert verify_module(reg).passed
    report = verify_module(tensor_module(reg, trivial_module(H)))
    assert report.passed, report.failures()


def test_module_shape_is_validated(cz2):
    with pytest.raises(SignatureMismatchError):
        GModule("bad", cz2, np.zeros((3, 2, 2)))


@pytest.mark.parametrize("name", DOUBLES)
def test_restricted_flip_round_trip(request, name):
    Dalg, _ = request.getfixturevalue(name)
    dmod = regular_double_module(Dalg)
    V, DV = restricted_flip(dmod)
    flip = check_flip(Dalg.source, V, DV)
    majid = majid_conditions(Dalg.source, V, DV)
    assert flip.passed, flip.failures()
    assert majid.passed, majid.failures()
    ext, report = extend_rep(Dalg, V, DV)
    assert report.passed, report.failures()
    assert np.allclose(ext.matrices, dmod.matrices, atol=1e-9)


def test_unit_flip_extends_regular_module_of_cocommutative_algebra(double_cs3, cs3):
    Dalg, _ = double_cs3
    V = regular_module(cs3)
    DV = unit_flip(V)
    assert check_flip(cs3, V, DV).passed
    assert majid_conditions(cs3, V, DV).passed
    _, report = extend_rep(Dalg, V, DV)
    assert report.get("extend/multiplicative").residual <= 1e-9


def test_unit_flip_fails_for_non_cocommutative_coproduct(double_fun_s3, fun_s3):
    Dalg, _ = double_fun_s3
    V = regular_module(fun_s3)
    DV = unit_flip(V)
    flip = check_flip(fun_s3, V, DV)
    majid = majid_conditions(fun_s3, V, DV)
    assert not flip.get("flip/flip").passed
    assert flip.get("flip/normal").passed
    assert not majid.get("majid/flip").passed
    with pytest.raises(StructureError):
        extend_rep(Dalg, V, DV)


def test_trivial_module_extends_through_counit(double_fun_z2_omega, fun_z2_omega):
    Dalg, _ = double_fun_z2_omega
    V = trivial_module(fun_z2_omega)
    DV = unit_flip(V)
    assert majid_conditions(fun_z2_omega, V, DV).passed
    ext, report = extend_rep(Dalg, V, DV)
    assert report.passed, report.failures()
    eps_d = np.array([Dalg.base.eps_value(b) for b in Dalg.base.basis_elements()])
    assert np.allclose(ext.matrices[:, 0, 0], eps_d, atol=1e-9)


@pytest.fixture
def characters(cz2):
    """Trivial module of ℂ[Z2] with the two flips D_V = e_e⊗1 and D_V = e_x⊗1."""
    V = trivial_module(cz2)
    at_e = DeltaFlip.from_array(V, [[[1.0]], [[0.0]]])
    at_x = DeltaFlip.from_array(V, [[[0.0]], [[1.0]]])
    return V, at_e, at_x


def test_both_characters_are_flips(cz2, characters):
    V, at_e, at_x = characters
    assert check_flip(cz2, V, at_e).passed
    assert check_flip(cz2, V, at_x).passed


def test_hom_check(double_cz2, characters):
    Dalg, _ = double_cz2
    V, at_e, at_x = characters
    verdict, report = hom_check(Dalg, V, at_e, V, at_e, np.eye(1))
    assert verdict and report.passed
    verdict, report = hom_check(Dalg, V, at_e, V, at_x, np.zeros((1, 1)))
    assert verdict and report.passed
    verdict, report = hom_check(Dalg, V, at_e, V, at_x, np.eye(1))
    assert not verdict
    assert report.get("hom/g-intertwiner").passed
    assert not report.get("hom/flip-intertwiner").passed
    assert report.get("hom/criteria-agree").passed


def test_hom_check_rejects_wrong_shape(double_cz2, characters):
    Dalg, _ = double_cz2
    V, at_e, _ = characters
    with pytest.raises(SignatureMismatchError):
        hom_check(Dalg, V, at_e, V, at_e, np.eye(2))
