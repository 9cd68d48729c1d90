"""Drinfeld twists: Δ_F = FΔF⁻¹ with the matching φ_F, α_F, β_F and R_F.

Key functions: apply_twist, twisted_phi, random_admissible_twist, compose_twists, twist_chain_check,
twist_covariance
"""
from bootstrap.delayed_imports import np
from config import runtime_settings as settings
from tensor_core import Leg, LegMap, Tensor, evaluate_words, invert, max_abs_diff, multiply_chain
from utils.errors import SingularElementError, StructureError
from utils.report import Report

from .axioms import verify_quasi_hopf, verify_quasitriangular
from .structures import QuasiBialgebra, QuasiHopfAlgebra, QuasiTriangularQHA


def counit_defect(H, F):
    """max of |(ε⊗id)(F) − 1| and |(id⊗ε)(F) − 1|."""
    one = H.unit(1)
    return max(max_abs_diff(H.eps(F, 0), one), max_abs_diff(H.eps(F, 1), one))


def twisted_phi(H, F, F_inv):
    """(1⊗F)·(id⊗Δ)(F)·φ·(Δ⊗id)(F⁻¹)·(F⁻¹⊗1)."""
    return multiply_chain(
        H.embed(F, (1, 2), 3), H.delta(F, 1), H.phi, H.delta(F_inv, 0), H.embed(F_inv, (0, 1), 3)
    )


def _twisted_coproduct(H, F, F_inv):
    images = {}
    for i, b in enumerate(H.basis_elements()):
        images[i] = tuple(multiply_chain(F, H.delta(b), F_inv).items())
    return LegMap.coproduct(images, H.algebra)


def apply_twist(H, F, F_inv=None, name=None):
    """Twist H (optionally carrying R) by F; raises StructureError when F is not counit-normalized."""
    defect = counit_defect(H, F)
    if defect > settings.VERDICT_TOL:
        raise StructureError(f"twist is not counit-normalized (defect {defect:.3e})")
    if F_inv is None:
        F_inv = invert(F)
    alg = H.algebra
    coproduct = _twisted_coproduct(H, F, F_inv)
    phi_f = twisted_phi(H, F, F_inv)
    phi_f_inv = multiply_chain(
        H.embed(F, (0, 1), 3), H.delta(F, 0), H.phi_inv, H.delta(F_inv, 1), H.embed(F_inv, (1, 2), 3)
    )
    alpha_f = evaluate_words(F_inv, [[Leg(0, H.S), H.alpha, Leg(1)]], [alg])
    beta_f = evaluate_words(F, [[Leg(0), H.beta, Leg(1, H.S)]], [alg])
    base = QuasiBialgebra(name or f"{H.name}^F", alg, coproduct, H.counit, phi_f, phi_f_inv)
    twisted = QuasiHopfAlgebra(base, H.S, H.S_inv, alpha_f, beta_f)
    if not isinstance(H, QuasiTriangularQHA):
        return twisted
    R_f = multiply_chain(F.permute((1, 0)), H.R, F_inv)
    R_f_inv = multiply_chain(F, H.R_inv, F_inv.permute((1, 0)))
    return QuasiTriangularQHA(twisted, R_f, R_f_inv)


def random_admissible_twist(H, rng, scale=None, max_tries=20):
    """Seeded F = 1⊗1 + scale·Y with Y projected onto the counit-annihilated subspace.

    Returns (F, F⁻¹); resamples when F is singular.
    """
    scale = settings.TWIST_SCALE if scale is None else scale
    n = H.dim
    sig2 = H.sig(2)
    u1, u2 = H.unit(1), H.unit(2)
    for _ in range(max_tries):
        raw = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        Y = Tensor.from_dense(sig2, raw)
        A = H.eps(Y, 0)
        B = H.eps(Y, 1)
        s = H.eps_value(B)
        Y = Y - H.embed(A, (1,), 2) - H.embed(B, (0,), 2) + u2.scale(s)
        # ε(1) = 1 is assumed for the unit correction above.
        if max(max_abs_diff(H.eps(Y, 0), u1.scale(0)), max_abs_diff(H.eps(Y, 1), u1.scale(0))) > settings.VERDICT_TOL:
            raise StructureError("counit projection failed; is ε(1) = 1?")
        F = u2 + Y.scale(scale)
        try:
            return F, invert(F)
        except SingularElementError:
            continue
    raise SingularElementError(f"no invertible twist found in {max_tries} samples")


def compose_twists(first, second):
    """Twisting by first and then by second equals twisting by second·first."""
    return multiply_chain(second, first)


def twist_chain_check(H, F1, F2, report=None):
    """Compare the iterated twist with the single twist by the composite."""
    if report is None:
        report = Report(f"twist-chain:{H.name}")
    step = apply_twist(H, F1)
    iterated = apply_twist(step, F2)
    direct = apply_twist(H, compose_twists(F1, F2))
    worst = 0.0
    for b in H.basis_elements():
        worst = max(worst, max_abs_diff(iterated.delta(b), direct.delta(b)))
    report.add("twist/chain-coproduct", "twist composition on the coproduct", worst)
    report.add("twist/chain-phi", "twist composition on the reassociator", max_abs_diff(iterated.phi, direct.phi))
    r = max(max_abs_diff(iterated.alpha, direct.alpha), max_abs_diff(iterated.beta, direct.beta))
    report.add("twist/chain-alpha-beta", "twist composition on α and β", r)
    if isinstance(H, QuasiTriangularQHA):
        report.add("twist/chain-r-matrix", "twist composition on R", max_abs_diff(iterated.R, direct.R))
    return report


def coboundary_twist(H, values):
    """Diagonal F = Σ c(g,h) e_g⊗e_h for a function-algebra basis of orthogonal idempotents."""
    return Tensor(H.sig(2), {tuple(k): complex(v) for k, v in values.items()})


def twist_covariance(H, samples=None, seed=None, report=None):
    """Twist H by seeded random admissible twists and rerun the axiom suites on each result."""
    samples = settings.TWIST_SAMPLES if samples is None else samples
    rng = np.random.default_rng(settings.SEED if seed is None else seed)
    if report is None:
        report = Report(f"twist-covariance:{H.name}")
    for k in range(samples):
        F, F_inv = random_admissible_twist(H, rng)
        twisted = apply_twist(H, F, F_inv, name=f"{H.name}^F{k}")
        report.merge(verify_quasi_hopf(twisted), prefix=f"twist-{k}")
        if isinstance(twisted, QuasiTriangularQHA):
            report.merge(verify_quasitriangular(twisted), prefix=f"twist-{k}")
    return report
