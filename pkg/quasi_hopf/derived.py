"""Elements derived from (φ, S, α, β): γ, δ, the Drinfeld twist f, h, and the p/q elements.

Notation: φ = X⊗Y⊗Z and φ⁻¹ = P⊗Q⊗R, summed.

Key classes: DerivedElements
Key functions: derived_twists, pq_elements
"""
from dataclasses import dataclass

from config import runtime_settings as settings
from tensor_core import Leg, Tensor, apply_to_legs, evaluate_words, max_abs_diff, sandwich
from utils.report import Report

from .twists import twisted_phi


@dataclass(frozen=True)
class DerivedElements:
    gamma: Tensor
    delta_el: Tensor
    f: Tensor
    f_inv: Tensor
    h: Tensor
    h_inv: Tensor
    p_lambda: Tensor = None
    p_rho: Tensor = None
    q_lambda: Tensor = None
    q_rho: Tensor = None


def _words(H, t, words):
    return evaluate_words(t, words, [H.algebra] * len(words))


def gamma_delta(H):
    """γ = S(U)αV ⊗ S(T)αW and δ = KβS(N) ⊗ LβS(M)."""
    tuvw = H.mul(H.embed(H.phi_inv, (1, 2, 3), 4), H.delta(H.phi, 2))
    gamma = _words(H, tuvw, [[Leg(1, H.S), H.alpha, Leg(2)], [Leg(0, H.S), H.alpha, Leg(3)]])
    klmn = H.mul(H.delta(H.phi, 0), H.embed(H.phi_inv, (0, 1, 2), 4))
    delta_el = _words(H, klmn, [[Leg(0), H.beta, Leg(3, H.S)], [Leg(1), H.beta, Leg(2, H.S)]])
    return gamma, delta_el


def drinfeld_twist(H, gamma, delta_el):
    """f = (S⊗S)(Δ^op(P))·γ·Δ(QβR) and f⁻¹ = Δ(S(P)αQ)·δ·(S⊗S)(Δ^op(R))."""
    t = _words(H, H.phi_inv, [[Leg(0)], [Leg(1), H.beta, Leg(2)]])
    t = apply_to_legs(H.delta_op(t, 0), {0: H.S, 1: H.S})
    f = sandwich(H.delta(t, 2), gamma)

    t = _words(H, H.phi_inv, [[Leg(0, H.S), H.alpha, Leg(1)], [Leg(2)]])
    t = apply_to_legs(H.delta_op(t, 1), {1: H.S, 2: H.S})
    f_inv = sandwich(H.delta(t, 0), delta_el)
    return f, f_inv


def derived_twists(H, report=None):
    """γ, δ, f, f⁻¹, h = (S⁻¹⊗S⁻¹)(f^{21}), h⁻¹ with their defining identities checked."""
    if report is None:
        report = Report(f"derived:{H.name}")
    gamma, delta_el = gamma_delta(H)
    f, f_inv = drinfeld_twist(H, gamma, delta_el)
    h = apply_to_legs(f.permute((1, 0)), {0: H.S_inv, 1: H.S_inv})
    h_inv = apply_to_legs(f_inv.permute((1, 0)), {0: H.S_inv, 1: H.S_inv})

    u2 = H.unit(2)
    r = max(max_abs_diff(H.mul(f, f_inv), u2), max_abs_diff(H.mul(f_inv, f), u2))
    report.add("twist-f/inverse", "f·f⁻¹ = f⁻¹·f = 1⊗1", r,
               detail="" if r <= settings.VERDICT_TOL else "f is not invertible")
    r = max(max_abs_diff(H.mul(h, h_inv), u2), max_abs_diff(H.mul(h_inv, h), u2))
    report.add("twist-h/inverse", "h·h⁻¹ = h⁻¹·h = 1⊗1", r)

    worst_f = worst_h = 0.0
    for b in H.basis_elements():
        lhs = H.mul(f, H.delta(b), f_inv)
        rhs = apply_to_legs(H.delta_op(H.s_inv(b)), {0: H.S, 1: H.S})
        worst_f = max(worst_f, max_abs_diff(lhs, rhs))
        lhs = H.mul(h, H.delta(b), h_inv)
        rhs = apply_to_legs(H.delta_op(H.s(b)), {0: H.S_inv, 1: H.S_inv})
        worst_h = max(worst_h, max_abs_diff(lhs, rhs))
    report.add("twist-f/antipode-anti-coalgebra", "f conjugates Δ into (S⊗S)∘Δ^op∘S⁻¹", worst_f)

    report.add("twist-f/alpha", "fΔ(α) = γ", max_abs_diff(H.mul(f, H.delta(H.alpha)), gamma))
    report.add("twist-f/beta", "Δ(β)f⁻¹ = δ", max_abs_diff(H.mul(H.delta(H.beta), f_inv), delta_el))

    s3 = {0: H.S, 1: H.S, 2: H.S}
    phi_f = twisted_phi(H, f, f_inv)
    report.add("twist-f/reassociator", "φ_f = (S⊗S⊗S)(φ^{321})",
               max_abs_diff(phi_f, apply_to_legs(H.phi.permute((2, 1, 0)), s3)))

    report.add("twist-h/antipode-anti-coalgebra", "h conjugates Δ into (S⁻¹⊗S⁻¹)∘Δ^op∘S", worst_h)
    si3 = {0: H.S_inv, 1: H.S_inv, 2: H.S_inv}
    phi_h = twisted_phi(H, h, h_inv)
    report.add("twist-h/reassociator", "φ_h = (S⁻¹⊗S⁻¹⊗S⁻¹)(φ^{321})",
               max_abs_diff(phi_h, apply_to_legs(H.phi.permute((2, 1, 0)), si3)))
    return DerivedElements(gamma, delta_el, f, f_inv, h, h_inv), report


def pq_elements(H, report=None):
    """p_λ, p_ρ, q_λ, q_ρ with the commutation relations and contraction identities checked."""
    if report is None:
        report = Report(f"pq:{H.name}")
    s_inv_alpha = H.s_inv(H.alpha)
    s_inv_beta = H.s_inv(H.beta)
    p_lambda = _words(H, H.phi, [[Leg(1), s_inv_beta, Leg(0, H.S_inv)], [Leg(2)]])
    p_rho = _words(H, H.phi_inv, [[Leg(0)], [Leg(1), H.beta, Leg(2, H.S)]])
    q_lambda = _words(H, H.phi_inv, [[Leg(0, H.S), H.alpha, Leg(1)], [Leg(2)]])
    q_rho = _words(H, H.phi, [[Leg(0)], [Leg(2, H.S_inv), s_inv_alpha, Leg(1)]])

    worst = [0.0] * 4
    for b in H.basis_elements():
        d = H.delta(b)
        # a₁ ⊗ a₂₁ ⊗ a₂₂ and a₁₁ ⊗ a₁₂ ⊗ a₂
        right = H.delta(d, 1)
        left = H.delta(d, 0)
        lhs = sandwich(_words(H, right, [[Leg(1)], [Leg(2)], [Leg(0, H.S_inv)], []]), p_lambda)
        worst[0] = max(worst[0], max_abs_diff(lhs, H.mul(p_lambda, H.embed(b, (1,), 2))))
        lhs = sandwich(_words(H, left, [[Leg(0)], [Leg(1)], [], [Leg(2, H.S)]]), p_rho)
        worst[1] = max(worst[1], max_abs_diff(lhs, H.mul(p_rho, H.embed(b, (0,), 2))))
        lhs = sandwich(_words(H, right, [[Leg(0, H.S)], [], [Leg(1)], [Leg(2)]]), q_lambda)
        worst[2] = max(worst[2], max_abs_diff(lhs, H.mul(H.embed(b, (1,), 2), q_lambda)))
        lhs = sandwich(_words(H, left, [[], [Leg(2, H.S_inv)], [Leg(0)], [Leg(1)]]), q_rho)
        worst[3] = max(worst[3], max_abs_diff(lhs, H.mul(H.embed(b, (0,), 2), q_rho)))
    for name, r in zip(("p-lambda", "p-rho", "q-lambda", "q-rho"), worst):
        report.add(f"pq/commutation-{name}", "commutation relations of the p/q elements", r)

    u2 = H.unit(2)
    t = H.delta(p_lambda, 1)
    v1 = sandwich(_words(H, t, [[Leg(0, H.S)], [], [Leg(1)], [Leg(2)]]), q_lambda)
    t = H.delta(p_rho, 0)
    v2 = sandwich(_words(H, t, [[], [Leg(2, H.S_inv)], [Leg(0)], [Leg(1)]]), q_rho)
    t = H.delta(q_lambda, 1)
    v3 = sandwich(_words(H, t, [[Leg(1)], [Leg(2)], [Leg(0, H.S_inv)], []]), p_lambda)
    t = H.delta(q_rho, 0)
    v4 = sandwich(_words(H, t, [[Leg(0)], [Leg(1)], [], [Leg(2, H.S)]]), p_rho)
    for name, v in zip(("q-lambda-p-lambda", "q-rho-p-rho", "p-lambda-q-lambda", "p-rho-q-rho"), (v1, v2, v3, v4)):
        report.add(f"pq/contraction-{name}", "contraction identities of the p/q elements", max_abs_diff(v, u2))
    return (p_lambda, p_rho, q_lambda, q_rho), report
