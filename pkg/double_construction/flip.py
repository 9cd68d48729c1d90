"""Coherent Δ-flip operators: the universal flip D, its inverse, and the L ↔ T correspondence.

A target algebra A is reached through a unital algebra map γ: G → A given as a
linear LegMap (gamma_hom). For the double itself γ = i_D.

Key functions: universal_flip, flip_relations, d_matrix, d_inverse, lt_transform
"""
from bootstrap.delayed_imports import np
from config import runtime_settings as settings
from tensor_core import (
    Leg,
    SpaceSignature,
    Tensor,
    apply_to_leg,
    apply_to_legs,
    evaluate_words,
    leg_embed,
    max_abs_diff,
    multiply,
    multiply_legs,
    resolve_algebra,
    sandwich,
    unit_dict,
    unit_tensor,
)
from quasi_hopf import inverse_display
from utils.report import Report

FLIP = (1, 0)


def target_algebra(gamma_hom):
    return resolve_algebra(gamma_hom.out_space_ids[0])


def _sig_ga(H, gamma_hom, g_legs=1):
    return H.sig(g_legs) + SpaceSignature.of(target_algebra(gamma_hom))


def _embed(H, t, positions, n, gamma_hom):
    """Place a G^⊗(n-1)⊗A tensor's legs at positions of a G^⊗(n-1)⊗A signature."""
    return leg_embed(t, positions, n, _sig_ga(H, gamma_hom, n - 1), unit_dict)


def _phi_a(H, phi, slots, gamma_hom):
    """(id⊗id⊗γ)(φ^{slots})."""
    return apply_to_leg(gamma_hom, H.embed(phi, slots), 2)


def universal_flip(H, p_rho, dense, target):
    """D = Σ_μ S⁻¹(p_ρ²)e_μ p_ρ¹₁ ⊗ (e^μ⋈p_ρ¹₂) as (Tensor over G⊗D(G), dense (n, n²) rows)."""
    n = dense.n
    t = H.delta(p_rho, 0).to_dense()
    rows = np.einsum("abc,cx,xmak->kmb", t, dense.s_inv, dense.p3, optimize=True).reshape(n, n * n)
    sig = H.sig(1) + SpaceSignature.of(target)
    return Tensor.from_dense(sig, rows), rows


def flip_relations(H, T, gamma_hom, report, prefix):
    """Normality, the flip relation and φ-coherence of T ∈ G⊗A."""
    unit_a = unit_tensor(SpaceSignature.of(target_algebra(gamma_hom)))
    report.add(f"{prefix}/normal", "(ε⊗id)(T) = 1", max_abs_diff(H.eps(T, 0), unit_a))

    worst, where = 0.0, ""
    for i, b in enumerate(H.basis_elements()):
        lhs = multiply(apply_to_leg(gamma_hom, H.delta_op(b), 1), T)
        rhs = multiply(T, apply_to_leg(gamma_hom, H.delta(b), 1))
        r = max_abs_diff(lhs, rhs)
        if r > worst:
            worst, where = r, H.algebra.labels[i]
    report.add(f"{prefix}/flip", "(id⊗γ)(Δ^op(a))·T = T·(id⊗γ)(Δ(a))", worst, detail=where)

    lhs = multiply(
        multiply(_phi_a(H, H.phi, "312", gamma_hom), _embed(H, T, (0, 2), 3, gamma_hom)),
        multiply(_phi_a(H, H.phi_inv, "132", gamma_hom), _embed(H, T, (1, 2), 3, gamma_hom)),
    )
    lhs = multiply(lhs, _phi_a(H, H.phi, "123", gamma_hom))
    report.add(f"{prefix}/coherence", "φ^{312}T^{13}(φ⁻¹)^{132}T^{23}φ = (Δ⊗id)(T)",
               max_abs_diff(lhs, H.delta(T, 0)))
    return report


def d_matrix(Dalg, report=None):
    """The universal flip of a built double with its defining relations checked."""
    H = Dalg.source
    if report is None:
        report = Report(f"d-matrix:{Dalg.name}")
    i_d = Dalg.i_D
    d = Dalg.dense
    emb, _ = d.embedding()
    cd = Dalg.base.algebra.dense()
    lhs = np.einsum("IJK,Ia,Jb->abK", cd, emb, emb, optimize=True)
    rhs = np.einsum("abk,Kk->abK", d.c, emb)
    report.add("d-matrix/embedding-multiplicative", "i_D(a)i_D(b) = i_D(ab)", float(np.max(np.abs(lhs - rhs))))
    flip_relations(H, Dalg.D, i_d, report, "d-matrix")
    return Dalg.D, report


def d_inverse(Dalg, report=None):
    """D⁻¹ from its closed formula, checked as a two-sided inverse, plus the antipode contractions."""
    H = Dalg.source
    base = Dalg.base
    if report is None:
        report = Report(f"d-inverse:{Dalg.name}")
    D = Dalg.D
    d_inv = inverse_display(H, D, Dalg.q_rho, embed=Dalg.i_D)
    one = unit_tensor(D.sig)
    r = max(max_abs_diff(multiply(D, d_inv), one), max_abs_diff(multiply(d_inv, D), one))
    report.add("d-inverse/two-sided", "D·D⁻¹ = D⁻¹·D = 1", r)

    sig3 = D.sig + SpaceSignature.of(base.algebra)
    split = base.delta(D, 1)
    alpha_last = leg_embed(base.alpha, (2,), 3, sig3, unit_dict)
    beta_mid = leg_embed(base.beta, (1,), 3, sig3, unit_dict)
    lhs = multiply_legs(base.s(multiply(split, alpha_last), 1), 1)
    rhs = leg_embed(base.alpha, (1,), 2, D.sig, unit_dict)
    report.add("d-inverse/antipode-alpha", "D¹⊗S_D(D²₁)α_D D²₂ = 1⊗α_D", max_abs_diff(lhs, rhs))
    lhs = multiply_legs(base.s(multiply(split, beta_mid), 2), 1)
    rhs = leg_embed(base.beta, (1,), 2, D.sig, unit_dict)
    report.add("d-inverse/antipode-beta", "D¹⊗D²₁β_D S_D(D²₂) = 1⊗β_D", max_abs_diff(lhs, rhs))
    return d_inv, report


def l_to_t(H, L, gamma_hom, p_rho):
    """T = [S⁻¹(p_ρ²)⊗1]·L·(id⊗γ)(Δ(p_ρ¹))."""
    outer = evaluate_words(H.delta(p_rho, 0), [[Leg(2, H.S_inv)], [], [Leg(0)], [Leg(1)]], [H.algebra] * 4)
    return sandwich(apply_to_legs(outer, {1: gamma_hom, 3: gamma_hom}), L)


def t_to_l(H, T, gamma_hom, q_rho):
    """L = (id⊗γ)(q_ρ^{21})·T."""
    return multiply(apply_to_leg(gamma_hom, q_rho.permute(FLIP), 1), T)


def implementer_relations(H, L, gamma_hom, coaction, omega, report, prefix):
    """Normality and the two defining relations of a left δ-implementer L ∈ G⊗A."""
    unit_a = unit_tensor(SpaceSignature.of(target_algebra(gamma_hom)))
    report.add(f"{prefix}/normal", "(ε⊗id)(L) = 1", max_abs_diff(H.eps(L, 0), unit_a))

    worst, where = 0.0, ""
    for i, b in enumerate(H.basis_elements()):
        lhs = multiply(apply_to_leg(gamma_hom, H.embed(b, (1,), 2), 1), L)
        outer = evaluate_words(coaction.apply(b), [[Leg(2, H.S_inv)], [], [Leg(0)], [Leg(1)]], [H.algebra] * 4)
        rhs = sandwich(apply_to_legs(outer, {1: gamma_hom, 3: gamma_hom}), L)
        r = max_abs_diff(lhs, rhs)
        if r > worst:
            worst, where = r, H.algebra.labels[i]
    report.add(f"{prefix}/implements", "[1⊗γ(a)]L = [S⁻¹(a₁)⊗1]L[a₋₁⊗γ(a₀)]", worst, detail=where)

    lhs = multiply(_embed(H, L, (0, 2), 3, gamma_hom), _embed(H, L, (1, 2), 3, gamma_hom))
    outer = evaluate_words(omega.Omega, [[Leg(4)], [Leg(3)], [], [Leg(0)], [Leg(1)], [Leg(2)]], [H.algebra] * 6)
    rhs = sandwich(apply_to_legs(outer, {2: gamma_hom, 5: gamma_hom}), H.delta(L, 0))
    report.add(f"{prefix}/coherent", "L^{13}L^{23} = [Ω⁵⊗Ω⁴⊗1](Δ⊗id)(L)[Ω¹⊗Ω²⊗γ(Ω³)]", max_abs_diff(lhs, rhs))
    return report


def lt_transform(H, L, gamma_hom, pq, coaction, omega, report=None):
    """T for a normal coherent δ-implementer L, with both relation sets and the round trips checked.

    Returns (T, report).
    """
    if report is None:
        report = Report(f"lt-transform:{H.name}")
    _, p_rho, _, q_rho = pq
    implementer_relations(H, L, gamma_hom, coaction, omega, report, "lt/implementer")
    T = l_to_t(H, L, gamma_hom, p_rho)
    flip_relations(H, T, gamma_hom, report, "lt/flip-operator")
    back = t_to_l(H, T, gamma_hom, q_rho)
    report.add("lt/round-trip-l", "L → T → L is the identity", max_abs_diff(back, L), tol=settings.ROUNDTRIP_TOL)
    again = l_to_t(H, back, gamma_hom, p_rho)
    report.add("lt/round-trip-t", "T → L → T is the identity", max_abs_diff(again, T), tol=settings.ROUNDTRIP_TOL)
    return T, report
