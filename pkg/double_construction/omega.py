"""The five-leg elements Ω and Ω_R that twist the diagonal crossed products.

Key classes: OmegaElements
Key functions: omega_elements
"""
from dataclasses import dataclass

from tensor_core import Tensor, apply_to_legs, max_abs_diff
from utils.report import Report


@dataclass(frozen=True)
class OmegaElements:
    Omega: Tensor
    Omega_R: Tensor


def omega_elements(H, coaction, derived, report=None):
    """Ω in its f-form and h-form (compared), and Ω_R = (h⁻¹)^{21}·(S⁻¹⊗S⁻¹⊗id³)(Φ)."""
    if report is None:
        report = Report(f"omega:{H.name}")
    s_inv_45 = {3: H.S_inv, 4: H.S_inv}
    f_form = apply_to_legs(H.mul(H.embed(derived.f, (3, 4), 5), coaction.Phi_inv), s_inv_45)
    h_form = H.mul(apply_to_legs(coaction.Phi_inv, s_inv_45), H.embed(derived.h, (4, 3), 5))
    report.add("omega/forms-agree", "f-form and h-form of Ω agree", max_abs_diff(f_form, h_form))

    u3 = H.unit(3)
    r = max(max_abs_diff(H.eps(H.eps(f_form, 3), 1), u3), max_abs_diff(H.eps(H.eps(f_form, 4), 0), u3))
    report.add("omega/counit", "(id⊗ε⊗id⊗ε⊗id)(Ω) = (ε⊗id³⊗ε)(Ω) = 1⊗1⊗1", r)
    report.add("omega/counit-last-pair", "(id³⊗ε⊗ε)(Ω) = φ⁻¹",
               max_abs_diff(H.eps(H.eps(f_form, 4), 3), H.phi_inv))

    omega_r = H.mul(H.embed(derived.h_inv, (1, 0), 5), apply_to_legs(coaction.Phi, {0: H.S_inv, 1: H.S_inv}))
    return OmegaElements(f_form, omega_r), report
