"""The two-sided coaction δ = (Δ⊗id)∘Δ of G on itself and its coherence element Φ ∈ G^⊗5.

Key classes: TwoSidedCoaction
Key functions: two_sided_coaction
"""
from dataclasses import dataclass

from bootstrap.primary_imports import itertools
from config import runtime_settings as settings
from tensor_core import LegMap, Tensor, apply_to_leg, max_abs_diff
from utils.report import Report


@dataclass(frozen=True)
class TwoSidedCoaction:
    delta_map: LegMap
    Phi: Tensor
    Phi_inv: Tensor

    def apply(self, t, leg=0):
        """δ on one leg: the leg becomes three."""
        return apply_to_leg(self.delta_map, t, leg)


def _delta_map(H):
    alg = H.algebra
    images = {i: tuple(H.iterated_delta(b).items()) for i, b in enumerate(H.basis_elements())}
    return LegMap("coaction", alg.space_id, alg.dim, (alg.dim,) * 3, (alg.space_id,) * 3, images)


def coherence_element(H):
    """Φ = [(id⊗Δ⊗id)(φ)⊗1]·[φ⊗1⊗1]·(δ⊗id⊗id)(φ⁻¹) and its inverse."""
    first = H.embed(H.delta(H.phi, 1), (0, 1, 2, 3), 5)
    second = H.embed(H.phi, (0, 1, 2), 5)
    Phi = H.mul(first, second, H.iterated_delta(H.phi_inv, 0))
    Phi_inv = H.mul(
        H.iterated_delta(H.phi, 0),
        H.embed(H.phi_inv, (0, 1, 2), 5),
        H.embed(H.delta(H.phi_inv, 1), (0, 1, 2, 3), 5),
    )
    return Phi, Phi_inv


def coherence_sides(H, coaction):
    """Both sides of the G^⊗7 coherence identity of Φ."""
    Phi = coaction.Phi
    lhs = H.mul(
        H.embed(Phi, (1, 2, 3, 4, 5), 7),
        H.delta(H.delta(Phi, 3), 1),
        H.embed(H.phi, (0, 1, 2), 7),
        H.embed(H.phi_inv, (4, 5, 6), 7),
    )
    rhs = H.mul(coaction.apply(Phi, 2), H.delta(H.delta(Phi, 4), 0))
    return lhs, rhs


def two_sided_coaction(H, report=None):
    """Build (δ, Φ) and check the coaction axioms; returns (coaction, report)."""
    if report is None:
        report = Report(f"coaction:{H.name}")
    Phi, Phi_inv = coherence_element(H)
    coaction = TwoSidedCoaction(_delta_map(H), Phi, Phi_inv)
    basis = H.basis_elements()
    labels = H.algebra.labels

    worst, where = 0.0, ""
    for i, b in enumerate(basis):
        r = max_abs_diff(H.eps(H.eps(coaction.apply(b), 2), 0), b)
        if r > worst:
            worst, where = r, labels[i]
    report.add("coaction/counit", "(ε⊗id⊗ε)∘δ = id", worst, detail=where)

    worst = max_abs_diff(coaction.apply(H.unit(1)), H.unit(3))
    for i, j in itertools.product(range(H.dim), repeat=2):
        lhs = coaction.apply(H.mul(basis[i], basis[j]))
        rhs = H.mul(coaction.apply(basis[i]), coaction.apply(basis[j]))
        worst = max(worst, max_abs_diff(lhs, rhs))
    report.add("coaction/algebra-map", "δ is a unital algebra map", worst)

    u5 = H.unit(5)
    r = max(max_abs_diff(H.mul(Phi, Phi_inv), u5), max_abs_diff(H.mul(Phi_inv, Phi), u5))
    report.add("coaction/phi-inverse", "invertibility of Φ", r)

    worst, where = 0.0, ""
    for i, b in enumerate(basis):
        d = coaction.apply(b)
        lhs = H.mul(coaction.apply(d, 1), Phi)
        rhs = H.mul(Phi, H.delta(H.delta(d, 2), 0))
        r = max_abs_diff(lhs, rhs)
        if r > worst:
            worst, where = r, labels[i]
    report.add("coaction/intertwining", "(id⊗δ⊗id)∘δ = Φ·(Δ⊗id⊗Δ)∘δ·Φ⁻¹", worst, detail=where)

    u3 = H.unit(3)
    r = max(max_abs_diff(H.eps(H.eps(Phi, 3), 1), u3), max_abs_diff(H.eps(H.eps(Phi, 4), 0), u3))
    report.add("coaction/phi-counit", "counit normalization of Φ", r)

    if settings.deep_checks_allowed(H.dim, settings.PHI1_MAX_DIM):
        lhs, rhs = coherence_sides(H, coaction)
        report.add("coaction/phi-coherence", "coherence of Φ in G^⊗7", max_abs_diff(lhs, rhs))
    else:
        report.add_flag("coaction/phi-coherence-skipped", "coherence of Φ in G^⊗7", True,
                        detail=f"dimension {H.dim} above gate; use --force-deep-checks")
    return coaction, report
