"""The monodromy matrix M = (id⊗i_D)(R^op)·D and the gauged monodromy relations.

Key classes: MonodromyData
Key functions: monodromy_matrix, verify_monodromy, monodromy_bijectivity, monodromy_suite,
second_level_monodromy
"""
from dataclasses import dataclass

from bootstrap.delayed_imports import np
from config import runtime_settings as settings
from double_construction import build_double
from tensor_core import (
    SpaceSignature,
    Tensor,
    apply_to_leg,
    leg_embed,
    max_abs_diff,
    multiply,
    multiply_chain,
    unit_dict,
    unit_tensor,
)
from utils.report import Report

FLIP = (1, 0)


@dataclass(frozen=True)
class MonodromyData:
    M: Tensor
    R_hat: Tensor
    R: Tensor


def _lift(Dalg, t, legs):
    """Apply i_D to the given legs of a G-tensor."""
    for leg in legs:
        t = apply_to_leg(Dalg.i_D, t, leg)
    return t


def monodromy_matrix(Dalg, R):
    """M = (id⊗i_D)(R^op)·D in G⊗D(G) and R̂ = φ^{213}R^{12}φ⁻¹ in G⊗G⊗D(G)."""
    H = Dalg.source
    M = multiply(_lift(Dalg, R.permute(FLIP), (1,)), Dalg.D)
    R_hat = _lift(Dalg, H.mul(H.embed(H.phi, "213"), H.embed(R, (0, 1), 3), H.phi_inv), (2,))
    return MonodromyData(M, R_hat, R)


def verify_monodromy(Dalg, data, report=None):
    """Normalization, G-invariance and the exchange relation of M."""
    H = Dalg.source
    if report is None:
        report = Report(f"monodromy:{Dalg.name}")
    M = data.M
    one = unit_tensor(SpaceSignature.of(Dalg.base.algebra))
    report.add("monodromy/normal", "(ε⊗id)(M) = 1", max_abs_diff(H.eps(M, 0), one))

    worst, where = 0.0, ""
    for i, b in enumerate(H.basis_elements()):
        db = _lift(Dalg, H.delta(b), (1,))
        r = max_abs_diff(multiply(db, M), multiply(M, db))
        if r > worst:
            worst, where = r, H.algebra.labels[i]
    report.add("monodromy/invariant", "Δ(a)M = MΔ(a)", worst, detail=where)

    sig3 = H.sig(2) + SpaceSignature.of(Dalg.base.algebra)
    m13 = leg_embed(M, (0, 2), 3, sig3, unit_dict)
    m23 = leg_embed(M, (1, 2), 3, sig3, unit_dict)
    phi = _lift(Dalg, H.phi, (2,))
    phi_inv = _lift(Dalg, H.phi_inv, (2,))
    lhs = multiply_chain(m13, data.R_hat, m23)
    rhs = multiply_chain(data.R_hat, phi, H.delta(M, 0), phi_inv)
    report.add("monodromy/exchange", "M^{13}R̂M^{23} = R̂φ(Δ⊗id)(M)φ⁻¹", max_abs_diff(lhs, rhs))
    return report


def monodromy_bijectivity(Dalg, data, report=None):
    """Rank of φ⊗a ↦ M(φ)·i_D(a) from Ĝ⊗G to D(G)."""
    if report is None:
        report = Report(f"monodromy-rank:{Dalg.name}")
    d = Dalg.dense
    emb, _ = d.embedding()
    cd = Dalg.base.algebra.dense()
    rows = data.M.to_dense()
    cols = np.einsum("IJK,hI,Jg->Khg", cd, rows, emb, optimize=True).reshape(d.n * d.n, d.n * d.n)
    s = np.linalg.svd(cols, compute_uv=False)
    rank = int(np.sum(s > settings.SINGULAR_THRESHOLD * max(1.0, s.max())))
    report.add_flag("monodromy/bijective", "φ⊗a ↦ M(φ)·a is a linear bijection onto D(G)", rank == len(cols),
                    detail=f"rank {rank} of {len(cols)}")
    return report


def monodromy_suite(H, report=None):
    """Build D(H) and run the monodromy checks when H carries an R-matrix."""
    if report is None:
        report = Report(f"monodromy-suite:{H.name}")
    R = getattr(H, "R", None)
    if R is None:
        report.add_flag("monodromy/skipped", "monodromy relations", True, detail=f"{H.name} has no R-matrix")
        return report
    Dalg, _ = build_double(H)
    data = monodromy_matrix(Dalg, R)
    verify_monodromy(Dalg, data, report)
    monodromy_bijectivity(Dalg, data, report)
    return report


def second_level_monodromy(Dalg, report=None):
    """Monodromy of D(D(G)) with R_D as the base R-matrix, gated by dimension."""
    if report is None:
        report = Report(f"monodromy-second-level:{Dalg.name}")
    if not settings.deep_checks_allowed(Dalg.dim, settings.SECOND_LEVEL_MAX_DIM):
        report.add_flag("monodromy-second-level/skipped", "second-level monodromy", True,
                        detail=f"dim {Dalg.dim} exceeds {settings.SECOND_LEVEL_MAX_DIM}")
        return report
    report.merge(monodromy_suite(Dalg.base), prefix="second-level")
    return report
