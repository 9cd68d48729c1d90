"""Extending G-modules to D(G)-modules through normal coherent Δ-flips.

Key functions: check_flip, extend_rep, restricted_flip, majid_conditions, hom_check
"""
from bootstrap.delayed_imports import np
from config import runtime_settings as settings
from double_construction import flip_relations, flip_weights
from dual_coalgebra import coproduct_array
from utils.errors import SignatureMismatchError, StructureError
from utils.report import Report

from .modules import DModule, DeltaFlip, GModule, module_checks


def _maxabs(x):
    return float(np.max(np.abs(x))) if x.size else 0.0


def check_flip(H, V, DV, report=None):
    """Normality, the flip relation and φ_V-coherence of D_V."""
    if report is None:
        report = Report(f"flip:{V.name}")
    if DV.module.dim != V.dim:
        raise SignatureMismatchError(f"flip acts on dimension {DV.module.dim}, module {V.name} has {V.dim}")
    return flip_relations(H, DV.tensor, V.rep_map(), report, "flip")


def extend_rep(Dalg, V, DV, report=None):
    """π^D with π^D(i_D(a)) = π(a) and π^D(D(φ)) = (φ⊗id)(D_V); returns (DModule, report).

    Raises StructureError when D_V is not a normal coherent Δ-flip.
    """
    H = Dalg.source
    if report is None:
        report = Report(f"extend:{V.name}")
    flip_report = check_flip(H, V, DV)
    report.merge(flip_report)
    if not flip_report.passed:
        bad = flip_report.failures()[0]
        raise StructureError(f"{V.name} does not extend: {bad.name} fails ({bad.anchor})")

    d = Dalg.dense
    pi, dv = V.matrices, DV.array()
    w = flip_weights(d, Dalg.q_rho)
    piw = np.einsum("tkp,pab->tkab", w, pi)
    img = np.einsum("tkab,tbc,lcd->klad", piw, dv, pi, optimize=True).reshape(d.n * d.n, V.dim, V.dim)
    ext = np.einsum("KJ,Kab->Jab", Dalg.mu_inv, img)
    dmod = DModule(f"{V.name}^D", Dalg, ext)

    alg = Dalg.base.algebra
    module_checks(ext, alg.dense(), alg.unit_vector(), alg.labels, report, "extend")
    emb, _ = d.embedding()
    report.add("extend/restricts", "π^D(i_D(a)) = π(a)", _maxabs(np.einsum("Iq,Iab->qab", emb, ext) - pi))
    report.add("extend/flip-image", "π^D(D(φ)) = (φ⊗id)(D_V)",
               _maxabs(np.einsum("tI,Iab->tab", Dalg.d_rows, ext) - dv))
    return dmod, report


def restricted_flip(dmod):
    """(π, D_V) with π = π^D∘i_D and D_V = (id⊗π^D)(D) for a D(G)-module."""
    Dalg = dmod.double
    emb, _ = Dalg.dense.embedding()
    V = GModule(f"{dmod.name}|G", Dalg.source, np.einsum("Iq,Iab->qab", emb, dmod.matrices))
    return V, DeltaFlip.from_array(V, np.einsum("tI,Iab->tab", Dalg.d_rows, dmod.matrices))


def _coaction_arrays(H, V, DV):
    return H.algebra.dense(), coproduct_array(H), V.matrices, DV.array()


def majid_conditions(H, V, DV, report=None):
    """The three conditions on β_V: v ↦ D_V(1⊗v), evaluated on the basis of V."""
    if report is None:
        report = Report(f"majid:{V.name}")
    c, dl, pi, dv = _coaction_arrays(H, V, DV)
    eps = np.array([H.eps_value(b) for b in H.basis_elements()])
    report.add("majid/counit", "(ε⊗id)∘β_V = id_V", _maxabs(np.einsum("t,tab->ab", eps, dv) - np.eye(V.dim)))

    lhs = np.einsum("apq,tpk,tib,qbv->akiv", dl, c, dv, pi, optimize=True)
    rhs = np.einsum("apq,qtk,pib,tbv->akiv", dl, c, pi, dv, optimize=True)
    worst, where = 0.0, ""
    if lhs.size:
        per = np.abs(lhs - rhs).reshape(H.dim, -1).max(axis=1)
        a = int(np.argmax(per))
        worst = float(per[a])
        where = H.algebra.labels[a] if worst > 0 else ""
    report.add("majid/flip", "(a₂·v)^(1)a₁ ⊗ (a₂·v)^(2) = a₂v^(1) ⊗ a₁·v^(2)", worst, detail=where)

    phi_inv = H.phi_inv.to_dense()
    lhs = np.einsum("PQR,Rtk,sPm,sib,Qbc,tcv->kmiv", phi_inv, c, c, dv, pi, dv, optimize=True)
    inner = np.einsum("PQR,sab,bQk,aPm,sic,Rcv->kmiv", phi_inv, dl, c, c, dv, pi, optimize=True)
    rhs = np.einsum("xyz,zkp,yme,xij,kmjv->peiv", phi_inv, c, c, pi, inner, optimize=True)
    report.add("majid/coherence", "β_V coherence with (φ⁻¹)^{321} on G⊗G⊗V", _maxabs(lhs - rhs))
    return report


def hom_check(Dalg, V, DV, W, DW, t, report=None):
    """Whether t: V → W is a morphism of the extended modules; returns (verdict, report).

    The verdict is the G-side criterion (t intertwines π and (id⊗t)(D_V) = D_W);
    the report also records the direct D(G)-side test and whether both agree.
    """
    t = np.asarray(t, dtype=complex)
    if t.shape != (W.dim, V.dim):
        raise SignatureMismatchError(f"map of shape {t.shape} does not go from dim {V.dim} to dim {W.dim}")
    if report is None:
        report = Report(f"hom:{V.name}->{W.name}")
    g_side = _maxabs(np.einsum("ab,ibc->iac", t, V.matrices) - np.einsum("iab,bc->iac", W.matrices, t))
    report.add("hom/g-intertwiner", "t∘π_V(a) = π_W(a)∘t", g_side)
    flip_side = _maxabs(np.einsum("ab,sbc->sac", t, DV.array()) - np.einsum("sab,bc->sac", DW.array(), t))
    report.add("hom/flip-intertwiner", "(id⊗t)(D_V) = D_W", flip_side)
    verdict = max(g_side, flip_side) <= settings.VERDICT_TOL

    ext_v, _ = extend_rep(Dalg, V, DV)
    ext_w, _ = extend_rep(Dalg, W, DW)
    d_side = _maxabs(np.einsum("ab,Ibc->Iac", t, ext_v.matrices) - np.einsum("Iab,bc->Iac", ext_w.matrices, t))
    extended = d_side <= settings.VERDICT_TOL
    report.add_flag("hom/criteria-agree", "G-side criterion matches the D(G)-intertwiner test",
                    extended == verdict, detail=f"g-side {verdict}, extended {extended}")
    return verdict, report
