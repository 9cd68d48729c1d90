"""Algebra isomorphism between the left (Ĝ⋈G) and right (G⋈Ĝ) diagonal crossed products.

Both directions are given by closed formulas over the coherence element Φ:

    V = S(Φ̄¹)αΦ̄² ⊗ Φ̄³ ⊗ S⁻¹(αΦ̄⁵)Φ̄⁴
    W = Φ²S⁻¹(Φ¹β) ⊗ Φ³ ⊗ Φ⁴βS(Φ⁵)

    φ⋈a ↦ (V²⋈(S⁻¹(V¹)⇀φ↼V³))·(a⋈ε̂)
    a⋈φ ↦ (ε̂⋈a)·((W¹⇀φ↼S⁻¹(W³))⋈W²)

Key classes: CrossedProductIso
Key functions: left_right_iso, connecting_elements
"""
from dataclasses import dataclass

from bootstrap.delayed_imports import np
from config import runtime_settings as settings
from tensor_core import Leg, evaluate_words
from utils.report import Report

from .crossed_product import right_double


@dataclass(frozen=True)
class CrossedProductIso:
    right_algebra: object
    forward: np.ndarray
    backward: np.ndarray

    def to_right(self, x):
        return self.forward @ np.asarray(x, dtype=complex)

    def to_left(self, y):
        return self.backward @ np.asarray(y, dtype=complex)


def connecting_elements(H, coaction):
    """(V, W) as three-leg tensors over G."""
    alg3 = [H.algebra] * 3
    s_inv_alpha = H.s_inv(H.alpha)
    s_inv_beta = H.s_inv(H.beta)
    v = evaluate_words(coaction.Phi_inv, [
        [Leg(0, H.S), H.alpha, Leg(1)],
        [Leg(2)],
        [Leg(4, H.S_inv), s_inv_alpha, Leg(3)],
    ], alg3)
    w = evaluate_words(coaction.Phi, [
        [Leg(1), s_inv_beta, Leg(0, H.S_inv)],
        [Leg(2)],
        [Leg(3), H.beta, Leg(4, H.S)],
    ], alg3)
    return v, w


def _maxabs(x):
    return float(np.max(np.abs(x))) if x.size else 0.0


def _multiplicative(m, c_src, c_dst):
    lhs = np.einsum("IJK,MK->IJM", c_src, m, optimize=True)
    rhs = np.einsum("PQM,PI,QJ->IJM", c_dst, m, m, optimize=True)
    return _maxabs(lhs - rhs)


def _spot_checks(m, c_src, c_dst, rng, pairs):
    worst = 0.0
    size = m.shape[1]
    for _ in range(pairs):
        x = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        y = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        xy = np.einsum("I,J,IJK->K", x, y, c_src)
        image = np.einsum("P,Q,PQM->M", m @ x, m @ y, c_dst)
        worst = max(worst, _maxabs(m @ xy - image))
    return worst


def left_right_iso(Dalg, report=None):
    """Build G⋈Ĝ and both directions of the isomorphism; returns (CrossedProductIso, report)."""
    H = Dalg.source
    if report is None:
        report = Report(f"left-right-iso:{H.name}")
    d = Dalg.dense
    n, nn = d.n, d.n * d.n
    right_alg, r = right_double(H, Dalg.omega, d)
    report.merge(r)
    cl = Dalg.base.algebra.dense()
    cr = right_alg.dense()
    emb_l, emb_r = d.embedding()

    v, w = connecting_elements(H, Dalg.coaction)
    head = np.einsum("pqr,pb,rdbm->mqd", v.to_dense(), d.s_inv, d.p3, optimize=True).reshape(n, nn)
    forward = np.einsum("IJK,mI,Ja->Kma", cr, head, emb_r, optimize=True).reshape(nn, nn)
    tail = np.einsum("pqr,rc,cdpm->mdq", w.to_dense(), d.s_inv, d.p3, optimize=True).reshape(n, nn)
    backward = np.einsum("IJK,Ia,mJ->Kam", cl, emb_l, tail, optimize=True).reshape(nn, nn)

    eye = np.eye(nn)
    report.add("left-right-iso/round-trip-left", "left → right → left is the identity",
               _maxabs(backward @ forward - eye), tol=settings.ROUNDTRIP_TOL)
    report.add("left-right-iso/round-trip-right", "right → left → right is the identity",
               _maxabs(forward @ backward - eye), tol=settings.ROUNDTRIP_TOL)
    report.add("left-right-iso/multiplicative", "left → right is an algebra map", _multiplicative(forward, cl, cr))
    report.add("left-right-iso/multiplicative-inverse", "right → left is an algebra map",
               _multiplicative(backward, cr, cl))
    rng = np.random.default_rng(settings.SEED)
    report.add("left-right-iso/spot-checks", f"{settings.SPOT_CHECK_PAIRS} random products preserved",
               _spot_checks(forward, cl, cr, rng, settings.SPOT_CHECK_PAIRS))
    report.add("left-right-iso/identity-on-G", "ε̂⋈a ↦ a⋈ε̂", _maxabs(forward @ emb_l - emb_r))
    report.add("left-right-iso/unit", "unit ↦ unit",
               _maxabs(forward @ Dalg.base.algebra.unit_vector() - right_alg.unit_vector()))
    return CrossedProductIso(right_alg, forward, backward), report
