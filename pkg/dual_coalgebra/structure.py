"""The dual Ĝ: coassociative coproduct, counit, non-associative product, Ŝ and the arrow actions.

Ĝ elements are one-leg Tensors on the 'dual:<space_id>' leg, in the basis e^μ dual to e_μ.
All maps are transposes of the structure of G.

Key classes: DualStructure
Key functions: dual_of, arrows
"""
from dataclasses import dataclass

from bootstrap.delayed_imports import np
from bootstrap.primary_imports import itertools
from tensor_core import SpaceSignature, Tensor, dual_space_id, pairing
from utils.report import Report


def structure_array(H):
    """c[i, j, k]: e_i e_j = Σ_k c[i,j,k] e_k."""
    return H.algebra.dense()


def coproduct_array(H):
    """Dl[d, d1, d2]: Δ(e_d) = Σ Dl[d,d1,d2] e_d1⊗e_d2."""
    n = H.dim
    out = np.zeros((n, n, n), dtype=complex)
    for d, terms in H.coproduct.images.items():
        for (d1, d2), c in terms:
            out[d, d1, d2] += c
    return out


def counit_array(H):
    out = np.zeros(H.dim, dtype=complex)
    for i, terms in H.counit.images.items():
        for _, c in terms:
            out[i] += c
    return out


@dataclass(frozen=True)
class DualStructure:
    """Dense structure data of Ĝ for a quasi-Hopf algebra of dimension n."""

    space_id: str
    dim: int
    coproduct: np.ndarray      # Δ̂(e^k) = Σ coproduct[s,t,k] e^s⊗e^t  (= c of G)
    counit: np.ndarray         # ε̂(e^k) = ⟨e^k|1⟩
    product: np.ndarray        # e^s e^t = Σ product[d,s,t] e^d  (= Δ of G)
    unit: np.ndarray           # 1̂ = ε
    antipode: np.ndarray       # Ŝ e^k = Σ antipode[x,k] e^x
    antipode_inv: np.ndarray
    left_mult: np.ndarray      # structure constants of G, used by the arrows

    @property
    def sig(self):
        return SpaceSignature((self.dim,), (self.space_id,))

    def element(self, coeffs):
        coeffs = np.asarray(coeffs, dtype=complex)
        return Tensor(self.sig, {(k,): coeffs[k] for k in np.flatnonzero(coeffs)})

    def basis(self, k):
        return Tensor.basis(self.sig, (k,))

    def vec(self, phi):
        out = np.zeros(self.dim, dtype=complex)
        for (k,), v in phi.items():
            out[k] = v
        return out

    def mul(self, phi, psi):
        return self.element(np.einsum("dst,s,t->d", self.product, self.vec(phi), self.vec(psi)))

    def delta(self, phi):
        """Δ̂(φ) as a dense (n, n) array."""
        return np.einsum("stk,k->st", self.coproduct, self.vec(phi))

    def eps(self, phi):
        return complex(self.counit @ self.vec(phi))

    def s_hat(self, phi):
        return self.element(self.antipode @ self.vec(phi))

    def s_hat_inv(self, phi):
        return self.element(self.antipode_inv @ self.vec(phi))

    def left_arrow(self, a, phi):
        """a⇀φ with ⟨a⇀φ|b⟩ = ⟨φ|ba⟩; a is a dense vector in G."""
        return self.element(np.einsum("bak,a,k->b", self.left_mult, a, self.vec(phi)))

    def right_arrow(self, phi, a):
        """φ↼a with ⟨φ↼a|b⟩ = ⟨φ|ab⟩."""
        return self.element(np.einsum("abk,a,k->b", self.left_mult, a, self.vec(phi)))

    def associator(self):
        """(e^a e^b)e^c − e^a(e^b e^c) as a dense (n, n, n, n) array indexed [d, a, b, c]."""
        left = np.einsum("dmc,mab->dabc", self.product, self.product)
        right = np.einsum("dam,mbc->dabc", self.product, self.product)
        return left - right


def dual_of(H, report=None):
    """Build Ĝ by transposition and check its coalgebra and module-algebra laws."""
    if report is None:
        report = Report(f"dual:{H.name}")
    n = H.dim
    c = structure_array(H)
    dl = coproduct_array(H)
    s = H.S.to_matrix()
    s_inv = H.S_inv.to_matrix()
    dual = DualStructure(
        space_id=dual_space_id(H.algebra.space_id),
        dim=n,
        coproduct=c,
        counit=H.algebra.unit_vector(),
        product=dl,
        unit=counit_array(H),
        antipode=s.T,
        antipode_inv=s_inv.T,
        left_mult=c,
    )

    left = np.einsum("stk,uvs->uvtk", c, c)
    right = np.einsum("stk,vwt->svwk", c, c)
    report.add("dual/coassociative", "coassociativity of the dual coproduct", _maxabs(left - right))

    eye = np.eye(n)
    u = dual.unit
    r = max(_maxabs(np.einsum("dst,s->dt", dl, u) - eye), _maxabs(np.einsum("dst,t->ds", dl, u) - eye))
    report.add("dual/unit", "1̂ is a two-sided unit of the dual product", r)

    # Δ̂(e^a e^b) versus Δ̂(e^a)Δ̂(e^b), both as [s, t, a, b]
    lhs = np.einsum("stk,kab->stab", c, dl)
    rhs = np.einsum("pqa,xyb,spx,tqy->stab", c, c, dl, dl)
    report.add("dual/coproduct-multiplicative", "dual coproduct is multiplicative", _maxabs(lhs - rhs))

    basis = [H.basis(i) for i in range(n)]
    worst = 0.0
    for k, i in itertools.product(range(n), repeat=2):
        lhs = pairing(dual.s_hat(dual.basis(k)), basis[i])
        rhs = pairing(dual.basis(k), H.s(basis[i]))
        worst = max(worst, abs(lhs - rhs))
    report.add("dual/antipode-transpose", "⟨Ŝφ|a⟩ = ⟨φ|S(a)⟩", worst)

    defect = np.einsum("dpq,pab->dabq", dl, dl) - np.einsum("dpq,qbc->dpbc", dl, dl)
    report.add("dual/associator-vs-coassociativity", "dual associator equals the coassociativity defect of Δ",
               _maxabs(dual.associator() - defect),
               detail=f"associator size {_maxabs(dual.associator()):.3e}")
    return dual, report


def _maxabs(x):
    return float(np.max(np.abs(x))) if x.size else 0.0


def arrows(dual, a, phi):
    """(a⇀φ, φ↼a) for a dense G vector a and a Ĝ element φ."""
    return dual.left_arrow(a, phi), dual.right_arrow(phi, a)


def arrow_checks(H, dual, report=None):
    """Module-algebra laws of the arrows and their commutation, on the full basis."""
    if report is None:
        report = Report(f"arrows:{H.name}")
    n = H.dim
    c = dual.left_mult
    dl = dual.product
    eye = np.eye(n)
    # L[a][b, k]: ⟨e_a⇀e^k|e_b⟩ = c[b, a, k];  R[a][b, k]: ⟨e^k↼e_a|e_b⟩ = c[a, b, k]
    unit = H.algebra.unit_vector()
    r = max(_maxabs(np.einsum("bak,a->bk", c, unit) - eye), _maxabs(np.einsum("abk,a->bk", c, unit) - eye))
    report.add("arrows/unit", "1⇀φ = φ↼1 = φ", r)

    lhs, rhs = _module_algebra_left(c, dl)
    report.add("arrows/left-module-algebra", "a⇀(φψ) = (a₁⇀φ)(a₂⇀ψ)", _maxabs(lhs - rhs))
    lhs, rhs = _module_algebra_right(c, dl)
    report.add("arrows/right-module-algebra", "(φψ)↼a = (φ↼a₁)(ψ↼a₂)", _maxabs(lhs - rhs))

    # (e_a⇀e^k)↼e_b versus e_a⇀(e^k↼e_b): ⟨·|e_x⟩ = ⟨e^k|e_b e_x e_a⟩ both ways
    lhs = np.einsum("xam,bmk->abxk", c, c)
    rhs = np.einsum("bxm,mak->abxk", c, c)
    report.add("arrows/commute", "(a⇀φ)↼b = a⇀(φ↼b)", _maxabs(lhs - rhs))
    return report


def _module_algebra_left(c, dl):
    """Both sides of a⇀(e^s e^t) paired with e_x, indexed [a, x, s, t]."""
    # ⟨a⇀(e^s e^t)|e_x⟩ = ⟨e^s e^t|e_x e_a⟩ = Σ_k c[x,a,k] Δ(e_k)[s,t]
    lhs = np.einsum("xak,kst->axst", c, dl)
    # Σ_{a1,a2} Δ(e_a)[a1,a2] Σ_{x1,x2} Δ(e_x)[x1,x2] c[x1,a1,s] c[x2,a2,t]
    rhs = np.einsum("apq,xuv,ups,vqt->axst", dl, dl, c, c)
    return lhs, rhs


def _module_algebra_right(c, dl):
    """Both sides of (e^s e^t)↼a paired with e_x, indexed [a, x, s, t]."""
    lhs = np.einsum("axk,kst->axst", c, dl)
    rhs = np.einsum("apq,xuv,pus,qvt->axst", dl, dl, c, c)
    return lhs, rhs
