"""Left (Ĝ⋈G) and right (G⋈Ĝ) diagonal crossed products as dense structure constants.

Basis of Ĝ⋈G: e^μ⋈e_i ↦ μ·n + i. Basis of G⋈Ĝ: e_a⋈e^μ ↦ a·n + μ.

Key classes: DenseData
Key functions: dense_data, diagonal_product, right_double
"""
from dataclasses import dataclass

from bootstrap.delayed_imports import np
from config import runtime_settings as settings
from tensor_core import AlgebraData, LegMap
from utils.report import Report

from dual_coalgebra.structure import coproduct_array, counit_array


@dataclass(frozen=True)
class DenseData:
    """Dense arrays of G used by every crossed-product formula.

    p3[a, b, c, k] is the coefficient of e_k in e_a e_b e_c; p5[a, b, c, d, e, k] the one in
    e_a e_b e_c e_d e_e; s_inv[a, x] the coefficient of e_x in S⁻¹(e_a).
    """

    n: int
    c: np.ndarray
    unit: np.ndarray
    counit: np.ndarray
    dl: np.ndarray
    dl3: np.ndarray
    s: np.ndarray
    s_inv: np.ndarray
    p3: np.ndarray
    p5: np.ndarray
    labels: tuple

    def embedding(self):
        """(n², n) matrix of a ↦ ε̂⋈a (and of a ↦ a⋈ε̂ for the right double)."""
        left = np.einsum("m,ia->mia", self.counit, np.eye(self.n)).reshape(self.n * self.n, self.n)
        right = np.einsum("ai,m->ima", np.eye(self.n), self.counit).reshape(self.n * self.n, self.n)
        return left, right


def dense_data(H):
    n = H.dim
    c = H.algebra.dense()
    dl = coproduct_array(H)
    p3 = np.einsum("abm,mck->abck", c, c)
    return DenseData(
        n=n,
        c=c,
        unit=H.algebra.unit_vector(),
        counit=counit_array(H),
        dl=dl,
        dl3=np.einsum("imr,mpq->ipqr", dl, dl),
        s=H.S.to_matrix().T,
        s_inv=H.S_inv.to_matrix().T,
        p3=p3,
        p5=np.einsum("abcm,mdek->abcdek", p3, p3),
        labels=tuple(H.algebra.labels),
    )


def _maxabs(x):
    return float(np.max(np.abs(x))) if x.size else 0.0


def _subalgebra_residual(cd, emb, c):
    lhs = np.einsum("IJK,Ia,Jb->abK", cd, emb, emb, optimize=True)
    rhs = np.einsum("abk,Kk->abK", c, emb)
    return _maxabs(lhs - rhs)


def _algebra_checks(report, prefix, alg, cd, emb, dense):
    assoc = alg.associativity_residual()
    report.add(f"{prefix}/associative", "associativity of the diagonal crossed product", assoc,
               detail="upstream structure data is inconsistent" if assoc > settings.VERDICT_TOL else "")
    report.add(f"{prefix}/unit", "unit of the diagonal crossed product", alg.unit_residual())
    report.add(f"{prefix}/subalgebra", "G is a unital subalgebra", _subalgebra_residual(cd, emb, dense.c))


def diagonal_product(H, omega, dense=None, report=None):
    """Structure constants of Ĝ⋈G from Ω; returns (AlgebraData, report).

    (φ⋈a)(ψ⋈b) = [(Ω¹⇀φ↼Ω⁵)(Ω²⇀ψ₂↼Ω⁴)] ⋈ Ω³ψ₁(S⁻¹a₂)a₁₂ψ₃(a₁₁) b.
    """
    if report is None:
        report = Report(f"diagonal-product:{H.name}")
    d = dense or dense_data(H)
    n = d.n
    om = omega.Omega.to_dense()
    # result (d, z) from (m, i)·(n, j)
    arr = np.einsum("ABCEF,ipqr,dst,FsAm,rx,xEtBpn,Cqjz->minjdz",
                    om, d.dl3, d.dl, d.p3, d.s_inv, d.p5, d.p3, optimize=True)
    cd = arr.reshape(n * n, n * n, n * n)
    unit = np.kron(d.counit, d.unit)
    labels = [f"e^{a}⋈{b}" for a in d.labels for b in d.labels]
    alg = AlgebraData.from_dense(f"D({H.name})", cd, unit, labels)
    emb, _ = d.embedding()
    _algebra_checks(report, "left-double", alg, cd, emb, d)
    return alg, report


def right_double(H, omega, dense=None, report=None):
    """Structure constants of G⋈Ĝ from Ω_R; returns (AlgebraData, report).

    (a⋈φ)(b⋈ψ) = a φ₃(S⁻¹b₁₁) b₁₂ φ₁(b₂) Ω_R³ ⋈ (Ω_R²⇀φ₂↼Ω_R⁴)(Ω_R¹⇀ψ↼Ω_R⁵).
    """
    if report is None:
        report = Report(f"right-double:{H.name}")
    d = dense or dense_data(H)
    n = d.n
    om = omega.Omega_R.to_dense()
    arr = np.einsum("ABCEF,jpqr,dst,iqCz,rEsBxm,px,FtAn->imjnzd",
                    om, d.dl3, d.dl, d.p3, d.p5, d.s_inv, d.p3, optimize=True)
    cr = arr.reshape(n * n, n * n, n * n)
    unit = np.kron(d.unit, d.counit)
    labels = [f"{a}⋈e^{b}" for a in d.labels for b in d.labels]
    alg = AlgebraData.from_dense(f"Dr({H.name})", cr, unit, labels)
    _, emb = d.embedding()
    _algebra_checks(report, "right-double", alg, cr, emb, d)
    return alg, report


def embedding_map(H, target, dense=None, right=False):
    """i_D (or its right-double analogue) as a linear LegMap G → target."""
    d = dense or dense_data(H)
    left, right_emb = d.embedding()
    return LegMap.matrix(right_emb if right else left, H.algebra, target)
