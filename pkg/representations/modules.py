"""Finite-dimensional modules over G and over D(G), and Δ-flips on them.

End(V) legs use the matrix-unit basis E_ij with row-major index i·v + j.

Key classes: GModule, DeltaFlip, DModule
Key functions: regular_module, trivial_module, module_checks, regular_double_module
"""
from dataclasses import dataclass

from bootstrap.delayed_imports import np
from dual_coalgebra import coproduct_array
from tensor_core import LegMap, SpaceSignature, Tensor, matrix_algebra
from utils.errors import SignatureMismatchError
from utils.report import Report


def _maxabs(x):
    return float(np.max(np.abs(x))) if x.size else 0.0


@dataclass(frozen=True)
class GModule:
    """π(e_i) for every basis element of G, stacked as an (n, v, v) array."""

    name: str
    H: object
    matrices: np.ndarray

    def __post_init__(self):
        m = self.matrices
        if m.ndim != 3 or m.shape[0] != self.H.dim or m.shape[1] != m.shape[2]:
            raise SignatureMismatchError(
                f"module {self.name} needs an ({self.H.dim}, v, v) array, got shape {m.shape}"
            )

    @property
    def dim(self):
        return self.matrices.shape[1]

    @property
    def end_algebra(self):
        return matrix_algebra(self.dim)

    def rep_map(self):
        """π: G → End(V) as a linear LegMap."""
        flat = self.matrices.reshape(self.H.dim, -1).T
        return LegMap.matrix(flat, self.H.algebra, self.end_algebra)

    def act(self, a):
        """π(a) for a one-leg element a of G."""
        return np.einsum("i,iab->ab", a.to_dense(), self.matrices)


@dataclass(frozen=True)
class DeltaFlip:
    """D_V ∈ G⊗End(V)."""

    module: GModule
    tensor: Tensor

    @classmethod
    def from_array(cls, module, arr):
        """From an (n, v, v) array: D_V = Σ_t e_t ⊗ arr[t]."""
        arr = np.asarray(arr, dtype=complex)
        n, v = module.H.dim, module.dim
        sig = module.H.sig(1) + SpaceSignature.of(module.end_algebra)
        return cls(module, Tensor.from_dense(sig, arr.reshape(n, v * v)))

    def array(self):
        n, v = self.module.H.dim, self.module.dim
        return self.tensor.to_dense().reshape(n, v, v)

    def coaction(self, vec):
        """β_V(v) = D_V(1⊗v) as an (n, v) array."""
        return np.einsum("tab,b->ta", self.array(), np.asarray(vec, dtype=complex))


@dataclass(frozen=True)
class DModule:
    """Representation of a built double: π^D(e_J) stacked as an (N, v, v) array."""

    name: str
    double: object
    matrices: np.ndarray

    @property
    def dim(self):
        return self.matrices.shape[1]


def regular_module(H):
    """G acting on itself by left multiplication."""
    c = H.algebra.dense()
    return GModule(f"reg({H.name})", H, np.transpose(c, (0, 2, 1)))


def trivial_module(H):
    """The one-dimensional module π = ε."""
    eps = np.array([H.eps_value(b) for b in H.basis_elements()], dtype=complex)
    return GModule(f"triv({H.name})", H, eps.reshape(-1, 1, 1))


def unit_flip(module):
    """D_V = 1⊗id_V."""
    H, v = module.H, module.dim
    arr = np.einsum("t,ab->tab", H.algebra.unit_vector(), np.eye(v))
    return DeltaFlip.from_array(module, arr)


def regular_double_module(Dalg):
    """D(G) acting on itself by left multiplication."""
    c = Dalg.base.algebra.dense()
    return DModule(f"reg({Dalg.name})", Dalg, np.transpose(c, (0, 2, 1)))


def module_checks(matrices, c, unit, labels, report, prefix):
    """Unital and multiplicative on every basis pair."""
    v = matrices.shape[1]
    one = np.einsum("i,iab->ab", unit, matrices)
    report.add(f"{prefix}/unital", "π(1) = id", _maxabs(one - np.eye(v)))
    lhs = np.einsum("IJK,Kab->IJab", c, matrices, optimize=True)
    rhs = np.einsum("Iac,Jcb->IJab", matrices, matrices, optimize=True)
    diff = np.abs(lhs - rhs).reshape(c.shape[0], c.shape[0], -1).max(axis=2) if lhs.size else np.zeros((0, 0))
    worst, where = 0.0, ""
    if diff.size:
        i, j = np.unravel_index(int(np.argmax(diff)), diff.shape)
        worst = float(diff[i, j])
        where = f"({labels[i]}, {labels[j]})" if worst > 0 else ""
    report.add(f"{prefix}/multiplicative", "π(xy) = π(x)π(y) on all basis pairs", worst, detail=where)
    return report


def verify_module(V, report=None):
    if report is None:
        report = Report(f"module:{V.name}")
    alg = V.H.algebra
    return module_checks(V.matrices, alg.dense(), alg.unit_vector(), alg.labels, report, "module")


def tensor_module(V, W):
    """π_{V⊗W} = (π_V⊗π_W)∘Δ."""
    H = V.H
    mats = np.einsum("ijk,jab,kcd->iacbd", coproduct_array(H), V.matrices, W.matrices, optimize=True)
    v = V.dim * W.dim
    return GModule(f"{V.name}⊗{W.name}", H, mats.reshape(H.dim, v, v))
