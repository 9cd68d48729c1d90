"""Quasi-bialgebra, quasi-Hopf and quasitriangular containers.

Key classes: QuasiBialgebra, QuasiHopfAlgebra, QuasiTriangularQHA
Key functions: make_quasi_hopf, make_quasitriangular, opposite_coproduct
"""
from dataclasses import dataclass

from bootstrap.delayed_imports import np
from config import runtime_settings as settings
from tensor_core import (
    LegMap,
    SpaceSignature,
    Tensor,
    apply_to_leg,
    invert,
    leg_embed,
    multiply_chain,
    superscript,
    unit_dict,
    unit_tensor,
)
from utils.errors import SignatureMismatchError, SingularElementError


def opposite_coproduct(coproduct):
    """Δ^op = τ∘Δ as a LegMap."""
    images = {i: tuple(((k, j), c) for (j, k), c in terms) for i, terms in coproduct.images.items()}
    return LegMap("coproduct", coproduct.domain_space_id, coproduct.domain_dim,
                  coproduct.out_dims[::-1], coproduct.out_space_ids[::-1], images)


@dataclass(frozen=True)
class QuasiBialgebra:
    name: str
    algebra: object
    coproduct: LegMap
    counit: LegMap
    phi: Tensor
    phi_inv: Tensor


@dataclass(frozen=True)
class QuasiHopfAlgebra:
    """(G, Δ, ε, φ) with antipode data (S, α, β); helpers evaluate formulas in G^⊗n."""

    base: QuasiBialgebra
    S: LegMap
    S_inv: LegMap
    alpha: Tensor
    beta: Tensor

    # --- shortcuts ---

    @property
    def name(self):
        return self.base.name

    @property
    def algebra(self):
        return self.base.algebra

    @property
    def dim(self):
        return self.base.algebra.dim

    @property
    def phi(self):
        return self.base.phi

    @property
    def phi_inv(self):
        return self.base.phi_inv

    @property
    def coproduct(self):
        return self.base.coproduct

    @property
    def coproduct_op(self):
        return opposite_coproduct(self.base.coproduct)

    @property
    def counit(self):
        return self.base.counit

    def sig(self, n):
        return SpaceSignature.power(self.algebra, n)

    def unit(self, n=1):
        return unit_tensor(self.sig(n))

    def basis(self, i):
        return Tensor.basis(self.sig(1), (i,))

    def element(self, coeffs):
        return Tensor.vector(self.algebra, coeffs)

    def eps_value(self, x):
        """ε of a one-leg element."""
        return self.counit.apply_vector(x.as_dict()).get((), 0j)

    # --- leg operations ---

    def mul(self, *factors):
        return multiply_chain(*factors)

    def embed(self, psi, slots, n=None):
        """psi^{slots} in G^⊗n; slots is a superscript string like '312' or a 0-based tuple."""
        positions = superscript(slots) if isinstance(slots, str) else tuple(slots)
        n = n if n is not None else len(positions)
        return leg_embed(psi, positions, n, self.sig(n), unit_dict)

    def delta(self, t, leg=0):
        return apply_to_leg(self.coproduct, t, leg)

    def delta_op(self, t, leg=0):
        return apply_to_leg(self.coproduct_op, t, leg)

    def eps(self, t, leg=0):
        return apply_to_leg(self.counit, t, leg)

    def s(self, t, leg=0):
        return apply_to_leg(self.S, t, leg)

    def s_inv(self, t, leg=0):
        return apply_to_leg(self.S_inv, t, leg)

    def iterated_delta(self, t, leg=0):
        """(Δ⊗id)∘Δ on one leg: a leg becomes three."""
        return self.delta(self.delta(t, leg), leg)

    def basis_elements(self):
        return [self.basis(i) for i in range(self.dim)]


@dataclass(frozen=True)
class QuasiTriangularQHA:
    qha: QuasiHopfAlgebra
    R: Tensor
    R_inv: Tensor

    def __getattr__(self, item):
        # Delegate everything else to the quasi-Hopf part.
        if item in ("qha", "R", "R_inv"):
            raise AttributeError(item)
        return getattr(self.qha, item)


def _inverse_matrix(m, what):
    s = np.linalg.svd(m, compute_uv=False)
    if s.min() < settings.SINGULAR_THRESHOLD * max(1.0, s.max()):
        raise SingularElementError(f"{what} is not invertible (smallest singular value {s.min():.3e})")
    return np.linalg.inv(m)


def make_quasi_hopf(name, algebra, coproduct, counit, phi, antipode, alpha, beta,
                    phi_inv=None, antipode_inv=None):
    """Assemble a QuasiHopfAlgebra; φ⁻¹ and S⁻¹ are computed when not supplied.

    antipode / antipode_inv may be LegMaps or dense matrices (column i = image of e_i).
    """
    if not isinstance(antipode, LegMap):
        antipode = LegMap.matrix(antipode, algebra)
    if antipode_inv is None:
        antipode_inv = LegMap.matrix(_inverse_matrix(antipode.to_matrix(), f"antipode of {name}"), algebra)
    elif not isinstance(antipode_inv, LegMap):
        antipode_inv = LegMap.matrix(antipode_inv, algebra)
    sig3 = SpaceSignature.power(algebra, 3)
    if phi.sig != sig3:
        raise SignatureMismatchError(f"reassociator of {name} must live in G^⊗3")
    if phi_inv is None:
        phi_inv = invert(phi)
    for el, label in ((alpha, "alpha"), (beta, "beta")):
        if el.sig != SpaceSignature.of(algebra):
            raise SignatureMismatchError(f"{label} of {name} must be a one-leg element of G")
    base = QuasiBialgebra(name, algebra, coproduct, counit, phi, phi_inv)
    return QuasiHopfAlgebra(base, antipode, antipode_inv, alpha, beta)


def make_quasitriangular(qha, R, R_inv=None):
    if R.sig != qha.sig(2):
        raise SignatureMismatchError(f"R-matrix of {qha.name} must live in G⊗G")
    if R_inv is None:
        R_inv = invert(R)
    return QuasiTriangularQHA(qha, R, R_inv)
