"""Linear maps applied to a single tensor leg.

A LegMap sends a basis vector of one leg to a sparse combination of
multi-indices over zero (counit, functionals), one (matrices, embeddings) or
two (coproducts) new legs.

Key class: LegMap
Key functions: apply_to_leg, apply_to_legs, multiply_legs
"""
from dataclasses import dataclass

from utils.errors import SignatureMismatchError

from .algebra import resolve_algebra
from .tensor import Tensor


@dataclass(frozen=True)
class LegMap:
    kind: str
    domain_space_id: str
    domain_dim: int
    out_dims: tuple
    out_space_ids: tuple
    images: dict

    @classmethod
    def matrix(cls, m, domain, codomain=None):
        """Image of e_i is Σ_k m[k, i] e_k; square when codomain is omitted."""
        from bootstrap.delayed_imports import np
        from config.runtime_settings import PRUNE_THRESHOLD
        codomain = codomain or domain
        m = np.asarray(m, dtype=complex)
        if m.shape != (codomain.dim, domain.dim):
            raise SignatureMismatchError(
                f"matrix of shape {m.shape} does not map dim {domain.dim} to dim {codomain.dim}"
            )
        images = {}
        for i in range(domain.dim):
            col = m[:, i]
            images[i] = tuple(((int(k),), complex(col[k])) for k in np.flatnonzero(np.abs(col) >= PRUNE_THRESHOLD))
        kind = "matrix" if codomain.space_id == domain.space_id else "linear"
        return cls(kind, domain.space_id, domain.dim, (codomain.dim,), (codomain.space_id,), images)

    @classmethod
    def coproduct(cls, images, domain, left=None, right=None):
        """images[i] = [((j, k), c), ...] meaning Δ(e_i) ∋ c·e_j⊗e_k."""
        left = left or domain
        right = right or domain
        clean = {i: tuple((tuple(idx), complex(c)) for idx, c in images.get(i, ())) for i in range(domain.dim)}
        return cls("coproduct", domain.space_id, domain.dim, (left.dim, right.dim),
                   (left.space_id, right.space_id), clean)

    @classmethod
    def counit(cls, values, domain):
        """values[i] = ε(e_i); the leg is removed."""
        return cls.functional(values, domain, kind="counit")

    @classmethod
    def functional(cls, values, domain, kind="functional"):
        if not isinstance(values, dict):
            values = dict(enumerate(values))
        images = {i: (((), complex(values[i])),) for i in range(domain.dim) if values.get(i, 0) != 0}
        return cls(kind, domain.space_id, domain.dim, (), (), images)

    def image(self, i):
        return self.images.get(i, ())

    def to_matrix(self):
        """Dense (out_dim, domain_dim) matrix of a one-output map."""
        from bootstrap.delayed_imports import np
        if len(self.out_dims) != 1:
            raise SignatureMismatchError(f"{self.kind} map has {len(self.out_dims)} output legs")
        m = np.zeros((self.out_dims[0], self.domain_dim), dtype=complex)
        for i, terms in self.images.items():
            for (k,), c in terms:
                m[k, i] += c
        return m

    def apply_vector(self, x):
        """Image of a one-leg element {index: coeff} as a dict over output multi-indices."""
        out = {}
        for i, a in x.items():
            for idx, c in self.image(i):
                out[idx] = out.get(idx, 0j) + a * c
        return out

    def retarget(self, space_map):
        """Same coefficients with space ids renamed through space_map (ids not in it are kept)."""
        return LegMap(self.kind, space_map.get(self.domain_space_id, self.domain_space_id), self.domain_dim,
                      self.out_dims, tuple(space_map.get(s, s) for s in self.out_space_ids), self.images)

    def then(self, other):
        """Composite other ∘ self for one-output maps."""
        if len(self.out_dims) != 1 or self.out_space_ids[0] != other.domain_space_id:
            raise SignatureMismatchError("maps cannot be composed")
        images = {}
        for i, terms in self.images.items():
            acc = {}
            for (k,), c in terms:
                for idx, d in other.image(k):
                    acc[idx] = acc.get(idx, 0j) + c * d
            images[i] = tuple(acc.items())
        kind = other.kind if other.kind in ("counit", "functional", "coproduct") else (
            "matrix" if other.out_space_ids == (self.domain_space_id,) else "linear")
        return LegMap(kind, self.domain_space_id, self.domain_dim, other.out_dims, other.out_space_ids, images)


def apply_to_leg(m, t, leg):
    """Apply m to one leg; output legs replace it in place."""
    dim, sid = t.sig.leg(leg)
    if dim != m.domain_dim or sid != m.domain_space_id:
        raise SignatureMismatchError(
            f"{m.kind} map on space {m.domain_space_id} (dim {m.domain_dim}) "
            f"applied to leg {leg} of space {sid} (dim {dim})"
        )
    sig = t.sig.splice(leg, m.out_dims, m.out_space_ids)
    out = {}
    for index, value in t.items():
        head, tail = index[:leg], index[leg + 1:]
        for idx, c in m.image(index[leg]):
            key = head + idx + tail
            out[key] = out.get(key, 0j) + value * c
    return Tensor(sig, out, check=False)


def apply_to_legs(t, maps):
    """Apply several leg maps given as {leg: LegMap}, legs counted in the input tensor."""
    for leg in sorted(maps, reverse=True):
        t = apply_to_leg(maps[leg], t, leg)
    return t


def multiply_legs(t, leg, algebras=None):
    """Contract legs leg and leg+1 with the algebra product (μ on those legs)."""
    d1, s1 = t.sig.leg(leg)
    d2, s2 = t.sig.leg(leg + 1)
    if s1 != s2:
        raise SignatureMismatchError(f"legs {leg} and {leg + 1} live in different algebras")
    alg = resolve_algebra(s1, algebras)
    sig = t.sig.splice(leg, (), ()).splice(leg, (d1,), (s1,))
    out = {}
    for index, value in t.items():
        terms = alg.products.get((index[leg], index[leg + 1]))
        if not terms:
            continue
        head, tail = index[:leg], index[leg + 2:]
        for k, c in terms:
            key = head + (k,) + tail
            out[key] = out.get(key, 0j) + value * c
    return Tensor(sig, out, check=False)
