"""Sparse tensors over products of finite-dimensional spaces.

Key class: Tensor
Key functions: tensor_product, leg_embed, superscript, max_abs_diff
"""
from types import MappingProxyType

from bootstrap.primary_imports import itertools
from utils.errors import LegIndexError, SignatureMismatchError

from .signature import SpaceSignature


def _prune_threshold():
    from config.runtime_settings import PRUNE_THRESHOLD
    return PRUNE_THRESHOLD


class Tensor:
    """Sparse map from multi-indices to complex coefficients.

    Instances are treated as immutable: every operation returns a new Tensor.
    Entries below the prune threshold are dropped on construction.
    """

    __slots__ = ("sig", "_entries")

    def __init__(self, sig, entries=None, check=True):
        self.sig = sig
        threshold = _prune_threshold()
        clean = {}
        if entries:
            for index, value in entries.items():
                value = complex(value)
                if abs(value) < threshold:
                    continue
                index = tuple(index)
                if check:
                    if len(index) != len(sig.dims):
                        raise SignatureMismatchError(
                            f"index {index} has {len(index)} legs, signature has {len(sig.dims)}"
                        )
                    for i, d in zip(index, sig.dims):
                        if not 0 <= i < d:
                            raise LegIndexError(f"index {index} out of bounds for dims {sig.dims}")
                clean[index] = value
        self._entries = clean

    # --- construction helpers ---

    @classmethod
    def zero(cls, sig):
        return cls(sig)

    @classmethod
    def scalar(cls, value=1.0):
        """Element of the ground field (empty signature)."""
        return cls(SpaceSignature(), {(): value})

    @classmethod
    def basis(cls, sig, index, value=1.0):
        return cls(sig, {tuple(index): value})

    @classmethod
    def vector(cls, algebra, coeffs):
        """One-leg tensor from a {basis index: coefficient} dict or a dense sequence."""
        sig = SpaceSignature.of(algebra)
        if isinstance(coeffs, dict):
            return cls(sig, {(i,): c for i, c in coeffs.items()})
        return cls(sig, {(i,): c for i, c in enumerate(coeffs)})

    @classmethod
    def from_dense(cls, sig, array):
        """Tensor from a numpy array of shape sig.dims."""
        entries = {}
        for index in zip(*array.nonzero()):
            entries[tuple(int(i) for i in index)] = array[index]
        return cls(sig, entries, check=False)

    # --- access ---

    @property
    def entries(self):
        return MappingProxyType(self._entries)

    def items(self):
        return self._entries.items()

    def get(self, index, default=0j):
        return self._entries.get(tuple(index), default)

    @property
    def nnz(self):
        return len(self._entries)

    @property
    def legs(self):
        return len(self.sig)

    def is_zero(self):
        return not self._entries

    def as_dict(self):
        """One-leg tensor as a plain {basis index: coefficient} dict."""
        if self.legs != 1:
            raise SignatureMismatchError(f"as_dict needs a one-leg tensor, got {self.legs} legs")
        return {i[0]: c for i, c in self._entries.items()}

    def to_dense(self):
        from bootstrap.delayed_imports import np
        out = np.zeros(self.sig.dims, dtype=complex)
        for index, value in self._entries.items():
            out[index] = value
        return out

    def scalar_value(self):
        """Value of a tensor over the empty signature."""
        if self.legs:
            raise SignatureMismatchError("scalar_value needs the empty signature")
        return self._entries.get((), 0j)

    # --- linear structure ---

    def _check_same(self, other):
        if self.sig != other.sig:
            raise SignatureMismatchError(f"signature mismatch: {self.sig} vs {other.sig}")

    def __add__(self, other):
        self._check_same(other)
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0j) + v
        return Tensor(self.sig, out, check=False)

    def __sub__(self, other):
        self._check_same(other)
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0j) - v
        return Tensor(self.sig, out, check=False)

    def __neg__(self):
        return Tensor(self.sig, {k: -v for k, v in self._entries.items()}, check=False)

    def scale(self, c):
        c = complex(c)
        return Tensor(self.sig, {k: c * v for k, v in self._entries.items()}, check=False)

    def __mul__(self, c):
        if isinstance(c, Tensor):
            raise TypeError("use tensor_core.multiply for algebra products")
        return self.scale(c)

    __rmul__ = __mul__

    def max_abs(self):
        return max((abs(v) for v in self._entries.values()), default=0.0)

    # --- leg bookkeeping ---

    def permute(self, order):
        """Result leg k is this tensor's leg order[k]."""
        order = tuple(order)
        if sorted(order) != list(range(self.legs)):
            raise LegIndexError(f"{order} is not a permutation of {self.legs} legs")
        sig = self.sig.select(order)
        return Tensor(sig, {tuple(k[p] for p in order): v for k, v in self._entries.items()}, check=False)

    def relabel(self, space_ids):
        """Same coefficients, legs reassigned to other algebras of equal dimension."""
        return Tensor(SpaceSignature(self.sig.dims, tuple(space_ids)), self._entries, check=False)

    def __repr__(self):
        return f"Tensor(dims={self.sig.dims}, spaces={self.sig.space_ids}, nnz={self.nnz})"


def tensor_product(a, b):
    """a ⊗ b: concatenated signature, all products of entry pairs."""
    sig = a.sig + b.sig
    out = {}
    for ia, va in a._entries.items():
        for ib, vb in b._entries.items():
            out[ia + ib] = va * vb
    return Tensor(sig, out, check=False)


def tensor_power_product(*tensors):
    result = Tensor.scalar()
    for t in tensors:
        result = tensor_product(result, t)
    return result


def superscript(digits):
    """Slot list for the ψ^{n₁…n_m} convention: '312' -> (2, 0, 1)."""
    return tuple(int(ch) - 1 for ch in str(digits))


def leg_embed(psi, positions, n, target_sig, unit_of):
    """Place psi's leg k in slot positions[k] of an n-leg tensor; remaining slots get units.

    unit_of(space_id) returns the unit of that algebra as a {basis index: coeff} dict.
    """
    positions = tuple(positions)
    if len(positions) != psi.legs:
        raise LegIndexError(f"{len(positions)} positions for a {psi.legs}-leg tensor")
    if len(set(positions)) != len(positions):
        raise LegIndexError(f"duplicate positions {positions}")
    if any(not 0 <= p < n for p in positions) or len(target_sig) != n:
        raise LegIndexError(f"positions {positions} out of range for {n} legs")
    for k, p in enumerate(positions):
        if target_sig.leg(p) != psi.sig.leg(k):
            raise SignatureMismatchError(
                f"leg {k} of psi {psi.sig.leg(k)} does not match slot {p} {target_sig.leg(p)}"
            )

    free = [s for s in range(n) if s not in positions]
    unit_items = [list(unit_of(target_sig.space_ids[s]).items()) for s in free]
    out = {}
    for index, value in psi._entries.items():
        for combo in itertools.product(*unit_items):
            full = [0] * n
            coeff = value
            for k, p in enumerate(positions):
                full[p] = index[k]
            for s, (i, c) in zip(free, combo):
                full[s] = i
                coeff *= c
            key = tuple(full)
            out[key] = out.get(key, 0j) + coeff
    return Tensor(target_sig, out, check=False)


def max_abs_diff(a, b):
    """Residual of an identity a = b."""
    return (a - b).max_abs()
