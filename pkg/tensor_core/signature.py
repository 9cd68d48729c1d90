"""Space signatures: the ordered leg layout of a tensor.

Key class: SpaceSignature
"""
from dataclasses import dataclass

from utils.errors import LegIndexError, SignatureMismatchError


@dataclass(frozen=True)
class SpaceSignature:
    """Dimensions and algebra identifiers of each leg; () is the ground field."""

    dims: tuple = ()
    space_ids: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "space_ids", tuple(str(s) for s in self.space_ids))
        if len(self.dims) != len(self.space_ids):
            raise SignatureMismatchError(
                f"signature has {len(self.dims)} dims but {len(self.space_ids)} space ids"
            )
        if any(d <= 0 for d in self.dims):
            raise SignatureMismatchError(f"leg dimensions must be positive, got {self.dims}")

    @classmethod
    def of(cls, *algebras):
        """Signature whose legs are the given algebras (anything with .dim and .space_id)."""
        return cls(tuple(a.dim for a in algebras), tuple(a.space_id for a in algebras))

    @classmethod
    def power(cls, algebra, n):
        return cls.of(*([algebra] * n))

    def __len__(self):
        return len(self.dims)

    def __add__(self, other):
        return SpaceSignature(self.dims + other.dims, self.space_ids + other.space_ids)

    def leg(self, k):
        if not 0 <= k < len(self.dims):
            raise LegIndexError(f"leg {k} out of range for {len(self.dims)}-leg signature")
        return self.dims[k], self.space_ids[k]

    def select(self, positions):
        """Signature made of the listed legs, in the listed order."""
        for p in positions:
            self.leg(p)
        return SpaceSignature(
            tuple(self.dims[p] for p in positions),
            tuple(self.space_ids[p] for p in positions),
        )

    def splice(self, leg, dims, space_ids):
        """Replace one leg by a (possibly empty) run of new legs."""
        self.leg(leg)
        return SpaceSignature(
            self.dims[:leg] + tuple(dims) + self.dims[leg + 1:],
            self.space_ids[:leg] + tuple(space_ids) + self.space_ids[leg + 1:],
        )

    def size(self):
        n = 1
        for d in self.dims:
            n *= d
        return n
