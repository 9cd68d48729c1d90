"""Dual pairing between Ĝ-side and G-side tensors.

Dual legs carry space ids of the form 'dual:<space_id>'.

Key functions: dual_space_id, primal_space_id, pairing
"""
from utils.errors import SignatureMismatchError

DUAL_PREFIX = "dual:"


def dual_space_id(space_id):
    return DUAL_PREFIX + space_id


def primal_space_id(space_id):
    if not space_id.startswith(DUAL_PREFIX):
        raise SignatureMismatchError(f"'{space_id}' is not a dual space id")
    return space_id[len(DUAL_PREFIX):]


def pairing(phi, a):
    """⟨φ|a⟩ = Σ_I φ_I a_I for φ over dual legs matching a's legs."""
    if phi.sig.dims != a.sig.dims:
        raise SignatureMismatchError(f"cannot pair dims {phi.sig.dims} with {a.sig.dims}")
    for ds, ps in zip(phi.sig.space_ids, a.sig.space_ids):
        if primal_space_id(ds) != ps:
            raise SignatureMismatchError(f"dual leg {ds} does not pair with {ps}")
    small, large = (phi, a) if phi.nnz <= a.nnz else (a, phi)
    total = 0j
    for index, value in small.items():
        other = large.get(index)
        if other:
            total += value * other
    return total
