"""Evaluation of Sweedler-style expressions over a summed tensor.

An expression such as Σ S(P)αQ ⊗ R over φ⁻¹ = P⊗Q⊗R is written as a list of
words, one per output leg; each word is a product of factors that are either
references to legs of the summed tensor (optionally through a LegMap) or
constant one-leg elements.

Key class: Leg
Key functions: evaluate_words, sandwich
"""
from dataclasses import dataclass
from typing import Optional

from bootstrap.primary_imports import itertools
from utils.errors import SignatureMismatchError

from .algebra import resolve_algebra
from .legmaps import LegMap
from .signature import SpaceSignature
from .tensor import Tensor


@dataclass(frozen=True)
class Leg:
    index: int
    via: Optional[LegMap] = None


def _constant(f):
    if isinstance(f, Tensor):
        return f.as_dict()
    return dict(f)


def evaluate_words(t, words, out_algebras):
    """Σ_entries coeff · (w₁ ⊗ w₂ ⊗ …), each w a left-to-right product in its output algebra."""
    if len(words) != len(out_algebras):
        raise SignatureMismatchError(f"{len(words)} words for {len(out_algebras)} output algebras")
    compiled = []
    for word in words:
        factors = []
        for f in word:
            if isinstance(f, Leg):
                if not 0 <= f.index < t.legs:
                    raise SignatureMismatchError(f"word refers to leg {f.index} of a {t.legs}-leg tensor")
                factors.append(("leg", f.index, f.via))
            else:
                factors.append(("const", _constant(f), None))
        compiled.append(factors)

    image_cache = {}

    def leg_vector(via, i):
        if via is None:
            return {i: 1 + 0j}
        key = (id(via), i)
        if key not in image_cache:
            image_cache[key] = {idx[0]: c for idx, c in via.image(i)}
        return image_cache[key]

    sig = SpaceSignature.of(*out_algebras)
    out = {}
    for index, value in t.items():
        vectors = []
        for factors, alg in zip(compiled, out_algebras):
            v = None
            for kind, payload, via in factors:
                fv = leg_vector(via, index[payload]) if kind == "leg" else payload
                v = dict(fv) if v is None else alg.mul_vec(v, fv)
                if not v:
                    break
            if v is None:
                v = dict(alg.unit)
            if not v:
                break
            vectors.append(list(v.items()))
        else:
            for combo in itertools.product(*vectors):
                c = value
                for _, a in combo:
                    c *= a
                key = tuple(k for k, _ in combo)
                out[key] = out.get(key, 0j) + c
    return Tensor(sig, out, check=False)


def sandwich(t, middle):
    """Σ (L₁⊗…⊗L_n)·middle·(R₁⊗…⊗R_n) over t = Σ L₁⊗…⊗L_n⊗R₁⊗…⊗R_n."""
    n = middle.legs
    if t.legs != 2 * n:
        raise SignatureMismatchError(f"sandwich needs {2 * n} outer legs, got {t.legs}")
    for k in range(n):
        if t.sig.leg(k) != middle.sig.leg(k) or t.sig.leg(n + k) != middle.sig.leg(k):
            raise SignatureMismatchError(f"outer leg {k} does not match the middle factor")
    algebras = [resolve_algebra(sid) for sid in middle.sig.space_ids]
    mids = list(middle.items())
    triple = {}

    def leg_product(k, left, mid, right):
        key = (k, left, mid, right)
        if key not in triple:
            alg = algebras[k]
            triple[key] = list(alg.mul_vec(alg.mul_vec({left: 1 + 0j}, {mid: 1 + 0j}), {right: 1 + 0j}).items())
        return triple[key]

    out = {}
    for index, value in t.items():
        for m_index, m_value in mids:
            vectors = []
            for k in range(n):
                v = leg_product(k, index[k], m_index[k], index[n + k])
                if not v:
                    break
                vectors.append(v)
            else:
                for combo in itertools.product(*vectors):
                    c = value * m_value
                    for _, a in combo:
                        c *= a
                    key = tuple(i for i, _ in combo)
                    out[key] = out.get(key, 0j) + c
    return Tensor(middle.sig, out, check=False)
