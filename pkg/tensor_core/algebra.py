"""Finite-dimensional algebras given by structure constants, and products of tensors.

Key class: AlgebraData
Key functions: register_algebra, resolve_algebra, make_space_id, multiply,
multiply_chain, unit_tensor, unit_dict, invert, matrix_algebra
"""
import hashlib

from bootstrap.primary_imports import itertools
from state.caches import algebra_registry, unit_tensor_cache
from utils.errors import SignatureMismatchError, SingularElementError, UnknownSpaceError

from .tensor import Tensor


def make_space_id(name, *arrays):
    """Readable name plus a short digest of the defining data, so equal data share an id."""
    h = hashlib.sha1(name.encode("utf-8"))
    for arr in arrays:
        rounded = [round(complex(z).real, 10) for z in arr.ravel()] + \
                  [round(complex(z).imag, 10) for z in arr.ravel()]
        h.update(repr((arr.shape, rounded)).encode("utf-8"))
    return f"{name}#{h.hexdigest()[:10]}"


class AlgebraData:
    """Associative unital algebra on basis e_0..e_{n-1}: e_i e_j = Σ_k c[i,j,k] e_k."""

    def __init__(self, space_id, dim, products, unit, labels=None):
        self.space_id = space_id
        self.dim = int(dim)
        self.products = {key: tuple(terms) for key, terms in products.items() if terms}
        self.unit = dict(unit)
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(self.dim)]
        partners = {i: [] for i in range(self.dim)}
        for (i, j) in self.products:
            partners[i].append(j)
        self.partners = {i: tuple(sorted(js)) for i, js in partners.items()}

    @classmethod
    def from_dense(cls, name, c, unit, labels=None, space_id=None):
        """Build from a dense (n, n, n) structure tensor and a dense unit vector; registers the result."""
        from bootstrap.delayed_imports import np
        from config.runtime_settings import PRUNE_THRESHOLD
        c = np.asarray(c, dtype=complex)
        unit = np.asarray(unit, dtype=complex)
        n = c.shape[0]
        products = {}
        for i, j in itertools.product(range(n), repeat=2):
            row = c[i, j]
            terms = tuple((int(k), complex(row[k])) for k in np.flatnonzero(np.abs(row) >= PRUNE_THRESHOLD))
            if terms:
                products[(i, j)] = terms
        unit_d = {int(k): complex(unit[k]) for k in np.flatnonzero(np.abs(unit) >= PRUNE_THRESHOLD)}
        sid = space_id or make_space_id(name, c, unit)
        alg = cls(sid, n, products, unit_d, labels)
        alg.name = name
        return register_algebra(alg)

    def dense(self):
        from bootstrap.delayed_imports import np
        c = np.zeros((self.dim,) * 3, dtype=complex)
        for (i, j), terms in self.products.items():
            for k, v in terms:
                c[i, j, k] += v
        return c

    def unit_vector(self):
        from bootstrap.delayed_imports import np
        u = np.zeros(self.dim, dtype=complex)
        for i, v in self.unit.items():
            u[i] = v
        return u

    def mul_vec(self, x, y):
        """Product of two elements given as {index: coeff} dicts."""
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                terms = self.products.get((i, j))
                if terms is None:
                    continue
                ab = a * b
                for k, c in terms:
                    out[k] = out.get(k, 0j) + ab * c
        return out

    def left_matrix(self, x):
        """Matrix of y ↦ x·y."""
        from bootstrap.delayed_imports import np
        m = np.zeros((self.dim, self.dim), dtype=complex)
        for i, a in x.items():
            for j in self.partners[i]:
                for k, c in self.products[(i, j)]:
                    m[k, j] += a * c
        return m

    def associativity_residual(self):
        """max |(e_a e_b) e_c − e_a (e_b e_c)| over all basis triples."""
        from bootstrap.delayed_imports import np
        c = self.dense()
        left = np.einsum("abm,mck->abck", c, c, optimize=True)
        right = np.einsum("bcm,amk->abck", c, c, optimize=True)
        return float(np.max(np.abs(left - right))) if c.size else 0.0

    def unit_residual(self):
        """max |1·e_a − e_a|, |e_a·1 − e_a|."""
        from bootstrap.delayed_imports import np
        c = self.dense()
        u = self.unit_vector()
        left = np.einsum("i,ijk->jk", u, c)
        right = np.einsum("j,ijk->ik", u, c)
        eye = np.eye(self.dim)
        return float(max(np.max(np.abs(left - eye)), np.max(np.abs(right - eye))))

    def opposite(self):
        """Algebra with e_i ·op e_j = e_j e_i; the opposite of an opposite is the original."""
        from bootstrap.delayed_imports import np
        if getattr(self, "opposite_of", None) is not None:
            return self.opposite_of
        c = self.dense()
        name = getattr(self, "name", self.space_id.split("#")[0])
        op = AlgebraData.from_dense(name + "_op", np.transpose(c, (1, 0, 2)), self.unit_vector(), self.labels)
        op.opposite_of = self
        return op

    def __repr__(self):
        return f"AlgebraData({self.space_id!r}, dim={self.dim})"


def register_algebra(alg):
    """Add to the global registry; an existing id with the same dimension is kept."""
    existing = algebra_registry.get(alg.space_id)
    if existing is not None and existing.dim == alg.dim:
        return existing
    algebra_registry[alg.space_id] = alg
    return alg


def resolve_algebra(space_id, algebras=None):
    table = algebras if algebras is not None else algebra_registry
    try:
        return table[space_id]
    except KeyError:
        raise UnknownSpaceError(f"no algebra registered for space '{space_id}'") from None


def unit_dict(space_id, algebras=None):
    return resolve_algebra(space_id, algebras).unit


def unit_tensor(sig, algebras=None):
    """Unit of the product algebra with this signature."""
    if algebras is None and sig in unit_tensor_cache:
        return unit_tensor_cache[sig]
    items = [list(resolve_algebra(s, algebras).unit.items()) for s in sig.space_ids]
    out = {}
    for combo in itertools.product(*items):
        c = 1 + 0j
        for _, v in combo:
            c *= v
        out[tuple(i for i, _ in combo)] = c
    t = Tensor(sig, out, check=False)
    if algebras is None:
        unit_tensor_cache[sig] = t
    return t


def is_unit(t, algebras=None):
    from config.runtime_settings import UNIT_FASTPATH_TOL
    u = unit_tensor(t.sig, algebras)
    if t.nnz != u.nnz:
        return False
    for k, v in u.items():
        if abs(t.get(k) - v) > UNIT_FASTPATH_TOL:
            return False
    return True


def multiply(a, b, algebras=None):
    """Leg-wise product in the product algebra named by the common signature."""
    if a.sig != b.sig:
        raise SignatureMismatchError(f"cannot multiply {a.sig} by {b.sig}")
    algs = [resolve_algebra(s, algebras) for s in a.sig.space_ids]
    if not algs:
        return Tensor.scalar(a.scalar_value() * b.scalar_value())
    if a.is_zero() or b.is_zero():
        return Tensor.zero(a.sig)
    if is_unit(a, algebras):
        return b
    if is_unit(b, algebras):
        return a

    b_entries = b._entries
    n_b = len(b_entries)
    out = {}
    for I, x in a._entries.items():
        partner_lists = [alg.partners[i] for alg, i in zip(algs, I)]
        n_cand = 1
        for p in partner_lists:
            n_cand *= len(p)
            if n_cand > n_b:
                break
        if n_cand <= n_b:
            candidates = ((J, b_entries[J]) for J in itertools.product(*partner_lists) if J in b_entries)
        else:
            candidates = b_entries.items()
        for J, y in candidates:
            terms = []
            for alg, i, j in zip(algs, I, J):
                t = alg.products.get((i, j))
                if t is None:
                    break
                terms.append(t)
            else:
                xy = x * y
                for combo in itertools.product(*terms):
                    c = xy
                    for _, v in combo:
                        c *= v
                    K = tuple(k for k, _ in combo)
                    out[K] = out.get(K, 0j) + c
    return Tensor(a.sig, out, check=False)


def multiply_chain(*factors, algebras=None):
    """Left-to-right product of several tensors with one signature."""
    result = factors[0]
    for f in factors[1:]:
        result = multiply(result, f, algebras)
    return result


def left_multiplication_matrix(t, algebras=None):
    """Dense matrix of x ↦ t·x on the flattened product space."""
    from bootstrap.delayed_imports import np
    sig = t.sig
    algs = [resolve_algebra(s, algebras) for s in sig.space_ids]
    size = sig.size()
    m = np.zeros((size, size), dtype=complex)
    for I, x in t.items():
        per_leg = [alg.left_matrix({i: 1.0}) for alg, i in zip(algs, I)]
        block = np.ones((1, 1), dtype=complex)
        for leg_m in per_leg:
            block = np.kron(block, leg_m)
        m += x * block
    return m


def invert(t, algebras=None):
    """Two-sided inverse in the product algebra by a dense linear solve."""
    from bootstrap.delayed_imports import np
    from config.runtime_settings import SINGULAR_THRESHOLD, VERDICT_TOL
    sig = t.sig
    m = left_multiplication_matrix(t, algebras)
    u = unit_tensor(sig, algebras).to_dense().ravel()
    s = np.linalg.svd(m, compute_uv=False) if m.size else np.ones(1)
    if s.size and s.min() < SINGULAR_THRESHOLD * max(1.0, s.max()):
        raise SingularElementError(
            f"element over {sig.dims} is not invertible (smallest singular value {s.min():.3e})"
        )
    x = np.linalg.solve(m, u)
    inv = Tensor.from_dense(sig, x.reshape(sig.dims))
    right = multiply(inv, t, algebras)
    if (right - unit_tensor(sig, algebras)).max_abs() > VERDICT_TOL:
        raise SingularElementError(f"element over {sig.dims} has a left inverse that is not a right inverse")
    return inv


def matrix_algebra(v):
    """End(ℂ^v) on the matrix-unit basis E_ij (row-major index i*v + j)."""
    products = {}
    for i, j, k in itertools.product(range(v), repeat=3):
        products[(i * v + j, j * v + k)] = ((i * v + k, 1 + 0j),)
    unit = {i * v + i: 1 + 0j for i in range(v)}
    labels = [f"E{i}{j}" for i in range(v) for j in range(v)]
    alg = AlgebraData(f"End{v}", v * v, products, unit, labels)
    alg.name = f"End{v}"
    return register_algebra(alg)
