"""Loading groups, cocycles and algebras from JSON spec files.

Every loader validates the structural invariants it needs and raises
SpecFileError naming the file and the first violation. Axioms that a command
reports on (pentagon, antipode, cocycle identity) are left to the reports.

Key classes: StructureFile
Key functions: load, resolve_spec_path, load_group, load_cocycle, load_algebra
"""
from dataclasses import dataclass

from bootstrap.delayed_imports import np
from bootstrap.primary_imports import json, os
from config import runtime_settings as settings
from group_twisted_double import (
    FiniteGroup,
    ThreeCocycle,
    cyclic_group,
    cyclic_standard_cocycle,
    fun_qha,
    group_from_permutations,
    sparse_cocycle,
    symmetric_group,
)
from quasi_hopf import group_algebra, make_quasi_hopf, make_quasitriangular, sweedler_algebra
from state.caches import spec_file_cache
from tensor_core import AlgebraData, LegMap, SpaceSignature, Tensor
from utils.errors import QHAError, SpecFileError


@dataclass(frozen=True)
class StructureFile:
    """An algebra with a coproduct and counit but no quasi-Hopf data."""

    name: str
    algebra: AlgebraData
    coproduct: LegMap
    counit: LegMap


def resolve_spec_path(name):
    """A path as given, or <fixtures_dir>/<name>.json for a bare fixture name."""
    if os.path.isfile(name):
        return os.path.abspath(name)
    candidate = os.path.join(settings.FIXTURES_DIR, name if name.endswith(".json") else name + ".json")
    if os.path.isfile(candidate):
        return os.path.abspath(candidate)
    raise SpecFileError(name, f"no such file (also looked for {candidate})")


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise SpecFileError(path, f"invalid JSON at line {e.lineno}: {e.msg}") from None


def load(name):
    """Load any spec file; the 'kind' field selects the object type. Results are cached per path."""
    path = resolve_spec_path(name)
    if path in spec_file_cache:
        return spec_file_cache[path]
    data = _read_json(path)
    kind = data.get("kind")
    loaders = {"group": _group, "cocycle": _cocycle, "algebra": _algebra, "structure": _structure}
    if kind not in loaders:
        raise SpecFileError(path, f"unknown kind {kind!r} (expected one of {', '.join(loaders)})")
    try:
        obj = loaders[kind](path, data)
    except SpecFileError:
        raise
    except (QHAError, KeyError, TypeError, ValueError, IndexError) as e:
        raise SpecFileError(path, f"{type(e).__name__}: {e}") from None
    spec_file_cache[path] = obj
    return obj


def _expect(path, obj, kind):
    if not isinstance(obj, kind):
        raise SpecFileError(path, f"expected a {kind.__name__}, got {type(obj).__name__}")
    return obj


def load_group(name):
    obj = load(name)
    return _expect(resolve_spec_path(name), obj, FiniteGroup)


def load_cocycle(name):
    obj = load(name)
    return _expect(resolve_spec_path(name), obj, ThreeCocycle)


def load_algebra(name):
    return load(name)


# --- groups and cocycles ---

def _group(path, data):
    name = data.get("name", os.path.splitext(os.path.basename(path))[0])
    if "cyclic" in data:
        return cyclic_group(int(data["cyclic"]), name)
    if data.get("symmetric"):
        return symmetric_group(int(data["symmetric"]))
    if "permutations" in data:
        return group_from_permutations(name, data["permutations"], data.get("labels"))
    if "table" in data:
        table = data["table"]
        order = data.get("order", len(table))
        if len(table) != order:
            raise SpecFileError(path, f"order {order} but {len(table)} table rows")
        return FiniteGroup(name, table, data.get("labels"))
    raise SpecFileError(path, "group needs one of 'table', 'permutations', 'cyclic' or 'symmetric'")


def _sibling(path, name):
    """Resolve a referenced spec relative to the referring file first."""
    local = os.path.join(os.path.dirname(path), name + ".json")
    return local if os.path.isfile(local) else name


def _cocycle(path, data):
    group = load_group(_sibling(path, data["group"]))
    name = data.get("name", os.path.splitext(os.path.basename(path))[0])
    if "family" in data:
        family = data["family"]
        if family.get("name") != "cyclic_standard":
            raise SpecFileError(path, f"unknown cocycle family {family.get('name')!r}")
        w = cyclic_standard_cocycle(group, int(family["p"]))
    else:
        n = group.order
        entries = {}
        for rec in data.get("values", []):
            g, h, k = (int(x) for x in rec[:3])
            if not all(0 <= x < n for x in (g, h, k)):
                raise SpecFileError(path, f"cocycle entry ({g}, {h}, {k}) out of range for order {n}")
            entries[(g, h, k)] = complex(rec[3], rec[4] if len(rec) > 4 else 0.0)
        w = sparse_cocycle(group, entries, name)
    e = group.identity
    for g, h in np.ndindex(group.order, group.order):
        for triple in ((e, g, h), (g, e, h), (g, h, e)):
            if abs(w(*triple) - 1) > settings.VERDICT_TOL:
                labels = ", ".join(group.labels[t] for t in triple)
                raise SpecFileError(path, f"cocycle is not normalized at ({labels})")
    return w


# --- algebras ---

def _check_index(path, what, idx, dim):
    for i in idx:
        if not 0 <= int(i) < dim:
            raise SpecFileError(path, f"{what} index {i} out of range for dimension {dim}")


def _records(path, data, key, arity, dim, required=True):
    """{index tuple: complex} from [[i, ..., re, im], ...] records."""
    if key not in data:
        if required:
            raise SpecFileError(path, f"missing '{key}'")
        return None
    out = {}
    for rec in data[key]:
        if len(rec) not in (arity + 1, arity + 2):
            raise SpecFileError(path, f"'{key}' record {rec} should have {arity} indices and a value")
        idx = tuple(int(x) for x in rec[:arity])
        _check_index(path, key, idx, dim)
        value = complex(rec[arity], rec[arity + 1] if len(rec) == arity + 2 else 0.0)
        out[idx] = out.get(idx, 0j) + value
    return out


def _dense(entries, shape):
    arr = np.zeros(shape, dtype=complex)
    for idx, v in entries.items():
        arr[idx] = v
    return arr


def _core(path, data):
    """Algebra, coproduct and counit shared by 'algebra' and 'structure' files."""
    name = data.get("name", os.path.splitext(os.path.basename(path))[0])
    n = int(data["dimension"])
    c = _dense(_records(path, data, "structure_constants", 3, n), (n, n, n))
    unit = _dense(_records(path, data, "unit", 1, n), (n,))
    alg = AlgebraData.from_dense(name, c, unit, data.get("labels"))
    for what, residual in (("associativity", alg.associativity_residual()), ("unit law", alg.unit_residual())):
        if residual > settings.VERDICT_TOL:
            raise SpecFileError(path, f"structure constants violate {what} (residual {residual:.3e})")
    images = {}
    for (i, j, k), v in _records(path, data, "coproduct", 3, n).items():
        images.setdefault(i, []).append(((j, k), v))
    coproduct = LegMap.coproduct(images, alg)
    counit = LegMap.counit({i: v for (i,), v in _records(path, data, "counit", 1, n).items()}, alg)
    return name, n, alg, coproduct, counit


def _structure(path, data):
    name, _, alg, coproduct, counit = _core(path, data)
    return StructureFile(name, alg, coproduct, counit)


def _builder(path, spec):
    kind = spec.get("name")
    if kind == "group_algebra":
        return group_algebra(load_group(_sibling(path, spec["group"])), with_r_matrix=spec.get("r_matrix", True))
    if kind == "sweedler":
        return sweedler_algebra(float(spec.get("lambda", 0.0)))
    if kind == "fun_group":
        group = load_group(_sibling(path, spec["group"]))
        w = load_cocycle(_sibling(path, spec["cocycle"])) if "cocycle" in spec else None
        return fun_qha(group, w, check=spec.get("check", False))
    raise SpecFileError(path, f"unknown builder {kind!r}")


def _algebra(path, data):
    if "builder" in data:
        return _builder(path, data["builder"])
    name, n, alg, coproduct, counit = _core(path, data)
    sig3 = SpaceSignature.power(alg, 3)
    phi = Tensor(sig3, _records(path, data, "phi", 3, n))
    phi_inv_rec = _records(path, data, "phi_inv", 3, n, required=False)
    phi_inv = Tensor(sig3, phi_inv_rec) if phi_inv_rec is not None else None
    s = np.zeros((n, n), dtype=complex)
    for (i, j), v in _records(path, data, "antipode", 2, n).items():
        s[j, i] += v
    alpha = Tensor.vector(alg, {i: v for (i,), v in _records(path, data, "alpha", 1, n).items()})
    beta = Tensor.vector(alg, {i: v for (i,), v in _records(path, data, "beta", 1, n).items()})
    qha = make_quasi_hopf(name, alg, coproduct, counit, phi, s, alpha, beta, phi_inv=phi_inv)
    r = _records(path, data, "R", 2, n, required=False)
    if r is None:
        return qha
    return make_quasitriangular(qha, Tensor(SpaceSignature.power(alg, 2), r))
