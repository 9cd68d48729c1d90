"""Writing algebras as sc-json spec files and reports as JSON lines.

Key functions: algebra_records, export_algebra, export_structure, write_records
"""
from bootstrap.primary_imports import json, os, sys
from config import runtime_settings as settings

FORMATS = ("sc-json",)


def _rec(index, value):
    z = complex(value)
    return [int(i) for i in index] + [z.real, z.imag]


def _tensor_records(t):
    return [_rec(idx, v) for idx, v in sorted(t.items())]


def _core_records(name, alg, coproduct, counit):
    data = {
        "name": name,
        "dimension": alg.dim,
        "labels": list(alg.labels),
        "structure_constants": [
            _rec((i, j, k), v) for (i, j), terms in sorted(alg.products.items()) for k, v in terms
        ],
        "unit": [_rec((i,), v) for i, v in sorted(alg.unit.items())],
        "coproduct": [
            _rec((i, j, k), v) for i, terms in sorted(coproduct.images.items()) for (j, k), v in terms
        ],
        "counit": [_rec((i,), terms[0][1]) for i, terms in sorted(counit.images.items()) if terms],
    }
    return data


def _check_format(fmt):
    if fmt not in FORMATS:
        raise ValueError(f"unknown export format '{fmt}' (choose from: {', '.join(FORMATS)})")
    return fmt


def algebra_records(H, fmt="sc-json"):
    """AlgebraSpecFile dict for a (quasitriangular) quasi-Hopf algebra."""
    data = {"kind": "algebra", "format": _check_format(fmt)}
    data.update(_core_records(H.name, H.algebra, H.coproduct, H.counit))
    data["phi"] = _tensor_records(H.phi)
    data["phi_inv"] = _tensor_records(H.phi_inv)
    data["antipode"] = [
        _rec((i, k), v) for i, terms in sorted(H.S.images.items()) for (k,), v in terms
    ]
    data["alpha"] = _tensor_records(H.alpha)
    data["beta"] = _tensor_records(H.beta)
    R = getattr(H, "R", None)
    if R is not None:
        data["R"] = _tensor_records(R)
    return data


def _write(data, path):
    folder = os.path.dirname(os.path.abspath(path))
    os.makedirs(folder, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, ensure_ascii=False, indent=1)
    if settings.VERBOSE:
        print(f"Wrote {data.get('kind')} file to {path}", file=sys.stderr)
    return path


def default_path(name):
    safe = "".join(ch if ch.isalnum() or ch in "-_." else "_" for ch in name).strip("_")
    return os.path.join(settings.OUTPUT_DIR, f"{safe}.json")


def export_algebra(H, path=None, fmt="sc-json"):
    """Write H as an AlgebraSpecFile; returns the path written."""
    return _write(algebra_records(H, fmt), path or default_path(H.name))


def export_structure(name, alg, coproduct, counit, path=None, fmt="sc-json"):
    """Write an algebra with coproduct and counit only (for example D^ω(G)) as a StructureFile."""
    data = {"kind": "structure", "format": _check_format(fmt)}
    data.update(_core_records(name, alg, coproduct, counit))
    return _write(data, path or default_path(name))


def write_records(report, stream=None, emit_passing=None):
    """Emit one JSON object per check to the stream (stdout by default)."""
    stream = stream or sys.stdout
    emit_passing = settings.EMIT_PASSING if emit_passing is None else emit_passing
    for rec in report.records(emit_passing):
        stream.write(json.dumps(rec, ensure_ascii=False) + "\n")
    stream.flush()
