"""Normalized U(1)-valued 3-cocycles on finite groups.

Key class: ThreeCocycle
Key functions: verify_cocycle, trivial_cocycle, cyclic_standard_cocycle, sparse_cocycle,
coboundary_modified
"""
from bootstrap.delayed_imports import np
from bootstrap.primary_imports import cmath, itertools
from config import runtime_settings as settings
from utils.errors import StructureError
from utils.report import Report
from utils.text import format_scalar


class ThreeCocycle:
    """ω: G³ → ℂ stored as a dense |G|³ array."""

    def __init__(self, group, values, name=None):
        values = np.asarray(values, dtype=complex)
        n = group.order
        if values.shape != (n, n, n):
            raise StructureError(f"cocycle table has shape {values.shape}, expected {(n, n, n)}")
        self.group = group
        self.values = values
        self.name = name or f"omega[{group.name}]"

    def __call__(self, g, h, k):
        return self.values[g, h, k]


def trivial_cocycle(group):
    n = group.order
    return ThreeCocycle(group, np.ones((n, n, n)), f"trivial[{group.name}]")


def sparse_cocycle(group, entries, name=None):
    """All values 1 except the given {(g, h, k): value} overrides."""
    n = group.order
    values = np.ones((n, n, n), dtype=complex)
    for (g, h, k), v in entries.items():
        values[g, h, k] = v
    return ThreeCocycle(group, values, name)


def cyclic_standard_cocycle(group, p):
    """ω_p(a, b, c) = exp(2πi·p·a·⌊(b + c)/n⌋/n) on Z_n with element k the class of k."""
    n = group.order
    values = np.empty((n, n, n), dtype=complex)
    for a, b, c in itertools.product(range(n), repeat=3):
        values[a, b, c] = cmath.exp(2j * cmath.pi * p * a * ((b + c) // n) / n)
    return ThreeCocycle(group, values, f"omega_{p}[{group.name}]")


def coboundary_modified(w, c):
    """ω·∂c for a normalized 2-cochain c (dense |G|² array with c(e, ·) = c(·, e) = 1).

    (∂c)(g, h, k) = c(h, k)·c(g, hk) / (c(gh, k)·c(g, h)).
    """
    G = w.group
    c = np.asarray(c, dtype=complex)
    values = np.array(w.values)
    for g, h, k in itertools.product(G.elements(), repeat=3):
        values[g, h, k] *= c[h, k] * c[g, G.mul(h, k)] / (c[G.mul(g, h), k] * c[g, h])
    return ThreeCocycle(G, values, f"{w.name}*dc")


def verify_cocycle(group, w, tol=None, report=None):
    """Normalization, unit modulus, and the cocycle identity on every quadruple."""
    if tol is None:
        tol = settings.VERDICT_TOL
    if report is None:
        report = Report(f"cocycle:{w.name}")
    G, labels, e = group, group.labels, group.identity

    worst, where = 0.0, ""
    for g, h in itertools.product(G.elements(), repeat=2):
        for triple in ((e, g, h), (g, e, h), (g, h, e)):
            r = abs(w(*triple) - 1)
            if r > worst:
                worst, where = r, "(" + ", ".join(labels[t] for t in triple) + ")"
    report.add("cocycle/normalized", "normalized cocycle", worst, tol=tol, detail=where)

    r = float(np.max(np.abs(np.abs(w.values) - 1)))
    report.add("cocycle/unit-modulus", "cocycle values have unit modulus", r, tol=tol)

    first, worst = "", 0.0
    for g, x, y, z in itertools.product(G.elements(), repeat=4):
        value = w(g, x, y) / w(G.mul(g, x), y, z) * w(g, G.mul(x, y), z) / w(g, x, G.mul(y, z)) * w(x, y, z)
        r = abs(value - 1)
        if r > tol and not first:
            first = f"({labels[g]}, {labels[x]}, {labels[y]}, {labels[z]}) gives {format_scalar(value)}"
        worst = max(worst, r)
    report.add("cocycle/identity", "3-cocycle identity", worst, tol=tol, detail=first)
    return report
