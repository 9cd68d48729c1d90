"""Built-in quasi-Hopf fixtures: group algebras and Sweedler's four-dimensional algebra.

Key functions: group_algebra, sweedler_algebra
"""
from bootstrap.delayed_imports import np
from bootstrap.primary_imports import itertools
from tensor_core import AlgebraData, LegMap, SpaceSignature, Tensor, unit_tensor

from .structures import make_quasi_hopf, make_quasitriangular


def group_algebra(group, with_r_matrix=True):
    """ℂ[G] as a quasi-Hopf algebra with trivial φ, α = β = 1 and R = 1⊗1."""
    n = group.order
    c = np.zeros((n, n, n))
    for g, h in itertools.product(range(n), repeat=2):
        c[g, h, group.mul(g, h)] = 1.0
    unit = np.zeros(n)
    unit[group.identity] = 1.0
    name = f"C[{group.name}]"
    alg = AlgebraData.from_dense(name, c, unit, labels=[f"e_{lab}" for lab in group.labels])

    coproduct = LegMap.coproduct({g: [((g, g), 1.0)] for g in range(n)}, alg)
    counit = LegMap.counit({g: 1.0 for g in range(n)}, alg)
    s = np.zeros((n, n))
    for g in range(n):
        s[group.inverse(g), g] = 1.0
    one = Tensor.vector(alg, {group.identity: 1.0})
    phi = unit_tensor(_sig(alg, 3))
    qha = make_quasi_hopf(name, alg, coproduct, counit, phi, s, one, one, phi_inv=phi, antipode_inv=s.T)
    if not with_r_matrix:
        return qha
    r = unit_tensor(_sig(alg, 2))
    return make_quasitriangular(qha, r, r)


def sweedler_algebra(lam=0.0):
    """H₄ = ⟨g, x | g² = 1, x² = 0, xg = −gx⟩ on basis (1, g, x, gx) with R_λ.

    R_λ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + λ/2 (x⊗x − x⊗gx + gx⊗gx + gx⊗x).
    """
    one, g, x, gx = range(4)
    c = np.zeros((4, 4, 4))
    for b in range(4):
        c[one, b, b] = 1.0
    table = {
        (g, one): (g, 1), (g, g): (one, 1), (g, x): (gx, 1), (g, gx): (x, 1),
        (x, one): (x, 1), (x, g): (gx, -1),
        (gx, one): (gx, 1), (gx, g): (x, -1),
    }
    for (a, b), (k, v) in table.items():
        c[a, b, k] = v
    unit = np.array([1.0, 0, 0, 0])
    alg = AlgebraData.from_dense("H4", c, unit, labels=["1", "g", "x", "gx"])

    coproduct = LegMap.coproduct({
        one: [((one, one), 1.0)],
        g: [((g, g), 1.0)],
        x: [((x, one), 1.0), ((g, x), 1.0)],
        gx: [((gx, g), 1.0), ((one, gx), 1.0)],
    }, alg)
    counit = LegMap.counit({one: 1.0, g: 1.0}, alg)
    s = np.zeros((4, 4))
    s[one, one] = 1.0
    s[g, g] = 1.0
    s[gx, x] = -1.0
    s[x, gx] = 1.0
    e = Tensor.vector(alg, {one: 1.0})
    phi = unit_tensor(_sig(alg, 3))
    name = "H4" if not lam else f"H4[lambda={lam:g}]"
    qha = make_quasi_hopf(name, alg, coproduct, counit, phi, s, e, e, phi_inv=phi)

    r = {(one, one): 0.5, (one, g): 0.5, (g, one): 0.5, (g, g): -0.5}
    if lam:
        for key, sign in (((x, x), 1), ((x, gx), -1), ((gx, gx), 1), ((gx, x), 1)):
            r[key] = r.get(key, 0) + sign * lam / 2
    return make_quasitriangular(qha, Tensor(_sig(alg, 2), r))


def _sig(alg, n):
    return SpaceSignature.power(alg, n)
