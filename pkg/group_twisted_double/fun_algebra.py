"""Fun(G)^ω: functions on a finite group with the reassociator of a 3-cocycle.

Key function: fun_qha
"""
from bootstrap.delayed_imports import np
from bootstrap.primary_imports import itertools
from quasi_hopf import make_quasi_hopf
from tensor_core import AlgebraData, LegMap, SpaceSignature, Tensor
from utils.errors import StructureError

from .cocycles import trivial_cocycle, verify_cocycle


def fun_algebra(group):
    """Pointwise algebra on the basis δ_g; unit Σ_g δ_g."""
    n = group.order
    c = np.zeros((n, n, n))
    for g in range(n):
        c[g, g, g] = 1.0
    return AlgebraData.from_dense(f"Fun({group.name})", c, np.ones(n),
                                  labels=[f"d_{lab}" for lab in group.labels])


def fun_qha(group, w=None, check=True):
    """Fun(G) with Δ(δ_g) = Σ_k δ_k⊗δ_{k⁻¹g}, S(δ_g) = δ_{g⁻¹}, α = 1, β = Σ_g ω(g⁻¹,g,g⁻¹)δ_g.

    With check=True a failing cocycle raises StructureError naming the first violation.
    """
    w = w or trivial_cocycle(group)
    if check:
        report = verify_cocycle(group, w)
        if not report.passed:
            bad = report.failures()[0]
            raise StructureError(f"{w.name} is not a normalized 3-cocycle: {bad.name} {bad.detail}".rstrip())
    n = group.order
    alg = fun_algebra(group)
    coproduct = LegMap.coproduct(
        {g: [((k, group.mul(group.inverse(k), g)), 1.0) for k in range(n)] for g in range(n)}, alg
    )
    counit = LegMap.counit({group.identity: 1.0}, alg)
    s = np.zeros((n, n))
    for g in range(n):
        s[group.inverse(g), g] = 1.0
    sig3 = SpaceSignature.power(alg, 3)
    phi = Tensor(sig3, {(g, h, k): w(g, h, k) for g, h, k in itertools.product(range(n), repeat=3)})
    phi_inv = Tensor(sig3, {(g, h, k): 1 / w(g, h, k) for g, h, k in itertools.product(range(n), repeat=3)})
    alpha = Tensor.vector(alg, [1.0] * n)
    beta = Tensor.vector(alg, {g: w(group.inverse(g), g, group.inverse(g)) for g in range(n)})
    name = f"Fun({group.name})^{w.name}"
    return make_quasi_hopf(name, alg, coproduct, counit, phi, s, alpha, beta,
                           phi_inv=phi_inv, antipode_inv=s.T)
