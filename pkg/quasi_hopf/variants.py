"""Opposite and co-opposite quasi-Hopf algebras.

Key functions: op_variant, cop_variant, op_cop_variant, variants
"""
from .structures import QuasiBialgebra, QuasiHopfAlgebra, QuasiTriangularQHA, opposite_coproduct

REVERSED = (2, 1, 0)
FLIP = (1, 0)


def _rebuild(H, suffix, opposite, coproduct, phi, phi_inv, S, S_inv, alpha, beta, r_pair):
    alg = H.algebra.opposite() if opposite else H.algebra
    space_map = {H.algebra.space_id: alg.space_id}

    def moved(t):
        return t.relabel([space_map.get(s, s) for s in t.sig.space_ids])

    base = QuasiBialgebra(f"{H.name}{suffix}", alg, coproduct.retarget(space_map), H.counit.retarget(space_map),
                          moved(phi), moved(phi_inv))
    qha = QuasiHopfAlgebra(base, S.retarget(space_map), S_inv.retarget(space_map), moved(alpha), moved(beta))
    if r_pair is None:
        return qha
    R, R_inv = r_pair
    return QuasiTriangularQHA(qha, moved(R), moved(R_inv))


def _r(H, make):
    if not isinstance(H, QuasiTriangularQHA):
        return None
    return make(H.R, H.R_inv)


def op_variant(H):
    """G_op: φ⁻¹, S⁻¹, α = S⁻¹(β), β = S⁻¹(α); R⁻¹ when H is quasitriangular."""
    return _rebuild(H, "_op", True, H.coproduct, H.phi_inv, H.phi, H.S_inv, H.S,
                    H.s_inv(H.beta), H.s_inv(H.alpha), _r(H, lambda R, Ri: (Ri, R)))


def cop_variant(H):
    """G^cop: Δ^op, (φ⁻¹)^{321}, S⁻¹, α = S⁻¹(α), β = S⁻¹(β); R^{21}."""
    return _rebuild(H, "^cop", False, opposite_coproduct(H.coproduct),
                    H.phi_inv.permute(REVERSED), H.phi.permute(REVERSED), H.S_inv, H.S,
                    H.s_inv(H.alpha), H.s_inv(H.beta), _r(H, lambda R, Ri: (R.permute(FLIP), Ri.permute(FLIP))))


def op_cop_variant(H):
    """G_op^cop: Δ^op, φ^{321}, S, α = β, β = α; (R⁻¹)^{21}."""
    return _rebuild(H, "_op^cop", True, opposite_coproduct(H.coproduct),
                    H.phi.permute(REVERSED), H.phi_inv.permute(REVERSED), H.S, H.S_inv,
                    H.beta, H.alpha, _r(H, lambda R, Ri: (Ri.permute(FLIP), R.permute(FLIP))))


def variants(H):
    return {"op": op_variant(H), "cop": cop_variant(H), "op-cop": op_cop_variant(H)}
