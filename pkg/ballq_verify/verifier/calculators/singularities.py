"""Cyclic quotient singularity checks."""

from fractions import Fraction
from typing import Sequence

from ...lattice.intersection import IntersectionLattice
from ...lattice.linalg import signature
from ...singularities.hirzebruch_jung import (
    CyclicSingularity,
    ExceptionalChain,
    Orientation,
    ProperTransformMode,
    discrepancy_correction,
    resolution_invariants,
)
from ...singularities.replay import (
    contracted_configuration_gram,
    contracted_configuration_is_negative_definite,
    replay_adjunction_integrality,
    replay_quotient_curve_contradiction,
)
from ...surface.calculus import KAWAMATA_VIEHWEG, h0_from_chi, riemann_roch_chi
from ...surface.invariants import SurfaceInvariants
from ..registry import Evaluation, register_calculator


@register_calculator("hj.chain")
def hj_chain(n: int, q: int, orientation: str = "hj") -> Evaluation:
    sing = CyclicSingularity(n, q)
    chain = ExceptionalChain.from_singularity(sing, Orientation(orientation))
    discrepancies = chain.discrepancies
    hj_order = ExceptionalChain.from_singularity(sing).self_intersections
    bs = ", ".join(str(-s) for s in hj_order)
    trace = [
        f"{sing}: n/q = {Fraction(n, q)} = [{bs}], {chain.orientation.value} order",
        f"self-intersections {list(chain.self_intersections)}",
        "solve sum_i a_i S_i·S_j = 2 + S_j^2 for every j",
        f"discrepancies ({', '.join(str(a) for a in discrepancies)})",
    ]
    return Evaluation(
        {
            "self_intersections": list(chain.self_intersections),
            "discrepancies": list(discrepancies),
        },
        trace,
    )


@register_calculator("hj.resolution")
def hj_resolution(
    K_sq, euler_number, singularities: Sequence[Sequence[int]]
) -> Evaluation:
    sings = [CyclicSingularity(n, q) for n, q in singularities]
    K_hat_sq, c2_hat = resolution_invariants(
        Fraction(K_sq), Fraction(euler_number), sings
    )
    trace = [f"K_X^2 = {Fraction(K_sq)}, e(X) = {Fraction(euler_number)}"]
    for sing in sings:
        chain = ExceptionalChain.from_singularity(sing)
        trace.append(
            f"{sing}: {len(chain)} curves, a^T G a = {discrepancy_correction(chain)}"
        )
    trace.append(f"K^2 of the resolution = {K_hat_sq}, c2 = {c2_hat}")
    return Evaluation({"K_hat_sq": K_hat_sq, "c2_hat": c2_hat}, trace)


@register_calculator("hj.bicanonical_h0")
def hj_bicanonical_h0(K_sq=3, euler_number=9) -> Evaluation:
    """h⁰(2K_X) through the crepant resolution, K² = 3."""
    K_sq = Fraction(K_sq)
    chi = (K_sq + Fraction(euler_number)) / 12
    surf = SurfaceInvariants(K_sq, Fraction(euler_number), chi)
    K = IntersectionLattice(("K",), ((K_sq,),), name="resolution").basis_class("K")
    value = riemann_roch_chi(surf, 2 * K, K)
    h0 = h0_from_chi(value, KAWAMATA_VIEHWEG)
    trace = [
        f"A2 points are du Val: K = tau*K_X, K^2 = {K_sq}, chi(O) = {chi}",
        f"chi(2K) = chi(O) + K·K = {chi} + {K_sq} = {value}",
        f"h0 = {h0.value} ({h0.axiom.name}, K nef and big)",
    ]
    return Evaluation(h0.value, trace)


@register_calculator("hj.quotient_curve")
def hj_quotient_curve(mode: str = "standard", points_met: int = 2) -> Evaluation:
    result = replay_quotient_curve_contradiction(
        ProperTransformMode(mode), points_met
    )
    return Evaluation(result.computed, result.notes)


@register_calculator("hj.integrality")
def hj_integrality(mode: str = "standard") -> Evaluation:
    result = replay_adjunction_integrality(ProperTransformMode(mode))
    return Evaluation(result.computed, result.notes)


@register_calculator("hj.contracted_configuration")
def hj_contracted_configuration() -> Evaluation:
    gram = contracted_configuration_gram()
    n_plus, n_minus, n_zero = signature(gram)
    definite = contracted_configuration_is_negative_definite()
    trace = [
        "three A2 chains (-2, -2) and the chain (-2, -2, -3)",
        f"signature ({n_plus}, {n_minus}, {n_zero}) on {len(gram)} curves",
        "Q = (sum a_k S_k)^2 + sum_i (sum_j b_ij E_ij)^2 <= 0, equality iff all "
        "coefficients vanish",
        "with a_3 >= 0 and delta >= 0, every term in the adjunction identity "
        "for k = 21 has a sign",
        "C ≡ 21H with H·H = 1/21 gives tau*C·tau*C = 21 and K_X·C = 3",
    ]
    return Evaluation(definite, trace)
