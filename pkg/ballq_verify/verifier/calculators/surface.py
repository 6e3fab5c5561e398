"""Chern number, Riemann–Roch and adjunction checks on smooth ball quotients."""

from fractions import Fraction

from ...errors.exceptions import BallqError
from ...lattice.intersection import IntersectionLattice, pair
from ...reider.enumeration import exclude_low_genus
from ...surface.calculus import (
    KAWAMATA_VIEHWEG,
    arithmetic_genus_from_numbers,
    h0_from_chi,
    monomial_section_bound,
    restriction_degree,
    riemann_roch_chi,
)
from ...surface.invariants import (
    SurfaceInvariants,
    ball_quotient_invariants,
    fake_projective_plane_invariants,
)
from ...surface.torsion import PolarizedDivisor, TorsionClass
from ..registry import Evaluation, register_calculator


def hyperplane_lattice(H_sq=1) -> IntersectionLattice:
    """Picard number one: NS/tor generated by H with K ≡ 3H."""
    return IntersectionLattice(("H",), ((H_sq,),), name="picard-one")


@register_calculator("surface.ball_quotient_sweep")
def ball_quotient_sweep(max_c2: int = 30) -> Evaluation:
    """Which Euler numbers admit integral χ(O) under c₁² = 3c₂."""
    accepted = []
    trace = ["c1^2 = 3 c2 and 12 chi = c1^2 + c2 = 4 c2, so chi = c2/3"]
    for c2 in range(1, max_c2 + 1):
        try:
            surf = ball_quotient_invariants(c2)
        except BallqError as e:
            trace.append(f"c2 = {c2}: {e.message}")
            continue
        accepted.append(c2)
        trace.append(f"c2 = {c2}: c1^2 = {surf.c1_sq}, chi = {surf.chi_O}")
    K_sq = [3 * c2 for c2 in accepted]
    trace.append(
        "every accepted K^2 is a multiple of 9: "
        + str(all(k % 9 == 0 for k in K_sq))
    )
    return Evaluation({"c2": accepted, "K_sq": K_sq}, trace)


@register_calculator("surface.noether")
def noether_chi(c1_sq=9, c2=3) -> Evaluation:
    c1_sq, c2 = Fraction(c1_sq), Fraction(c2)
    chi = (c1_sq + c2) / 12
    surf = SurfaceInvariants(c1_sq, c2, chi)
    trace = [f"12·chi(O) = c1^2 + c2 = {c1_sq} + {c2} = {12 * surf.chi_O}"]
    trace.append(f"chi(O) = {surf.chi_O}")
    return Evaluation(surf.chi_O, trace)


@register_calculator("surface.adjoint_h0")
def adjoint_h0() -> Evaluation:
    """h⁰(K + H + τ) on a fake projective plane with K ≡ 3H."""
    surf = fake_projective_plane_invariants()
    lattice = hyperplane_lattice()
    H = lattice.basis_class("H")
    K = 3 * H
    D = PolarizedDivisor(K + H, TorsionClass("tau"))
    chi = riemann_roch_chi(surf, D, K)
    h0 = h0_from_chi(chi, KAWAMATA_VIEHWEG)
    trace = [
        "H^2 = 1, K = 3H, tau torsion (numerically trivial)",
        f"chi(K+H+tau) = chi(O) + (K+H+tau)·(H+tau)/2 = {surf.chi_O} + "
        f"{pair(K + H, H)}/2 = {chi}",
        f"h1 = h2 = 0 by {h0.axiom.name}: h0 = {h0.value}",
    ]
    return Evaluation(h0.value, trace)


@register_calculator("surface.monomial_bound")
def monomial_bound(sections: int = 2, power: int = 4) -> Evaluation:
    """Two sections of H + τ would give too many sections of 4(H + τ)."""
    count = monomial_section_bound(sections, power)
    h0 = adjoint_h0().value
    trace = [
        f"{sections} independent sections of H+tau give C({sections}+{power}-1, "
        f"{power}) = {count} independent monomials of degree {power}",
        f"4(H+tau) = K+H+tau-sigma has h0 = {h0}",
        f"{count} > {h0}: h0(H+tau) <= 1",
    ]
    return Evaluation(
        {"monomials": count, "h0": h0, "contradiction": count > h0}, trace
    )


@register_calculator("surface.bicanonical_h0")
def bicanonical_h0(multiple: int = 2) -> Evaluation:
    """h⁰(mK) on a smooth surface with K² = 9, χ = 1."""
    surf = ball_quotient_invariants(3)
    K = 3 * hyperplane_lattice().basis_class("H")
    chi = riemann_roch_chi(surf, multiple * K, K)
    h0 = h0_from_chi(chi, KAWAMATA_VIEHWEG)
    trace = [
        f"chi({multiple}K) = chi(O) + {multiple}K·({multiple}K - K)/2 "
        f"= {surf.chi_O} + {multiple * (multiple - 1)}·{pair(K, K)}/2 = {chi}",
        f"h1 = h2 = 0 by {h0.axiom.name}: h0 = {h0.value}",
    ]
    return Evaluation(h0.value, trace)


@register_calculator("surface.type_ii_self_intersection")
def type_ii_self_intersection() -> Evaluation:
    """B ≡ K/3 in case (ii); a pencil would need B² = 0."""
    K = 3 * hyperplane_lattice().basis_class("H")
    B = K / 3
    value = pair(B, B)
    trace = [f"B = K/3: B·B = K·K/9 = {pair(K, K)}/9 = {value} != 0"]
    return Evaluation(value, trace)


@register_calculator("surface.genus_two_pencil")
def genus_two_pencil(B_sq=0, K_dot_B=2) -> Evaluation:
    """Fibers of a case (i) pencil have genus 2; singular fibers are excluded."""
    p_a = arithmetic_genus_from_numbers(B_sq, K_dot_B)
    low = [g for g in (0, 1) if exclude_low_genus(Fraction(g)) is not None]
    trace = [
        f"p_a(B) = 1 + (B·B + K·B)/2 = 1 + ({B_sq} + {K_dot_B})/2 = {p_a}",
        "a singular fiber exists; after semi-stable reduction its components "
        "have genus 0 or 1",
        f"genera excluded by hyperbolicity: {low}",
    ]
    return Evaluation(
        {"p_a": p_a, "low_genus_excluded": low == [0, 1]}, trace
    )


@register_calculator("surface.separation_degree")
def separation_degree() -> Evaluation:
    """deg([p] + [q] − 2B − τ) on B for B ≡ K/3."""
    K = 3 * hyperplane_lattice().basis_class("H")
    B = K / 3
    two_B_on_B = restriction_degree(2 * B, B)
    value = 2 - two_B_on_B
    trace = [
        f"deg(2B|_B) = 2 B·B = {two_B_on_B}, deg(tau|_B) = 0",
        f"deg([p] + [q] - 2B - tau) = 2 - {two_B_on_B} = {value}",
    ]
    return Evaluation(value, trace)


@register_calculator("surface.euler_number_three")
def euler_number_three(max_q: int = 3) -> Evaluation:
    """c₂ = 3 forces χ(O) = 1 and so p_g = q."""
    base = ball_quotient_invariants(3)
    admitted = []
    trace = [f"c2 = 3: c1^2 = {base.c1_sq}, chi(O) = {base.chi_O}"]
    for q in range(0, max_q + 1):
        for p_g in range(0, max_q + 1):
            try:
                SurfaceInvariants(base.c1_sq, base.c2, base.chi_O, q=q, p_g=p_g)
            except BallqError:
                continue
            admitted.append([q, p_g])
    trace.append(f"(q, p_g) with chi = 1 - q + p_g: {admitted}")
    trace.append("q = p_g in {0, 1}: fake projective planes and the q = 1 surface")
    return Evaluation(
        {"chi": base.chi_O, "p_g_equals_q": all(q == p for q, p in admitted)},
        trace,
    )
