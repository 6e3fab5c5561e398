"""Surface invariants, Riemann–Roch and adjunction arithmetic."""

from .calculus import (
    KAWAMATA_VIEHWEG,
    H0Value,
    VanishingAssumption,
    arithmetic_genus,
    arithmetic_genus_from_numbers,
    h0_from_chi,
    monomial_section_bound,
    restriction_degree,
    riemann_roch_chi,
)
from .invariants import (
    SurfaceInvariants,
    ball_quotient_invariants,
    fake_projective_plane_invariants,
    noether_holds,
    singular_surface_invariants,
)
from .torsion import PolarizedDivisor, TorsionClass, pair_polarized

__all__ = [
    "KAWAMATA_VIEHWEG",
    "H0Value",
    "VanishingAssumption",
    "arithmetic_genus",
    "arithmetic_genus_from_numbers",
    "h0_from_chi",
    "monomial_section_bound",
    "restriction_degree",
    "riemann_roch_chi",
    "SurfaceInvariants",
    "ball_quotient_invariants",
    "fake_projective_plane_invariants",
    "noether_holds",
    "singular_surface_invariants",
    "PolarizedDivisor",
    "TorsionClass",
    "pair_polarized",
]
