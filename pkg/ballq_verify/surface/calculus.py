"""
Riemann–Roch, adjunction and restriction bookkeeping on a surface.

None of these functions compute cohomology. ``riemann_roch_chi`` returns an
Euler characteristic; turning it into h⁰ requires an explicit
``VanishingAssumption`` so the axiom shows up in reports.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors.exceptions import AxiomRequiredError, ValidationError
from ..lattice.intersection import pair
from .invariants import SurfaceInvariants
from .torsion import Divisorial, numerical_part


@dataclass(frozen=True)
class VanishingAssumption:
    """A cited vanishing theorem assumed to kill h¹ and h²."""

    name: str
    citation: str


@dataclass(frozen=True)
class H0Value:
    value: Fraction
    axiom: VanishingAssumption


KAWAMATA_VIEHWEG = VanishingAssumption(
    name="vanishing",
    citation=(
        "Kodaira / Kawamata–Viehweg vanishing: h^i(K + N) = 0 for i > 0 "
        "when N is nef and big; Serre duality handles h^2"
    ),
)


def riemann_roch_chi(
    surf: SurfaceInvariants, divisor: Divisorial, K: Divisorial
) -> Fraction:
    """χ(D) = χ(O) + ½·D·(D − K). Torsion twists do not change it."""
    D = numerical_part(divisor)
    canonical = numerical_part(K)
    return surf.chi_O + pair(D, D - canonical) / 2


def h0_from_chi(chi: Fraction, vanishing: VanishingAssumption = None) -> H0Value:
    """h⁰ = χ once higher cohomology is assumed to vanish."""
    if vanishing is None:
        raise AxiomRequiredError(
            "h0 requires an explicit vanishing assumption",
            {"chi": str(chi)},
        )
    return H0Value(value=Fraction(chi), axiom=vanishing)


def arithmetic_genus(divisor: Divisorial, K: Divisorial) -> Fraction:
    """p_a = 1 + ½·D·(K + D).

    A non-integral result is returned as is: it certifies that no curve has
    this class.
    """
    D = numerical_part(divisor)
    return 1 + pair(D, numerical_part(K) + D) / 2


def arithmetic_genus_from_numbers(self_intersection, canonical_degree) -> Fraction:
    """p_a from B² and K·B directly."""
    return 1 + (Fraction(self_intersection) + Fraction(canonical_degree)) / 2


def monomial_section_bound(h0_of_L: int, power: int) -> int:
    """Lower bound C(h + p − 1, p) for h⁰(pL).

    Monomials of degree ``power`` in ``h0_of_L`` independent sections have
    distinct vanishing orders along the first section's divisor.
    """
    if h0_of_L < 1 or power < 1:
        raise ValidationError(
            "monomial_section_bound needs positive arguments",
            field="h0_of_L" if h0_of_L < 1 else "power",
            value=h0_of_L if h0_of_L < 1 else power,
            constraint=">= 1",
        )
    return comb(h0_of_L + power - 1, power)


def restriction_degree(
    divisor: Divisorial, curve: Divisorial, point_contributions: int = 0
) -> Fraction:
    """deg(D|_B) = D·B plus integer point classes living on B."""
    return pair(numerical_part(divisor), numerical_part(curve)) + point_contributions
