"""Chern number bookkeeping for smooth and Q-Gorenstein surfaces."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..common.rational import RationalLike, parse_rational
from ..errors.exceptions import InvariantViolationError, ValidationError


@dataclass(frozen=True)
class SurfaceInvariants:
    """c₁², c₂, χ(O), and when known q and p_g.

    Smooth surfaces are checked against Noether's formula on construction.
    """

    c1_sq: Fraction
    c2: Fraction
    chi_O: Fraction
    q: Optional[int] = None
    p_g: Optional[int] = None
    smooth: bool = True

    def __post_init__(self):
        for name in ("c1_sq", "c2", "chi_O"):
            object.__setattr__(self, name, parse_rational(getattr(self, name)))

        if self.smooth and not noether_holds(self):
            raise InvariantViolationError(
                "Noether's formula 12·χ(O) = c₁² + c₂ fails",
                invariant="noether",
                value=f"12*{self.chi_O} != {self.c1_sq} + {self.c2}",
            )
        if self.q is not None and self.p_g is not None:
            if self.chi_O != 1 - self.q + self.p_g:
                raise InvariantViolationError(
                    "χ(O) = 1 − q + p_g fails",
                    invariant="euler_characteristic",
                    value=f"{self.chi_O} != 1 - {self.q} + {self.p_g}",
                )

    @property
    def K_sq(self) -> Fraction:
        return self.c1_sq


def noether_holds(surf: SurfaceInvariants) -> bool:
    return 12 * surf.chi_O == surf.c1_sq + surf.c2


def ball_quotient_invariants(c2: int) -> SurfaceInvariants:
    """Invariants of a smooth compact ball quotient with Euler number c2.

    Equality in the Miyaoka–Yau inequality gives c₁² = 3c₂; integrality of
    χ(O) = c₂/3 then forces c₂ ∈ 3Z and c₁² ∈ 9Z.
    """
    if isinstance(c2, bool) or not isinstance(c2, int) or c2 <= 0:
        raise ValidationError(
            "c2 must be a positive integer", field="c2", value=c2, constraint="> 0"
        )
    if c2 % 3:
        raise InvariantViolationError(
            "c2 of a ball quotient must be a multiple of 3",
            invariant="c2_multiple_of_3",
            value=c2,
        )
    c1_sq = 3 * c2
    chi_O = Fraction(c1_sq + c2, 12)
    if chi_O.denominator != 1:
        raise InvariantViolationError(
            "χ(O) is not an integer", invariant="chi_integral", value=chi_O
        )
    return SurfaceInvariants(c1_sq=Fraction(c1_sq), c2=Fraction(c2), chi_O=chi_O)


def fake_projective_plane_invariants() -> SurfaceInvariants:
    """c₂ = 3, q = p_g = 0."""
    base = ball_quotient_invariants(3)
    return SurfaceInvariants(base.c1_sq, base.c2, base.chi_O, q=0, p_g=0)


def singular_surface_invariants(
    K_sq: RationalLike, euler_number: RationalLike, chi_O: RationalLike
) -> SurfaceInvariants:
    """Invariants of a normal surface with quotient singularities.

    No Noether check: K² may be fractional and e is the topological Euler
    number of the singular surface.
    """
    return SurfaceInvariants(
        c1_sq=parse_rational(K_sq),
        c2=parse_rational(euler_number),
        chi_O=parse_rational(chi_O),
        smooth=False,
    )
