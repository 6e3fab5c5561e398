"""
Hirzebruch–Jung resolution of cyclic quotient singularities 1/n(1, q).

The exceptional divisor is a chain of smooth rational curves S_1..S_r with
S_i² = −b_i, where n/q = b_1 − 1/(b_2 − 1/(⋯ − 1/b_r)). Discrepancies follow
the convention τ*K_X = K_X̂ + Σ a_i S_i.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from ..errors.exceptions import InvariantViolationError, ValidationError
from ..lattice.linalg import (
    Gram,
    is_negative_definite,
    quadratic_form,
    solve_exact,
    tridiagonal,
)


class Orientation(str, Enum):
    HJ = "hj"
    REVERSED = "reversed"


class ProperTransformMode(str, Enum):
    """How the coefficients of τ*C − Ĉ are obtained.

    STANDARD solves the total-transform condition τ*C·S_j = 0 for every j.
    PER_CURVE uses a_j = −Ĉ·S_j / S_j² curve by curve, ignoring the
    coupling between neighbours in the chain. "paper" is accepted as an
    alias for PER_CURVE, the formula the printed values are computed with.
    """

    STANDARD = "standard"
    PER_CURVE = "per-curve"

    @classmethod
    def _missing_(cls, value):
        if isinstance(value, str) and value.lower() in ("paper", "per_curve"):
            return cls.PER_CURVE
        return None


@dataclass(frozen=True)
class CyclicSingularity:
    n: int
    q: int

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError(
                "n must be at least 2", field="n", value=self.n, constraint=">= 2"
            )
        if not 1 <= self.q < self.n:
            raise ValidationError(
                "q must satisfy 1 <= q < n",
                field="q",
                value=self.q,
                constraint="1<=q<n",
            )
        if gcd(self.n, self.q) != 1:
            raise ValidationError(
                "n and q must be coprime",
                field="q",
                value=self.q,
                constraint="gcd(n,q)=1",
            )

    def __str__(self) -> str:
        return f"1/{self.n}(1,{self.q})"


def hj_expand(sing: CyclicSingularity) -> List[int]:
    """Continued fraction [b_1, ..., b_r] of n/q with every b_i ≥ 2."""
    n, q = sing.n, sing.q
    out = []
    while q:
        b = -(-n // q)
        out.append(b)
        n, q = q, b * q - n
    return out


def evaluate_continued_fraction(bs: Sequence[int]) -> Fraction:
    """Evaluate b_1 − 1/(b_2 − 1/(⋯ − 1/b_r))."""
    if not bs:
        raise ValidationError("Empty continued fraction", field="bs")
    value = Fraction(bs[-1])
    for b in reversed(bs[:-1]):
        value = b - 1 / value
    return value


@dataclass(frozen=True)
class ExceptionalChain:
    """Self-intersections of a resolution chain, in a fixed orientation."""

    self_intersections: Tuple[int, ...]
    orientation: Orientation = Orientation.HJ

    def __post_init__(self):
        object.__setattr__(self, "self_intersections", tuple(self.self_intersections))
        if not self.self_intersections:
            raise ValidationError("A chain needs at least one curve", field="chain")
        for s in self.self_intersections:
            if s > -2:
                raise ValidationError(
                    "Chain self-intersections must be <= -2",
                    field="self_intersections",
                    value=s,
                    constraint="<= -2",
                )

    @classmethod
    def from_singularity(
        cls, sing: CyclicSingularity, orientation: Orientation = Orientation.HJ
    ) -> "ExceptionalChain":
        chain = cls(tuple(-b for b in hj_expand(sing)))
        return chain.reversed() if orientation == Orientation.REVERSED else chain

    def reversed(self) -> "ExceptionalChain":
        if self.orientation == Orientation.HJ:
            flipped = Orientation.REVERSED
        else:
            flipped = Orientation.HJ
        return ExceptionalChain(tuple(reversed(self.self_intersections)), flipped)

    def __len__(self) -> int:
        return len(self.self_intersections)

    @property
    def gram(self) -> Gram:
        return tridiagonal(self.self_intersections)

    @property
    def discrepancies(self) -> Tuple[Fraction, ...]:
        return discrepancies(self)

    def continued_fraction(self) -> Fraction:
        return evaluate_continued_fraction([-s for s in self.self_intersections])

    def is_du_val(self) -> bool:
        return all(s == -2 for s in self.self_intersections)


def discrepancies(chain: ExceptionalChain) -> Tuple[Fraction, ...]:
    """Solve Σ a_i S_i·S_j = 2 + S_j² for every j.

    Adjunction on a smooth rational curve gives K_X̂·S_j = −2 − S_j², and
    τ*K_X·S_j = 0.
    """
    if not is_negative_definite(chain.gram):
        raise InvariantViolationError(
            "Exceptional chain is not negative definite",
            invariant="negative_definite",
            value=chain.self_intersections,
        )
    rhs = [2 + s for s in chain.self_intersections]
    solution = solve_exact(chain.gram, rhs)
    for a in solution:
        if not 0 <= a < 1:
            raise InvariantViolationError(
                "Discrepancy outside [0, 1)", invariant="discrepancy_range", value=a
            )
    return solution


def discrepancy_correction(chain: ExceptionalChain) -> Fraction:
    """aᵀ·G·a, the (non-positive) change of K² under the resolution."""
    return quadratic_form(chain.gram, discrepancies(chain))


def resolution_invariants(
    K_X_sq, e_X, sings: Sequence[CyclicSingularity]
) -> Tuple[Fraction, Fraction]:
    """K² and c₂ of the minimal resolution.

    K_X̂² = K_X² + Σ aᵀGa over the singular points; c₂(X̂) = e(X) plus one
    for every exceptional curve.
    """
    K_hat_sq = Fraction(K_X_sq)
    c2_hat = Fraction(e_X)
    for sing in sings:
        chain = ExceptionalChain.from_singularity(sing)
        K_hat_sq += discrepancy_correction(chain)
        c2_hat += len(chain)
    return K_hat_sq, c2_hat


def proper_transform_coeffs(
    chain: ExceptionalChain,
    meets: Sequence,
    mode: ProperTransformMode = ProperTransformMode.STANDARD,
) -> Tuple[Fraction, ...]:
    """Coefficients a_j with τ*C = Ĉ + Σ a_j S_j.

    ``meets`` lists Ĉ·S_j for every curve in the chain.
    """
    meets = tuple(Fraction(m) for m in meets)
    if len(meets) != len(chain):
        raise ValidationError(
            "One intersection multiplicity per chain curve is required",
            field="meets",
            value=len(meets),
            constraint=f"== {len(chain)}",
        )
    if any(m < 0 for m in meets):
        raise ValidationError(
            "Intersection multiplicities must be nonnegative",
            field="meets",
            constraint=">= 0",
        )

    mode = ProperTransformMode(mode)
    if mode == ProperTransformMode.PER_CURVE:
        return tuple(-m / s for m, s in zip(meets, chain.self_intersections))
    return solve_exact(chain.gram, [-m for m in meets])


def correction_term(chain: ExceptionalChain, coeffs: Sequence[Fraction]) -> Fraction:
    """(Σ a_j S_j)², the change of the self-intersection number."""
    return quadratic_form(chain.gram, [Fraction(a) for a in coeffs])


def per_curve_correction(
    chain: ExceptionalChain, coeffs: Sequence[Fraction]
) -> Fraction:
    """Σ a_j² S_j², dropping the cross terms between neighbouring curves."""
    return sum(
        (Fraction(a) ** 2 * s for a, s in zip(coeffs, chain.self_intersections)),
        Fraction(0),
    )
