"""
Replays of the adjunction arguments on quotient surfaces X = M/G.

Both replays compute 2(g(Ĉ) − 1) = K_X̂·Ĉ + Ĉ² for the proper transform Ĉ
of a quotient curve through A₂ points, once with the total-transform
coefficients and once with the per-curve formula a = −Ĉ·E/E².
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from ..common.axioms import cite
from ..common.results import CheckResult, Provenance, build_result
from ..coverings.hurwitz import riemann_hurwitz_solutions
from ..errors.exceptions import ValidationError
from ..lattice.linalg import Gram, block_diagonal, is_negative_definite
from ..log_config.logger import get_logger
from ..surface.calculus import arithmetic_genus_from_numbers
from .hirzebruch_jung import (
    CyclicSingularity,
    ExceptionalChain,
    Orientation,
    ProperTransformMode,
    correction_term,
    per_curve_correction,
    proper_transform_coeffs,
)

logger = get_logger(__name__)

A2 = CyclicSingularity(3, 2)
SEVENTH = CyclicSingularity(7, 3)

# B ⊂ M with B² = 1 and K_M ≡ 3B, covering C ⊂ X = M/Z₃ with degree 3
B_SQ = Fraction(1)
K_DOT_B = Fraction(3)
GROUP_ORDER = 3
# Ĉ meets only the first curve of each A₂ chain it passes through
A2_MEETS = (1, 0)

QUOTIENT_AXIOMS = ["classification", "hyperbolicity"]

QUOTIENT_CURVE_ANCHOR = (
    "elliptic quotient curve through two A2 points: 2(g-1) = 1 > 0 contradicts g = 1"
)
INTEGRALITY_ANCHOR = "degree-21 quotient, a_3 = 0: adjunction value is not an integer"


def _slug(mode: ProperTransformMode) -> str:
    return mode.value.replace("-", "_")


@dataclass(frozen=True)
class QuotientCurveReplay:
    mode: ProperTransformMode
    points_met: int
    genus_B: Fraction
    genus_C: int
    ramification_points: int
    K_dot_C: Fraction
    C_sq: Fraction
    coeffs: Tuple[Fraction, ...]
    correction_per_point: Fraction
    C_hat_sq: Fraction
    value: Fraction
    trace: List[str] = field(default_factory=list)

    @property
    def contradiction(self) -> bool:
        """g(Ĉ) = g(C) forces 2(g(Ĉ) − 1) = 2(g(C) − 1)."""
        return self.value != 2 * (self.genus_C - 1)


def _point_correction(
    chain: ExceptionalChain, mode: ProperTransformMode
) -> Tuple[Tuple[Fraction, ...], Fraction]:
    coeffs = proper_transform_coeffs(chain, A2_MEETS, mode)
    if mode == ProperTransformMode.PER_CURVE:
        return coeffs, per_curve_correction(chain, coeffs)
    return coeffs, correction_term(chain, coeffs)


def quotient_curve_replay(
    mode: ProperTransformMode = ProperTransformMode.STANDARD, points_met: int = 2
) -> QuotientCurveReplay:
    """Order-3 quotient: the elliptic curve C through A₂ points of X."""
    mode = ProperTransformMode(mode)
    if not 0 <= points_met <= 3:
        raise ValidationError(
            "X has three singular points",
            field="points_met",
            value=points_met,
            constraint="0..3",
        )
    trace: List[str] = []

    genus_B = arithmetic_genus_from_numbers(B_SQ, K_DOT_B)
    trace.append(f"g(B) = 1 + (B·B + K·B)/2 = 1 + ({B_SQ} + {K_DOT_B})/2 = {genus_B}")

    solutions = riemann_hurwitz_solutions(
        int(genus_B), GROUP_ORDER, {2}, max_points=3
    )
    solution = solutions[0]
    trace.append(
        f"2({genus_B}-1) = 3·2(g(C)-1) + Σb_i, b_i = 2, l <= 3: "
        + ", ".join(f"g={s.g_down}, l={s.l}" for s in solutions)
    )

    K_dot_C = K_DOT_B / GROUP_ORDER
    trace.append(f"K_X·C = K_M·B/3 = {K_DOT_B}/3 = {K_dot_C}")

    if mode == ProperTransformMode.PER_CURVE:
        C_sq = B_SQ
        trace.append(f"τ*C·τ*C taken as B·B = {C_sq}")
    else:
        C_sq = B_SQ / GROUP_ORDER
        trace.append(f"C·C = B·B/3 = {C_sq}")

    chain = ExceptionalChain.from_singularity(A2)
    coeffs, correction = _point_correction(chain, mode)
    trace.append(
        f"{mode.value} coefficients on E_i1, E_i2: "
        f"({', '.join(str(a) for a in coeffs)}); correction per point {correction}"
    )

    C_hat_sq = C_sq + points_met * correction
    value = K_dot_C + C_hat_sq
    trace.append(f"Ĉ·Ĉ = {C_sq} + {points_met}·({correction}) = {C_hat_sq}")
    trace.append(f"2(g(Ĉ)-1) = K_X·C + Ĉ·Ĉ = {K_dot_C} + {C_hat_sq} = {value}")

    logger.debug(
        "Quotient curve replay", mode=mode.value, points_met=points_met, value=value
    )
    return QuotientCurveReplay(
        mode=mode,
        points_met=points_met,
        genus_B=genus_B,
        genus_C=solution.g_down,
        ramification_points=solution.l,
        K_dot_C=K_dot_C,
        C_sq=C_sq,
        coeffs=coeffs,
        correction_per_point=correction,
        C_hat_sq=C_hat_sq,
        value=value,
        trace=trace,
    )


def replay_quotient_curve_contradiction(
    mode: ProperTransformMode = ProperTransformMode.STANDARD,
    points_met: int = 2,
    *,
    check_id: str = None,
    anchor: str = QUOTIENT_CURVE_ANCHOR,
) -> CheckResult:
    """Compare 2(g(Ĉ) − 1) with the printed contradiction value 1.

    The printed value uses the per-curve coefficients; the standard mode
    is reported as FLAGGED when it differs.
    """
    replay = quotient_curve_replay(mode, points_met)
    if points_met == 2:
        expected, provenance = Fraction(1), Provenance.PAPER
    else:
        # per-curve arithmetic: 1 + 1 − points_met/2
        expected = Fraction(2) - Fraction(points_met, 2)
        provenance = Provenance.DERIVED

    notes = list(replay.trace)
    notes.append(
        "contradiction with g(C)=1 reproduced"
        if replay.contradiction
        else "no contradiction: value equals 2(g(C)-1)"
    )
    notes.append("the ramification count printed as k is l")
    return build_result(
        check_id=check_id or f"quotient_curve.contradiction.{_slug(mode)}",
        scope="singularities",
        paper_anchor=anchor,
        expected=expected,
        provenance=provenance,
        computed=replay.value,
        disputed=mode == ProperTransformMode.STANDARD,
        axioms_used=cite(QUOTIENT_AXIOMS),
        notes=notes,
    )


# Degree-21 quotient, a₃ = 0 branch: C ≡ 7H with H² = 1/21
SEVEN_H_SQ = Fraction(49, 21)
K_HAT_DOT_C_HAT = Fraction(1)


@dataclass(frozen=True)
class IntegralityReplay:
    mode: ProperTransformMode
    values: Dict[int, Fraction]
    trace: List[str]

    @property
    def integral(self) -> List[bool]:
        return [self.values[n].denominator == 1 for n in sorted(self.values)]


def adjunction_integrality_replay(
    mode: ProperTransformMode = ProperTransformMode.STANDARD,
) -> IntegralityReplay:
    """K_X̂·Ĉ + Ĉ² for each branch of 4 = 3·2(g − 1) + Σ b_i with b_i = 2."""
    mode = ProperTransformMode(mode)
    chain = ExceptionalChain.from_singularity(A2)
    coeffs, correction = _point_correction(chain, mode)
    trace = [
        "k = 7, a_3 = 0: K_X̂·Ĉ = k/7 - a_3 = 1",
        f"τ*C·τ*C = 49·H·H = {SEVEN_H_SQ}",
        f"{mode.value} coefficients ({', '.join(str(a) for a in coeffs)}), "
        f"correction per point {correction}",
    ]
    values: Dict[int, Fraction] = {}
    for solution in riemann_hurwitz_solutions(3, 3, {2}):
        value = K_HAT_DOT_C_HAT + SEVEN_H_SQ + solution.l * correction
        values[solution.l] = value
        trace.append(
            f"g={solution.g_down}, l={solution.l}: "
            f"1 + {SEVEN_H_SQ} + {solution.l}·({correction}) = {value}"
        )
    return IntegralityReplay(mode=mode, values=values, trace=trace)


def replay_adjunction_integrality(
    mode: ProperTransformMode = ProperTransformMode.STANDARD,
    *,
    check_id: str = None,
    anchor: str = INTEGRALITY_ANCHOR,
) -> CheckResult:
    """Integrality of the adjunction value on each Riemann–Hurwitz branch.

    The printed claim is that neither branch gives an integer.
    """
    replay = adjunction_integrality_replay(mode)
    return build_result(
        check_id=check_id or f"adjunction.integrality.{_slug(mode)}",
        scope="coverings",
        paper_anchor=anchor,
        expected=[False, False],
        provenance=Provenance.PAPER,
        computed=replay.integral,
        disputed=mode == ProperTransformMode.STANDARD,
        axioms_used=cite(QUOTIENT_AXIOMS),
        notes=replay.trace,
    )


def contracted_configuration_gram() -> Gram:
    """Three A₂ chains and the 1/7(1,3) chain of the degree-21 quotient."""
    a2 = ExceptionalChain.from_singularity(A2).gram
    seventh = ExceptionalChain.from_singularity(SEVENTH, Orientation.REVERSED).gram
    return block_diagonal(a2, a2, a2, seventh)


def contracted_configuration_is_negative_definite() -> bool:
    return is_negative_definite(contracted_configuration_gram())
