"""
Numerical destabilization cases for Reider's method.

If 2K fails to separate a 0-cycle Z, the rank-2 extension
0 → O → E → I_Z ⊗ K → 0 is Bogomolov unstable and splits off L, B with
K ≡ L + B. The integers d1 = K·L, d2 = K·B, δ = L·B and deg W are then
constrained by

    δ + deg W = deg Z,   K² − 4δ > 4·deg W,   d1 + d2 = K²,
    d1 > d2 > 0,         Δ = d1·d2 − δ·(d1 + d2) ≤ 0,

and adjunction (K + B)·B = δ + 2B² forces δ to be even.
"""

from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, List, Optional

from ..errors.exceptions import InvariantViolationError, ValidationError
from ..log_config.logger import get_logger

logger = get_logger(__name__)

Exclusion = Callable[[Fraction], Optional[str]]


class CaseTag(str, Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    REJECTED = "Rejected"


@dataclass(frozen=True)
class ExtensionData:
    """Chern data c₁(E)² = K² and c₂(E) = deg Z of the extension."""

    c1_sq: Fraction
    c2: int


@dataclass(frozen=True)
class ReiderCandidate:
    d1: int
    d2: int
    delta: int
    deg_W: int
    B_sq: Fraction
    p_a: Fraction
    case_tag: CaseTag
    reason: Optional[str] = None

    @property
    def hodge_delta(self) -> int:
        return hodge_delta(self.d1, self.d2, self.delta)

    @property
    def survives(self) -> bool:
        return self.case_tag is not CaseTag.REJECTED

    def to_dict(self) -> dict:
        data = asdict(self)
        data["case_tag"] = self.case_tag.value
        return data


def bogomolov_unstable(ext: ExtensionData) -> bool:
    return Fraction(ext.c1_sq) - 4 * ext.c2 >= 1


def hodge_delta(d1: int, d2: int, delta: int) -> int:
    """Δ = d1·d2 − δ·(d1 + d2); Hodge index needs Δ ≤ 0."""
    return d1 * d2 - delta * (d1 + d2)


def exclude_low_genus(p_a: Fraction) -> Optional[str]:
    """Ball quotients are hyperbolic: no curve of genus ≤ 1."""
    if p_a <= 1:
        return "hyperbolicity: p_a(B) <= 1"
    return None


def _check_candidate(K_sq: int, deg_Z: int, cand: ReiderCandidate) -> None:
    failures = []
    if cand.d1 + cand.d2 != K_sq:
        failures.append("d1 + d2 = K^2")
    if cand.delta + cand.deg_W != deg_Z:
        failures.append("delta + deg W = deg Z")
    if not cand.d1 > cand.d2 > 0:
        failures.append("d1 > d2 > 0")
    if K_sq - 4 * cand.delta <= 4 * cand.deg_W:
        failures.append("K^2 - 4 delta > 4 deg W")
    if cand.hodge_delta > 0:
        failures.append("Delta <= 0")
    if cand.survives and cand.delta % 2:
        failures.append("delta even")
    if failures:
        raise InvariantViolationError(
            "Emitted candidate violates its defining constraints",
            invariant=", ".join(failures),
            value=cand,
        )


def enumerate_destabilizations(
    K_sq: int,
    deg_Z: int,
    *,
    exclusion: Optional[Exclusion] = exclude_low_genus,
    include_rejected: bool = False,
) -> List[ReiderCandidate]:
    """All numerical cases (d1, d2, δ, deg W) surviving the filters.

    Ordered by ascending d2, then δ. ``exclusion=None`` turns off the
    hyperbolicity filter; ``include_rejected`` keeps filtered candidates
    tagged ``Rejected`` with a reason. An empty result means 2K separates
    Z at the numerical level.
    """
    for name, value in (("K_sq", K_sq), ("deg_Z", deg_Z)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ValidationError(
                f"{name} must be a positive integer",
                field=name,
                value=value,
                constraint=">= 1",
            )

    candidates: List[ReiderCandidate] = []
    d2 = 1
    while d2 < K_sq - d2:
        d1 = K_sq - d2
        for delta in range(1, deg_Z + 1):
            deg_W = deg_Z - delta
            if K_sq - 4 * delta <= 4 * deg_W:
                continue
            delta_h = hodge_delta(d1, d2, delta)
            if delta_h > 0:
                continue

            B_sq = Fraction(d2 - delta)
            p_a = 1 + (B_sq + d2) / 2

            reason = None
            if delta % 2:
                reason = "parity: delta must be even"
            elif exclusion is not None:
                reason = exclusion(p_a)

            if reason is not None:
                logger.debug(
                    "Candidate rejected", d1=d1, d2=d2, delta=delta, reason=reason
                )
                if not include_rejected:
                    continue
                tag = CaseTag.REJECTED
            else:
                tag = CaseTag.CASE_II if delta_h == 0 else CaseTag.CASE_I

            cand = ReiderCandidate(d1, d2, delta, deg_W, B_sq, p_a, tag, reason)
            _check_candidate(K_sq, deg_Z, cand)
            candidates.append(cand)
        d2 += 1

    return candidates


def surviving(candidates: List[ReiderCandidate]) -> List[ReiderCandidate]:
    return [c for c in candidates if c.survives]
