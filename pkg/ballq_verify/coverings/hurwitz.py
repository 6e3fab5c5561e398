"""
Riemann–Hurwitz enumeration for branched coverings of curves.

For a degree-d map from a curve of genus g_up onto one of genus g_down,
2(g_up − 1) = d·2(g_down − 1) + Σ b_i, summed over ramification points
with b_i > 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import divisors

from ..errors.exceptions import InvariantViolationError, ValidationError
from ..log_config.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class RamificationSolution:
    g_up: int
    degree: int
    g_down: int
    branch_orders: Tuple[int, ...]

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.branch_orders)

    def satisfies(self) -> bool:
        lhs = 2 * (self.g_up - 1)
        rhs = self.degree * 2 * (self.g_down - 1) + sum(self.branch_orders)
        return lhs == rhs and self.g_down >= 0

    def to_dict(self) -> dict:
        return {
            "g_down": self.g_down,
            "l": self.l,
            "branch_orders": list(self.branch_orders),
        }


def _multisets(
    target: int, values: Sequence[int], max_size: Optional[int]
) -> Iterator[Tuple[int, ...]]:
    """Nondecreasing tuples drawn from ``values`` that sum to ``target``."""

    def walk(remaining: int, start: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if max_size is not None and len(prefix) >= max_size:
            return
        for i in range(start, len(values)):
            b = values[i]
            if b > remaining:
                break
            yield from walk(remaining - b, i, prefix + (b,))

    yield from walk(target, 0, ())


def riemann_hurwitz_solutions(
    g_up: int,
    degree: int,
    allowed_b: Iterable[int],
    max_points: Optional[int] = None,
) -> List[RamificationSolution]:
    """Every (g_down, branch multiset) solving the Riemann–Hurwitz identity.

    Ordered by g_down descending, then l ascending, then the sorted orders.
    ``max_points`` bounds the number of ramification points when the
    geometry caps it (for instance by the number of fixed points).
    """
    if g_up < 0:
        raise ValidationError("g_up must be nonnegative", field="g_up", value=g_up)
    if degree < 1:
        raise ValidationError(
            "degree must be positive", field="degree", value=degree, constraint=">= 1"
        )
    values = sorted({int(b) for b in allowed_b})
    if any(b < 1 for b in values):
        raise ValidationError(
            "Ramification orders must be positive",
            field="allowed_b",
            value=values,
            constraint=">= 1",
        )

    lhs = 2 * (g_up - 1)
    solutions: List[RamificationSolution] = []
    g_down = 0
    while degree * 2 * (g_down - 1) <= lhs:
        remainder = lhs - degree * 2 * (g_down - 1)
        for orders in _multisets(remainder, values, max_points):
            solutions.append(RamificationSolution(g_up, degree, g_down, orders))
        g_down += 1

    solutions.sort(key=lambda s: (-s.g_down, s.l, s.branch_orders))
    for solution in solutions:
        if not solution.satisfies():
            raise InvariantViolationError(
                "Riemann–Hurwitz identity fails on substitution",
                invariant="riemann_hurwitz",
                value=solution,
            )
    logger.debug(
        "Riemann-Hurwitz enumeration",
        g_up=g_up,
        degree=degree,
        allowed_b=values,
        solutions=len(solutions),
    )
    return solutions


def degree_splittings(total: int) -> List[Tuple[int, int]]:
    """Ordered factorizations d·k = total, by ascending d."""
    if total < 1:
        raise ValidationError(
            "total must be positive", field="total", value=total, constraint=">= 1"
        )
    return [(int(d), total // int(d)) for d in divisors(total)]


def divisibility_filter(value, modulus: int = 1) -> bool:
    """True when value / modulus is an integer."""
    if modulus == 0:
        raise ValidationError("modulus must be nonzero", field="modulus", value=0)
    return (Fraction(value) / modulus).denominator == 1


def admissible_multiplicities(
    total: int, denominator: int, correction_range: Iterable[int] = range(0, 4)
) -> List[int]:
    """k from the splittings of ``total`` with k/denominator − a integral.

    ``a`` ranges over ``correction_range``.
    """
    corrections = list(correction_range)
    return [
        k
        for _, k in degree_splittings(total)
        if any(divisibility_filter(Fraction(k, denominator) - a) for a in corrections)
    ]
