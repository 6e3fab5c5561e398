"""Intersection budgets: local multiplicities against a global intersection number."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, List, Tuple

from ..common.rational import RationalLike, parse_rational
from ..errors.exceptions import ValidationError


@dataclass(frozen=True)
class BudgetCheck:
    total: Fraction
    contributions: Tuple[Tuple[str, Fraction], ...]
    feasible: bool

    @property
    def demand(self) -> Fraction:
        return sum((c for _, c in self.contributions), Fraction(0))

    @property
    def excess(self) -> Fraction:
        return self.demand - self.total

    def describe(self) -> str:
        parts = " + ".join(f"{label}={value}" for label, value in self.contributions)
        relation = "<=" if self.feasible else ">"
        return f"{parts or '0'} = {self.demand} {relation} {self.total}"


def budget_check(
    total: RationalLike, contributions: Iterable[Tuple[str, RationalLike]]
) -> BudgetCheck:
    """Feasible iff the contributions fit inside the total."""
    items: List[Tuple[str, Fraction]] = [
        (str(label), parse_rational(value)) for label, value in contributions
    ]
    limit = parse_rational(total)
    demand = sum((v for _, v in items), Fraction(0))
    return BudgetCheck(
        total=limit, contributions=tuple(items), feasible=demand <= limit
    )


def branch_self_intersection(branches: int) -> int:
    """C(branches, 2): pairwise meetings of distinct local branches."""
    if branches < 0:
        raise ValidationError(
            "branches must be nonnegative",
            field="branches",
            value=branches,
            constraint=">= 0",
        )
    return comb(branches, 2)
