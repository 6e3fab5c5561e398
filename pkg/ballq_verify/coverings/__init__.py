"""Riemann–Hurwitz enumeration and intersection budgets."""

from .budget import BudgetCheck, branch_self_intersection, budget_check
from .hurwitz import (
    RamificationSolution,
    admissible_multiplicities,
    degree_splittings,
    divisibility_filter,
    riemann_hurwitz_solutions,
)

__all__ = [
    "BudgetCheck",
    "branch_self_intersection",
    "budget_check",
    "RamificationSolution",
    "admissible_multiplicities",
    "degree_splittings",
    "divisibility_filter",
    "riemann_hurwitz_solutions",
]
