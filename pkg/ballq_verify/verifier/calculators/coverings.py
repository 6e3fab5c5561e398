"""Riemann–Hurwitz, degree splitting and intersection budget checks."""

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from ...coverings.budget import branch_self_intersection, budget_check
from ...coverings.hurwitz import (
    admissible_multiplicities,
    degree_splittings,
    riemann_hurwitz_solutions,
)
from ..registry import Evaluation, register_calculator


@register_calculator("coverings.riemann_hurwitz")
def coverings_riemann_hurwitz(
    g_up: int,
    degree: int,
    allowed_b: Iterable[int],
    max_points: Optional[int] = None,
) -> Evaluation:
    solutions = riemann_hurwitz_solutions(g_up, degree, allowed_b, max_points)
    bound = f", l <= {max_points}" if max_points is not None else ""
    trace = [
        f"2({g_up} - 1) = {degree}·2(g - 1) + sum b_i, "
        f"b_i in {sorted(allowed_b)}{bound}"
    ]
    for s in solutions:
        trace.append(
            f"g = {s.g_down}, l = {s.l}, b = {list(s.branch_orders)}: "
            f"{2 * (g_up - 1)} = {degree * 2 * (s.g_down - 1)} + "
            f"{sum(s.branch_orders)}"
        )
    return Evaluation([s.to_dict() for s in solutions], trace)


@register_calculator("coverings.degree_splittings")
def coverings_degree_splittings(total: int) -> Evaluation:
    splits = degree_splittings(total)
    trace = [f"d·k = {total}: " + ", ".join(f"{d}·{k}" for d, k in splits)]
    return Evaluation([list(pair) for pair in splits], trace)


@register_calculator("coverings.multiplicity_filter")
def coverings_multiplicity_filter(
    total: int = 21, denominator: int = 7, max_correction: int = 3
) -> Evaluation:
    """k with k/denominator − a integral for an integer correction a."""
    corrections = range(0, max_correction + 1)
    admitted = sorted(admissible_multiplicities(total, denominator, corrections))
    trace = []
    for _, k in degree_splittings(total):
        verdict = "kept" if k in admitted else "not an integer"
        trace.append(
            f"k = {k}: k/{denominator} - a_3 = {Fraction(k, denominator)} - a_3 "
            f"-> {verdict}"
        )
    return Evaluation(admitted, trace)


@register_calculator("coverings.budget")
def coverings_budget(total, contributions: Sequence[Sequence]) -> Evaluation:
    check = budget_check(total, [(label, value) for label, value in contributions])
    trace = [check.describe()]
    return Evaluation(
        {"demand": check.demand, "total": check.total, "feasible": check.feasible},
        trace,
    )


@register_calculator("coverings.branch_budget")
def coverings_branch_budget(
    total, smooth_part, branches: Sequence[int]
) -> Evaluation:
    """Smooth part plus pairwise meetings of local branches against a total."""
    local = [branch_self_intersection(b) for b in branches]
    contributions = [("smooth part", smooth_part)] + [
        (f"C({b},2)", c) for b, c in zip(branches, local)
    ]
    check = budget_check(total, contributions)
    trace = [
        " + ".join(f"C({b},2)" for b in branches)
        + " = "
        + " + ".join(str(c) for c in local)
        + f" = {sum(local)}",
        check.describe(),
    ]
    return Evaluation(
        {
            "local": sum(local),
            "demand": check.demand,
            "total": check.total,
            "feasible": check.feasible,
        },
        trace,
    )
