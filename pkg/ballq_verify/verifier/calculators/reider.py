"""Reider–Bogomolov enumeration checks."""

from typing import Iterable, List

from ...reider.enumeration import (
    ReiderCandidate,
    enumerate_destabilizations,
    exclude_low_genus,
)
from ..registry import Evaluation, register_calculator


def _summary(cand: ReiderCandidate) -> dict:
    return {
        "case": cand.case_tag.value,
        "d1": cand.d1,
        "d2": cand.d2,
        "delta": cand.delta,
        "B_sq": cand.B_sq,
        "p_a": cand.p_a,
    }


def _trace(K_sq: int, deg_Z: int, hyperbolic_filter: bool) -> List[str]:
    trace = [
        f"K^2 = {K_sq}, deg Z = {deg_Z}: d1 + d2 = {K_sq}, d1 > d2 > 0, "
        f"delta + deg W = {deg_Z}, K^2 - 4 delta > 4 deg W, "
        "Delta = d1 d2 - delta (d1 + d2) <= 0, delta even"
    ]
    exclusion = exclude_low_genus if hyperbolic_filter else None
    for cand in enumerate_destabilizations(
        K_sq, deg_Z, exclusion=exclusion, include_rejected=True
    ):
        line = (
            f"(d1, d2, delta) = ({cand.d1}, {cand.d2}, {cand.delta}): "
            f"Delta = {cand.hodge_delta}, B^2 = {cand.B_sq}, p_a = {cand.p_a}"
        )
        if cand.reason:
            line += f" -> rejected ({cand.reason})"
        else:
            line += f" -> {cand.case_tag.value}"
        trace.append(line)
    return trace


@register_calculator("reider.enumeration")
def reider_enumeration(
    K_sq: int = 9, deg_Z: int = 2, hyperbolic_filter: bool = True
) -> Evaluation:
    exclusion = exclude_low_genus if hyperbolic_filter else None
    candidates = enumerate_destabilizations(K_sq, deg_Z, exclusion=exclusion)
    trace = _trace(K_sq, deg_Z, hyperbolic_filter)
    if not candidates:
        trace.append("no numerical case survives: Z is separated")
    return Evaluation([_summary(c) for c in candidates], trace)


@register_calculator("reider.k_sq_sweep")
def reider_k_sq_sweep(values: Iterable[int] = (10, 18, 27, 36, 45)) -> Evaluation:
    """Surviving cases for deg Z = 2 and every K² in ``values``."""
    out = {}
    trace = []
    for K_sq in values:
        survivors = enumerate_destabilizations(K_sq, 2)
        out[K_sq] = [
            [c.case_tag.value, c.d1, c.d2, c.delta, c.B_sq, c.p_a] for c in survivors
        ]
        trace.append(
            f"K^2 = {K_sq}: "
            + "; ".join(
                f"{c.case_tag.value} (d1, d2, delta) = ({c.d1}, {c.d2}, {c.delta}), "
                f"p_a = {c.p_a}"
                for c in survivors
            )
        )
    trace.append("only genus-2 pencils remain, excluded as in the singular-fiber step")
    return Evaluation(out, trace)
