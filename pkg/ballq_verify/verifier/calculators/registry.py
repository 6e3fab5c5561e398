"""Checks on the fake projective plane table."""

from typing import List

from ...config.settings import get_settings
from ...errors.exceptions import BallqError
from ...registry.loader import (
    AUT_ORDERS,
    FppCase,
    FppRecord,
    covering_context,
    dump_registry_csv,
    load_registry,
    parse_registry_csv,
    partition_counts,
    query_by_case,
)
from ...surface.invariants import SurfaceInvariants, ball_quotient_invariants
from ..registry import Evaluation, register_calculator


def _records() -> List[FppRecord]:
    return load_registry(get_settings().registry.data_file)


@register_calculator("registry.count")
def registry_count() -> Evaluation:
    records = _records()
    families = sorted({r.family for r in records})
    trace = [f"{len(records)} rows across families {', '.join(families)}"]
    return Evaluation(len(records), trace)


@register_calculator("registry.partition")
def registry_partition() -> Evaluation:
    counts = partition_counts(_records())
    trace = [
        f"{case.display}: {count}" for case, count in zip(FppCase, counts)
    ]
    trace.append(f"total {sum(counts)}")
    return Evaluation(list(counts), trace)


@register_calculator("registry.case_names")
def registry_case_names(case: str) -> Evaluation:
    """Names tagged with ``case``, in table order."""
    selected = query_by_case(_records(), case)
    names = [r.raw_name for r in selected]
    trace = [f"{FppCase(case).display}: {len(names)} lattices"]
    trace.extend(names)
    return Evaluation(names, trace)


@register_calculator("registry.case_d")
def registry_case_d() -> Evaluation:
    """The unique case (d) lattice and its covering companion."""
    selected = query_by_case(_records(), FppCase.D)
    trace = [f"case (d) lattices: {[r.raw_name for r in selected]}"]
    out = []
    for record in selected:
        context = covering_context(record)
        if isinstance(context, str) or context is None:
            out.append({"name": record.raw_name, "covering": context})
            continue
        trace.append(
            f"{record.raw_name} -> X = {context.quotient}, "
            f"M' = {context.companion}, degree {context.degree}"
        )
        out.append(
            {
                "name": record.raw_name,
                "quotient": context.quotient,
                "companion": context.companion,
                "degree": context.degree,
            }
        )
    return Evaluation(out, trace)


@register_calculator("registry.min_type_untagged")
def registry_min_type_untagged() -> Evaluation:
    tagged = [
        r.raw_name
        for r in query_by_case(_records(), FppCase.MIN_TYPE)
        if r.subgroup_tag
    ]
    trace = ["minimal-type lattices are maximal, so carry no subgroup tag"]
    trace.append(f"tagged minimal-type rows: {tagged or 'none'}")
    return Evaluation(not tagged, trace)


@register_calculator("registry.round_trip")
def registry_round_trip() -> Evaluation:
    records = _records()
    text = dump_registry_csv(records)
    again = parse_registry_csv(text, source="round-trip")
    same = again == records
    trace = [
        f"serialized {len(records)} records to {len(text)} characters of CSV",
        f"parsed back {len(again)} records, identical: {same}",
    ]
    return Evaluation(same, trace)


@register_calculator("registry.aut_orders")
def registry_aut_orders() -> Evaluation:
    trace = ["|Aut(M)| for a fake projective plane with nontrivial automorphisms"]
    trace.append(f"recorded orders: {list(AUT_ORDERS)}")
    return Evaluation(list(AUT_ORDERS), trace)


@register_calculator("registry.classification")
def registry_classification(max_q: int = 1) -> Evaluation:
    """c₂ = 3 leaves the fake projective planes and the q = 1 surface."""
    base = ball_quotient_invariants(3)
    surfaces = []
    trace = [f"c2 = 3: c1^2 = {base.c1_sq}, chi(O) = {base.chi_O}"]
    for q in range(0, max_q + 1):
        try:
            SurfaceInvariants(base.c1_sq, base.c2, base.chi_O, q=q, p_g=q)
        except BallqError as e:
            trace.append(f"q = p_g = {q}: {e.message}")
            continue
        surfaces.append(q)
    lattices = len(_records())
    trace.append(f"q = 0: fake projective planes, {lattices} lattices in the table")
    trace.append("q = 1: the Cartwright-Steger surface, lattice data from the input")
    return Evaluation({"q": surfaces, "fpp_lattices": lattices}, trace)
