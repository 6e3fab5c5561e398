"""Checks on the q = 1 surface: lattice data, the class B and its elimination."""

from ...albanese.cs_lattice import (
    CS_GRAM,
    CS_GRAM_SHA256,
    Verdict,
    brute_force_n_scan,
    build_cs_lattice,
    eliminate_all,
    gram_checksum,
    row_relation_holds,
    solve_b_constraints,
)
from ...albanese.elimination import (
    case_a_fixed_point_check,
    case_b_fibration_check,
    fixed_point_budget,
    torsion_invisible,
    torsion_sections,
)
from ...lattice.intersection import numerically_equivalent, orthogonalize, pair
from ...lattice.linalg import determinant, signature
from ..registry import Evaluation, register_calculator


@register_calculator("cs.checksum")
def cs_checksum() -> Evaluation:
    checksum = gram_checksum(CS_GRAM)
    trace = [f"sha256 of the embedded Gram matrix: {checksum}"]
    trace.append(f"recorded checksum: {CS_GRAM_SHA256}")
    return Evaluation(checksum, trace)


@register_calculator("cs.orthogonal_norms")
def cs_orthogonal_norms() -> Evaluation:
    cs = build_cs_lattice()
    labels = ("K", "E1-E2", "D")
    trace = [f"D = C1 - K + (E1 - E2)/4 = {cs.D}"]
    norms = []
    for label, (_, norm) in zip(labels, orthogonalize(list(cs.orthobasis))):
        trace.append(f"{label}·{label} = {norm}")
        norms.append(norm)
    return Evaluation(norms, trace)


@register_calculator("cs.orthogonality")
def cs_orthogonality() -> Evaluation:
    cs = build_cs_lattice()
    K, E12, D = cs.orthobasis
    values = [pair(K, E12), pair(K, D), pair(E12, D)]
    trace = [
        f"K·(E1-E2) = {values[0]}",
        f"K·D = {values[1]}",
        f"(E1-E2)·D = {values[2]}",
    ]
    return Evaluation(values, trace)


@register_calculator("cs.row_relation")
def cs_row_relation() -> Evaluation:
    rows = [
        [CS_GRAM[0][j] + CS_GRAM[1][j] for j in range(len(CS_GRAM))],
        [2 * CS_GRAM[2][j] for j in range(len(CS_GRAM))],
    ]
    det = determinant(CS_GRAM)
    trace = [
        f"row(E1) + row(E2) = {rows[0]}",
        f"2·row(E3) = {rows[1]}",
        f"det = {det}",
    ]
    return Evaluation({"relation": row_relation_holds(), "determinant": det}, trace)


@register_calculator("cs.signature")
def cs_signature() -> Evaluation:
    sig = signature(CS_GRAM)
    trace = [
        "E1 + E2 ≡ 2E3 and C2 ≡ 2K - C1 - (E1 - E2)/2 leave rank 3",
        f"(n+, n-, n0) = {sig}",
    ]
    return Evaluation(list(sig), trace)


@register_calculator("cs.fiber_two_ways")
def cs_fiber_two_ways() -> Evaluation:
    cs = build_cs_lattice()
    other = cs.F_from_orthobasis()
    same = numerically_equivalent(cs.F, other)
    trace = [
        f"F = -E1 + 5E2 = {cs.F}",
        f"4K - 3(E1 - E2) = {other}",
        f"numerically equal: {same}",
        f"F·F = {pair(cs.F, cs.F)}, K·F = {pair(cs.K, cs.F)}",
    ]
    return Evaluation(same, trace)


@register_calculator("cs.second_curve_identity")
def cs_second_curve_identity() -> Evaluation:
    cs = build_cs_lattice()
    same = numerically_equivalent(cs.C2, cs.C2_identity())
    trace = [
        f"2K - C1 - (E1 - E2)/2 = {cs.C2_identity()}",
        f"equal to C2 against every basis class: {same}",
    ]
    return Evaluation(same, trace)


@register_calculator("cs.n_set")
def cs_n_set() -> Evaluation:
    candidates = solve_b_constraints()
    n_set = sorted({c.n for c in candidates})
    trace = [
        "K·B = 2: a = 2/9; F·B = n: 6b = n/8 - 1; B·B = 0: (6b)^2 + (9c/2)^2 = 1",
        "c = ±sqrt((16 - n) n)/36, real only for 0 <= n <= 16",
    ]
    for cand in candidates:
        trace.append(f"{cand.label()}: a = {cand.a}, b = {cand.b}, c = {cand.c}")
    return Evaluation(n_set, trace)


@register_calculator("cs.n_scan_oracle")
def cs_n_scan_oracle() -> Evaluation:
    scanned = brute_force_n_scan()
    solved = sorted({c.n for c in solve_b_constraints()})
    trace = [f"integer square scan: {scanned}", f"solver: {solved}"]
    return Evaluation(scanned == solved, trace)


@register_calculator("cs.coefficients")
def cs_coefficients(n: int) -> Evaluation:
    matches = [c for c in solve_b_constraints() if c.n == n]
    trace = [f"{c.label()}: B = {c.a}K + {c.b}(E1-E2) + {c.c}D" for c in matches]
    if not matches:
        trace.append(f"n = {n}: (16 - n) n is not a square")
        return Evaluation(None, trace)
    return Evaluation(
        {"a": matches[0].a, "b": matches[0].b, "c": [c.c for c in matches]}, trace
    )


@register_calculator("cs.integrality")
def cs_integrality(n: int) -> Evaluation:
    """B·C1 for the candidates with this n, and their verdicts."""
    matches = [c for c in eliminate_all() if c.n == n]
    trace = []
    for cand in matches:
        trace.extend(cand.notes)
        trace.append(f"{cand.label()}: {cand.verdict.value}")
    return Evaluation(
        {
            "B.C1": [c.B_dot_C1 for c in matches],
            "verdict": [c.verdict.value for c in matches],
        },
        trace,
    )


@register_calculator("cs.survivor")
def cs_survivor() -> Evaluation:
    survivors = [c for c in eliminate_all() if c.verdict == Verdict.SURVIVES]
    trace = []
    for cand in survivors:
        trace.append(
            f"{cand.label()}: B·C1 = {cand.B_dot_C1}, B·C2 = {cand.B_dot_C2}, "
            f"B·C = 0 for C = {cand.orthogonal_curve}"
        )
    return Evaluation(
        {
            cand.label(): [cand.B_dot_C1, cand.B_dot_C2, cand.orthogonal_curve]
            for cand in survivors
        },
        trace,
    )


@register_calculator("cs.case_a")
def cs_case_a() -> Evaluation:
    result = case_a_fixed_point_check()
    return Evaluation(result.computed, result.notes)


@register_calculator("cs.case_a_budget")
def cs_case_a_budget() -> Evaluation:
    check = fixed_point_budget()
    return Evaluation(
        {"demand": check.demand, "total": check.total, "feasible": check.feasible},
        [check.describe()],
    )


@register_calculator("cs.case_b")
def cs_case_b() -> Evaluation:
    result = case_b_fibration_check()
    return Evaluation(result.computed, result.notes)


@register_calculator("cs.case_b_torsion")
def cs_case_b_torsion() -> Evaluation:
    sections = torsion_sections()
    trace = [
        "s1 in Γ(B), s2 in Γ(B + tau), s3 in Γ(B + 2tau), 3tau = 0",
        *(f"{name}: torsion power {t.power}" for name, t in sections.items()),
    ]
    return Evaluation({name: t.power for name, t in sections.items()}, trace)


@register_calculator("cs.torsion_invisible")
def cs_torsion_invisible() -> Evaluation:
    value = torsion_invisible()
    trace = ["B, B + tau, B + 2tau paired with E1, E2, E3, C1, C2 and B"]
    trace.append(f"identical intersection numbers: {value}")
    return Evaluation(value, trace)
