"""The Cartwright–Steger surface: lattice data and the genus-2 class B."""

from .cs_lattice import (
    BCandidate,
    CsLattice,
    Verdict,
    brute_force_n_scan,
    build_cs_lattice,
    eliminate_all,
    gram_checksum,
    integrality_eliminate,
    row_relation_holds,
    solve_b_constraints,
    surviving_class,
)
from .elimination import (
    case_a_fixed_point_check,
    case_b_fibration_check,
    enumerate_fixed_point_assignments,
    fixed_point_budget,
    torsion_invisible,
)

__all__ = [
    "BCandidate",
    "CsLattice",
    "Verdict",
    "brute_force_n_scan",
    "build_cs_lattice",
    "eliminate_all",
    "gram_checksum",
    "integrality_eliminate",
    "row_relation_holds",
    "solve_b_constraints",
    "surviving_class",
    "case_a_fixed_point_check",
    "case_b_fibration_check",
    "enumerate_fixed_point_assignments",
    "fixed_point_budget",
    "torsion_invisible",
]
