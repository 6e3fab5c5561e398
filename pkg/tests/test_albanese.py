"""Tests for the curve-class elimination on the Albanese-fibred surface."""

from fractions import Fraction

import pytest

from ballq_verify.albanese.cs_lattice import (
    CS_GRAM,
    CS_GRAM_SHA256,
    ORTHOGONAL_NORMS,
    Verdict,
    brute_force_n_scan,
    build_cs_lattice,
    eliminate_all,
    gram_checksum,
    row_relation_holds,
    solve_b_constraints,
    surviving_class,
)
from ballq_verify.albanese.elimination import (
    case_a_fixed_point_check,
    case_b_fibration_check,
    enumerate_fixed_point_assignments,
    fixed_point_budget,
    genus_numbers,
    torsion_invisible,
    torsion_sections,
)
from ballq_verify.common.results import Status
from ballq_verify.errors.exceptions import InvariantViolationError
from ballq_verify.lattice.intersection import (
    numerically_equivalent,
    orthogonalize,
    pair,
)
from ballq_verify.lattice.linalg import determinant, signature


@pytest.fixture(scope="module")
def cs():
    return build_cs_lattice()


class TestCsLattice:
    """Test cases for the embedded Gram matrix and its identities."""

    def test_checksum(self):
        """The embedded matrix matches its recorded digest."""
        assert gram_checksum(CS_GRAM) == CS_GRAM_SHA256

    def test_checksum_detects_edits(self):
        """Changing one entry changes the digest."""
        edited = [list(row) for row in CS_GRAM]
        edited[3][3] = -2
        assert gram_checksum(edited) != CS_GRAM_SHA256

    def test_row_relation_and_degeneracy(self):
        """row(E1) + row(E2) = 2·row(E3); the matrix is singular."""
        assert row_relation_holds()
        assert determinant(CS_GRAM) == 0
        assert signature(CS_GRAM) == (1, 2, 2)

    def test_orthogonal_basis(self, cs):
        """K, E1 − E2 and D are orthogonal with norms 9, −16, −9."""
        norms = tuple(n for _, n in orthogonalize(list(cs.orthobasis)))
        assert norms == ORTHOGONAL_NORMS
        assert pair(cs.K, cs.E12) == 0
        assert pair(cs.K, cs.D) == 0
        assert pair(cs.E12, cs.D) == 0

    def test_identities(self, cs):
        """F two ways, the C2 identity and E1 + E2 ≡ 2K."""
        assert numerically_equivalent(cs.F, cs.F_from_orthobasis())
        assert numerically_equivalent(cs.C2, cs.C2_identity())
        E1 = cs.basis_class("E1")
        E2 = cs.basis_class("E2")
        assert numerically_equivalent(E1 + E2, 2 * cs.K)


class TestCurveClassElimination:
    """Test cases for B ≡ aK + b(E1 − E2) + cD."""

    def test_n_values(self, cs):
        """Only n = 0, 8, 16 give rational c."""
        candidates = solve_b_constraints(cs)
        assert sorted({c.n for c in candidates}) == [0, 8, 16]
        assert brute_force_n_scan() == [0, 8, 16]
        assert [c.label() for c in candidates] == [
            "n=0",
            "n=8,c+",
            "n=8,c-",
            "n=16",
        ]

    def test_candidates_satisfy_constraints(self, cs):
        """B² = 0, K·B = 2 and F·B = n for every candidate."""
        for cand in solve_b_constraints(cs):
            B = cs.combination(cand.a, cand.b, cand.c)
            assert pair(B, B) == 0
            assert pair(cs.K, B) == 2
            assert pair(cs.F, B) == cand.n

    def test_coefficients(self, cs):
        """a = 2/9 throughout; n = 8 has b = 0, c = ±2/9."""
        by_label = {c.label(): c for c in solve_b_constraints(cs)}
        assert by_label["n=8,c+"].a == Fraction(2, 9)
        assert by_label["n=8,c+"].b == 0
        assert by_label["n=8,c+"].c == Fraction(2, 9)
        assert by_label["n=8,c-"].c == Fraction(-2, 9)
        assert by_label["n=0"].b == Fraction(-1, 6)
        assert by_label["n=16"].b == Fraction(1, 6)

    def test_integrality(self, cs):
        """n = 0 and n = 16 fail integrality; n = 8 survives twice."""
        by_label = {c.label(): c for c in eliminate_all(cs)}
        assert by_label["n=0"].verdict is Verdict.INTEGRALITY_FAIL
        assert by_label["n=0"].B_dot_C1 == Fraction(4, 3)
        assert by_label["n=16"].verdict is Verdict.INTEGRALITY_FAIL
        assert by_label["n=16"].B_dot_C1 == Fraction(8, 3)

        plus = by_label["n=8,c+"]
        assert plus.verdict is Verdict.SURVIVES
        assert (plus.B_dot_C1, plus.B_dot_C2) == (0, 4)
        assert plus.orthogonal_curve == "C1"
        minus = by_label["n=8,c-"]
        assert (minus.B_dot_C1, minus.B_dot_C2) == (4, 0)
        assert minus.orthogonal_curve == "C2"

    def test_surviving_class(self, cs):
        """The survivor orthogonal to C1."""
        B = surviving_class(cs, "C1")
        assert pair(B, cs.C1) == 0
        with pytest.raises(InvariantViolationError):
            surviving_class(cs, "E3")


class TestGroupActionElimination:
    """Test cases for the invariant and non-invariant cases."""

    def test_no_feasible_fixed_point_assignment(self):
        """Every assignment exceeds B·E3 = 2 or B·(E1 + E2) = 4."""
        for allow_free in (False, True):
            assignments = enumerate_fixed_point_assignments(allow_free)
            assert assignments
            assert not [a for a in assignments if a.feasible]

    def test_fixed_point_budget(self):
        """All three fixed points need 12 > 4."""
        budget = fixed_point_budget()
        assert budget.demand == 12
        assert budget.total == 4
        assert not budget.feasible

    def test_case_a_result(self):
        """Zero feasible assignments under both readings."""
        result = case_a_fixed_point_check()
        assert result.status is Status.MATCH
        assert result.computed == ["0", "0"]

    def test_torsion_sections(self):
        """s1² and s2·s3 both land in |2B|."""
        sections = torsion_sections()
        assert set(sections) == {"s1^2", "s2*s3"}
        assert all(t.power == 0 for t in sections.values())

    def test_case_b_result(self, cs):
        """Genus 3 fibre against a genus 5 curve inside it."""
        result = case_b_fibration_check(cs)
        assert result.status is Status.MATCH
        assert result.computed["contradiction"] is True
        assert genus_numbers(cs) == (3, 5)

    def test_torsion_invisible(self, cs):
        """Torsion twists of B have the same intersection numbers."""
        assert torsion_invisible(cs)
