"""Tests for Riemann-Hurwitz enumeration and intersection budgets."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from sympy import divisor_count

from ballq_verify.coverings.budget import branch_self_intersection, budget_check
from ballq_verify.coverings.hurwitz import (
    admissible_multiplicities,
    degree_splittings,
    divisibility_filter,
    riemann_hurwitz_solutions,
)
from ballq_verify.errors.exceptions import ValidationError


def shape(solutions):
    return [(s.g_down, s.branch_orders) for s in solutions]


def brute_force_solutions(g_up, degree, allowed, max_points=None):
    """Every multiset of allowed orders, each g_down checked directly."""
    values = sorted(allowed)
    lhs = 2 * (g_up - 1)
    largest = (lhs + 2 * degree) // values[0]
    if max_points is not None:
        largest = min(largest, max_points)
    found = set()
    for g_down in range(0, g_up + 2):
        for size in range(0, largest + 1):
            for orders in combinations_with_replacement(values, size):
                if lhs == degree * 2 * (g_down - 1) + sum(orders):
                    found.add((g_down, orders))
    return found


class TestRiemannHurwitz:
    """Test cases for riemann_hurwitz_solutions."""

    def test_genus_three_order_three_capped(self):
        """At most three fixed points leave only g = 1, l = 2."""
        solutions = riemann_hurwitz_solutions(3, 3, {2}, max_points=3)
        assert shape(solutions) == [(1, (2, 2))]
        assert solutions[0].l == 2

    def test_genus_three_order_three_uncapped(self):
        """Without the cap the rational quotient appears too."""
        solutions = riemann_hurwitz_solutions(3, 3, {2})
        assert shape(solutions) == [(1, (2, 2)), (0, (2, 2, 2, 2, 2))]

    def test_mixed_orders(self):
        """Ordered by g descending, then number of points."""
        solutions = riemann_hurwitz_solutions(3, 3, {2, 6})
        assert shape(solutions) == [
            (1, (2, 2)),
            (0, (2, 2, 6)),
            (0, (2, 2, 2, 2, 2)),
        ]

    def test_unramified(self):
        """An étale double cover of a genus 2 curve has genus 3."""
        solutions = riemann_hurwitz_solutions(3, 2, {1})
        assert (2, ()) in shape(solutions)

    def test_every_solution_satisfies_identity(self):
        """Seeded random parameters always substitute back exactly."""
        rng = random.Random(3)
        for _ in range(100):
            g_up = rng.randint(0, 12)
            degree = rng.randint(1, 7)
            allowed = set(rng.sample(range(1, 9), rng.randint(1, 3)))
            for s in riemann_hurwitz_solutions(g_up, degree, allowed):
                assert s.satisfies()
                assert set(s.branch_orders) <= allowed
                assert list(s.branch_orders) == sorted(s.branch_orders)

    def test_matches_brute_force(self):
        """No solution is missed on a bounded grid."""
        for g_up in range(0, 7):
            for degree in range(1, 5):
                for allowed in [{1}, {2}, {2, 6}, {1, 3}, {2, 3, 4}]:
                    for cap in (None, 3):
                        found = riemann_hurwitz_solutions(
                            g_up, degree, allowed, max_points=cap
                        )
                        assert set(shape(found)) == brute_force_solutions(
                            g_up, degree, allowed, cap
                        ), (g_up, degree, allowed, cap)
                        assert len(found) == len(set(shape(found)))

    def test_invalid_arguments(self):
        """Negative genus, zero degree and nonpositive orders fail."""
        with pytest.raises(ValidationError):
            riemann_hurwitz_solutions(-1, 3, {2})
        with pytest.raises(ValidationError):
            riemann_hurwitz_solutions(3, 0, {2})
        with pytest.raises(ValidationError):
            riemann_hurwitz_solutions(3, 3, {0, 2})

    def test_to_dict(self):
        """Serialized solutions list their orders."""
        data = riemann_hurwitz_solutions(3, 3, {2}, max_points=3)[0].to_dict()
        assert data == {"g_down": 1, "l": 2, "branch_orders": [2, 2]}


class TestDegreeSplittings:
    """Test cases for d·k factorizations and divisibility filters."""

    def test_splittings_of_21(self):
        """Ascending d."""
        assert degree_splittings(21) == [(1, 21), (3, 7), (7, 3), (21, 1)]

    def test_splitting_count_is_divisor_count(self):
        """One splitting per divisor, each multiplying back to n."""
        for n in range(1, 101):
            splittings = degree_splittings(n)
            assert len(splittings) == divisor_count(n), n
            assert all(d * k == n for d, k in splittings)
            assert [d for d, _ in splittings] == sorted({d for d, _ in splittings})

    def test_splittings_invalid(self):
        """The total must be positive."""
        with pytest.raises(ValidationError):
            degree_splittings(0)

    def test_divisibility_filter(self):
        """value / modulus integral."""
        assert divisibility_filter(21, 7)
        assert not divisibility_filter(3, 7)
        assert divisibility_filter(Fraction(14, 2))
        with pytest.raises(ValidationError):
            divisibility_filter(1, 0)

    def test_admissible_multiplicities(self):
        """Only k = 21 and k = 7 keep k/7 − a integral."""
        assert sorted(admissible_multiplicities(21, 7, range(4))) == [7, 21]


class TestBudget:
    """Test cases for intersection budgets."""

    def test_feasible_and_infeasible(self):
        """The demand is compared with the total exactly."""
        ok = budget_check(4, [("a", 1), ("b", "3/2")])
        assert ok.feasible
        assert ok.demand == Fraction(5, 2)
        assert "<=" in ok.describe()
        bad = budget_check(4, [("fixed points", 12)])
        assert not bad.feasible
        assert bad.excess == 8
        assert bad.describe() == "fixed points=12 = 12 > 4"

    def test_empty_contributions(self):
        """No demand always fits a nonnegative total."""
        check = budget_check(0, [])
        assert check.feasible
        assert check.describe() == "0 = 0 <= 0"

    def test_monotone_in_contributions(self):
        """Adding a positive contribution never turns infeasible into feasible."""
        rng = random.Random(5)
        for _ in range(200):
            total = rng.randint(0, 30)
            items = [(f"c{i}", rng.randint(0, 10)) for i in range(rng.randint(0, 5))]
            before = budget_check(total, items)
            after = budget_check(total, items + [("extra", rng.randint(1, 10))])
            assert after.demand > before.demand
            if not before.feasible:
                assert not after.feasible

    def test_branch_self_intersection(self):
        """Pairwise meetings of local branches."""
        assert branch_self_intersection(0) == 0
        assert branch_self_intersection(3) == 3
        assert branch_self_intersection(7) == 21
        with pytest.raises(ValidationError):
            branch_self_intersection(-1)
