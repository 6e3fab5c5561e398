"""Tests for intersection lattices, exact linear algebra and lattice IO."""

import json
import random
from fractions import Fraction

import pytest

from ballq_verify.errors.exceptions import (
    DependentVectorsError,
    IsotropicVectorError,
    LatticeError,
    LatticeMismatchError,
    NonSymmetricGramError,
    ValidationError,
)
from ballq_verify.lattice.intersection import (
    IntersectionLattice,
    numerically_equivalent,
    orthogonal_coordinates,
    orthogonalize,
    pair,
)
from ballq_verify.lattice.io import (
    dump_lattice_json,
    lattice_from_dict,
    load_lattice_json,
)
from ballq_verify.lattice.linalg import (
    block_diagonal,
    determinant,
    is_negative_definite,
    signature,
    solve_exact,
    to_gram,
    tridiagonal,
)


def random_class(rng, lattice, bound=9):
    return lattice.from_coords(
        [Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
         for _ in range(lattice.dimension)]
    )


def random_unimodular(rng, size, steps=6):
    """Product of elementary integer row operations."""
    matrix = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(steps):
        i, j = rng.sample(range(size), 2)
        factor = rng.choice([-2, -1, 1, 2])
        matrix[i] = [a + factor * b for a, b in zip(matrix[i], matrix[j])]
    return matrix


def congruent(gram, transform):
    """Pᵀ·G·P."""
    size = len(gram)
    return [
        [
            sum(
                transform[k][i] * gram[k][m] * transform[m][j]
                for k in range(size)
                for m in range(size)
            )
            for j in range(size)
        ]
        for i in range(size)
    ]


class TestIntersectionLattice:
    """Test cases for lattice construction and divisor arithmetic."""

    def test_basic_properties(self, diagonal_lattice):
        """Basis, dimension and Gram are exposed exactly."""
        assert diagonal_lattice.dimension == 3
        assert diagonal_lattice.basis_labels == ("h", "e1", "e2")
        assert diagonal_lattice.gram[1][1] == Fraction(-1)

    def test_rejects_duplicate_labels(self):
        """Basis labels must be unique."""
        with pytest.raises(LatticeError):
            IntersectionLattice(("a", "a"), ((1, 0), (0, 1)))

    def test_rejects_size_mismatch(self):
        """Gram size must match the basis."""
        with pytest.raises(LatticeError):
            IntersectionLattice(("a",), ((1, 0), (0, 1)))

    def test_rejects_non_symmetric_gram(self):
        """Asymmetric Gram matrices are refused with the offending entry."""
        with pytest.raises(NonSymmetricGramError) as exc_info:
            IntersectionLattice(("a", "b"), ((0, 1), (2, 0)))
        assert exc_info.value.row == 0
        assert exc_info.value.column == 1

    def test_unknown_label(self, diagonal_lattice):
        """Unknown labels raise LatticeError."""
        with pytest.raises(LatticeError):
            diagonal_lattice.element(e3=1)

    def test_immutable(self, picard_one):
        """Lattices cannot be mutated after construction."""
        with pytest.raises(AttributeError):
            picard_one.foo = 1

    def test_divisor_arithmetic(self, diagonal_lattice):
        """Addition, scaling and division stay exact."""
        D = diagonal_lattice.element(h=3, e1=-1)
        E = diagonal_lattice.element(e1=1, e2="1/2")
        assert (D + E).as_dict() == {"h": 3, "e2": Fraction(1, 2)}
        assert (D - D).is_zero()
        assert (2 * E).coords() == (0, 2, 1)
        assert (D / 3).coords() == (1, Fraction(-1, 3), 0)
        assert -D == diagonal_lattice.element(h=-3, e1=1)
        assert str(D) == "3*h - e1"

    def test_pairing(self, diagonal_lattice):
        """uᵀ·G·v with the diagonal form."""
        h, e1, e2 = diagonal_lattice.basis()
        line = 3 * h - e1 - e2
        assert pair(line, line) == 7
        assert pair(line, e1) == 1
        assert line.dot(h) == 3

    def test_cross_lattice_operations_fail(self, picard_one):
        """Pairing or adding classes of different lattices is an error."""
        other = IntersectionLattice(("H",), ((1,),), name="other")
        H = picard_one.basis_class("H")
        H2 = other.basis_class("H")
        with pytest.raises(LatticeMismatchError):
            pair(H, H2)
        with pytest.raises(LatticeMismatchError):
            H + H2
        assert H != H2

    def test_numerical_equivalence(self, hyperbolic_plane):
        """Equivalence means the difference pairs to zero with the basis."""
        e, f = hyperbolic_plane.basis()
        assert numerically_equivalent(e + f, f + e)
        assert not numerically_equivalent(e, f)

    def test_bilinearity_and_symmetry(self, diagonal_lattice):
        """1000 seeded triples satisfy symmetry and bilinearity exactly."""
        rng = random.Random(20260101)
        for _ in range(1000):
            u, v, w = (random_class(rng, diagonal_lattice) for _ in range(3))
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            assert pair(u, v) == pair(v, u)
            assert pair(a * u + v, w) == a * pair(u, w) + pair(v, w)


class TestOrthogonalize:
    """Test cases for exact Gram-Schmidt."""

    def test_orthogonal_output(self, diagonal_lattice):
        """Returned vectors are pairwise orthogonal with the given norms."""
        h, e1, e2 = diagonal_lattice.basis()
        vectors = [3 * h - e1, h + e2, e1 - e2]
        result = orthogonalize(vectors)
        for i, (w, norm) in enumerate(result):
            assert pair(w, w) == norm
            for w2, _ in result[i + 1:]:
                assert pair(w, w2) == 0

    def test_coordinates_recover_class(self, diagonal_lattice):
        """D equals the sum of its orthogonal components."""
        h, e1, e2 = diagonal_lattice.basis()
        basis = [w for w, _ in orthogonalize([h, e1 + 2 * e2, e2])]
        D = diagonal_lattice.element(h=2, e1="1/3", e2=-5)
        coords = orthogonal_coordinates(D, basis)
        rebuilt = diagonal_lattice.zero()
        for c, w in zip(coords, basis):
            rebuilt = rebuilt + c * w
        assert numerically_equivalent(rebuilt, D)

    def test_dependent_vectors(self, diagonal_lattice):
        """A dependency names the relation."""
        h, e1, _ = diagonal_lattice.basis()
        with pytest.raises(DependentVectorsError) as exc_info:
            orthogonalize([h, e1, 2 * h - e1])
        assert exc_info.value.index == 2
        assert exc_info.value.relation

    def test_isotropic_vector(self, hyperbolic_plane):
        """Null vectors cannot be projection directions."""
        e, _ = hyperbolic_plane.basis()
        with pytest.raises(IsotropicVectorError):
            orthogonalize([e])


class TestLinearAlgebra:
    """Test cases for exact inertia, determinants and solves."""

    def test_signature_examples(self):
        """Known signatures, including a zero diagonal."""
        assert signature([[1, 0], [0, -1]]) == (1, 1, 0)
        assert signature([[0, 1], [1, 0]]) == (1, 1, 0)
        assert signature([[0, 0], [0, 0]]) == (0, 0, 2)
        assert signature([[1, 1], [1, 1]]) == (1, 0, 1)

    def test_signature_congruence_invariance(self):
        """Inertia is unchanged under 100 random unimodular congruences."""
        rng = random.Random(7)
        gram = [
            [1, 0, 0, 0],
            [0, -2, 1, 0],
            [0, 1, -2, 0],
            [0, 0, 0, 0],
        ]
        expected = signature(gram)
        assert expected == (1, 2, 1)
        for _ in range(100):
            transform = random_unimodular(rng, 4)
            assert signature(congruent(gram, transform)) == expected

    def test_determinant_and_solve(self):
        """Determinants and solutions are exact Fractions."""
        gram = [[2, 1], [1, 3]]
        assert determinant(gram) == 5
        assert solve_exact(gram, [1, 0]) == (Fraction(3, 5), Fraction(-1, 5))

    def test_chains(self):
        """Negative-definite A_n chains and block sums."""
        chain = tridiagonal([-2, -2])
        assert chain == to_gram([[-2, 1], [1, -2]])
        assert is_negative_definite(chain)
        assert determinant(chain) == 3
        assert not is_negative_definite(block_diagonal(chain, [[1]]))


class TestLatticeIO:
    """Test cases for lattice JSON import/export."""

    def test_dump_and_load(self, diagonal_lattice):
        """Entries are serialized as rational strings."""
        text = dump_lattice_json(diagonal_lattice)
        data = json.loads(text)
        assert data["basis"] == ["h", "e1", "e2"]
        assert data["gram"][1][1] == "-1"
        loaded = load_lattice_json(text)
        assert loaded.gram == diagonal_lattice.gram

    def test_load_from_file(self, temp_dir):
        """Paths are read from disk; the stem names the lattice."""
        path = temp_dir / "cs.json"
        path.write_text('{"basis": ["a"], "gram": [["1/3"]]}')
        lattice = load_lattice_json(path)
        assert lattice.name == "cs"
        assert lattice.gram == ((Fraction(1, 3),),)

    def test_missing_keys(self):
        """Documents without basis and gram are refused."""
        with pytest.raises(LatticeError):
            lattice_from_dict({"basis": ["a"]})

    def test_invalid_json(self):
        """Malformed JSON becomes a LatticeError."""
        with pytest.raises(LatticeError):
            load_lattice_json("{not json")

    def test_malformed_basis(self):
        """Type errors in a document surface as ValidationError."""
        with pytest.raises(ValidationError) as exc_info:
            lattice_from_dict({"basis": 5, "gram": []})
        assert exc_info.value.details["field"] == "lattice_from_dict"
