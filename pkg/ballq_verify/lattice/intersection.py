"""
Intersection lattices and divisor classes.

An ``IntersectionLattice`` owns a named basis and a symmetric Gram matrix.
``DivisorClass`` values are coefficient vectors over that basis and carry
the lattice they were built in; pairing classes from two lattices is an
error.
"""

import uuid
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from ..common.rational import RationalLike, parse_rational
from ..errors.exceptions import (
    DependentVectorsError,
    IsotropicVectorError,
    LatticeError,
    LatticeMismatchError,
)
from .linalg import Gram, Signature, signature, to_gram


class IntersectionLattice:
    """Named basis with a symmetric exact-rational Gram matrix."""

    __slots__ = ("_labels", "_gram", "_index", "_name", "_token")

    def __init__(
        self,
        basis_labels: Sequence[str],
        gram: Sequence[Sequence[RationalLike]],
        name: str = "lattice",
    ):
        labels = tuple(str(label) for label in basis_labels)
        if len(set(labels)) != len(labels):
            raise LatticeError("Basis labels must be unique", {"labels": list(labels)})
        matrix = to_gram(gram)
        if len(matrix) != len(labels):
            raise LatticeError(
                "Gram matrix size does not match the number of basis labels",
                {"labels": len(labels), "gram": len(matrix)},
            )
        self._labels = labels
        self._gram = matrix
        self._index = {label: i for i, label in enumerate(labels)}
        self._name = name
        self._token = uuid.uuid4().hex

    def __setattr__(self, key, value):
        if hasattr(self, "_token"):
            raise AttributeError("IntersectionLattice is immutable")
        object.__setattr__(self, key, value)

    def __repr__(self) -> str:
        return f"IntersectionLattice({self._name!r}, basis={list(self._labels)})"

    @property
    def basis_labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def gram(self) -> Gram:
        return self._gram

    @property
    def name(self) -> str:
        return self._name

    @property
    def token(self) -> str:
        return self._token

    @property
    def dimension(self) -> int:
        return len(self._labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise LatticeError(
                f"Unknown basis label {label!r}",
                {"lattice": self._name, "labels": list(self._labels)},
            )

    def zero(self) -> "DivisorClass":
        return DivisorClass(self, tuple(Fraction(0) for _ in self._labels))

    def basis_class(self, label: str) -> "DivisorClass":
        coeffs = [Fraction(0)] * self.dimension
        coeffs[self.index(label)] = Fraction(1)
        return DivisorClass(self, tuple(coeffs))

    def basis(self) -> List["DivisorClass"]:
        return [self.basis_class(label) for label in self._labels]

    def from_coords(self, coords: Sequence[RationalLike]) -> "DivisorClass":
        if len(coords) != self.dimension:
            raise LatticeError(
                "Coefficient vector length does not match lattice dimension",
                {"expected": self.dimension, "got": len(coords)},
            )
        return DivisorClass(self, tuple(parse_rational(c) for c in coords))

    def element(self, **coeffs: RationalLike) -> "DivisorClass":
        """Build a class from label keywords, e.g. ``element(E1=1, E2=-1)``."""
        return self.from_mapping(coeffs)

    def from_mapping(self, coeffs: Mapping[str, RationalLike]) -> "DivisorClass":
        vector = [Fraction(0)] * self.dimension
        for label, value in coeffs.items():
            vector[self.index(label)] += parse_rational(value)
        return DivisorClass(self, tuple(vector))

    def signature(self) -> Signature:
        return signature(self._gram)


@dataclass(frozen=True)
class DivisorClass:
    """A Q-divisor class: one rational coefficient per basis label."""

    lattice: IntersectionLattice
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.lattice.dimension:
            raise LatticeError(
                "Coefficient vector length does not match lattice dimension",
                {"expected": self.lattice.dimension, "got": len(self.coeffs)},
            )

    def _check_same(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"Expected DivisorClass, got {type(other).__name__}")
        if other.lattice is not self.lattice:
            raise LatticeMismatchError(
                "Divisor classes belong to different lattices",
                left=self.lattice.name,
                right=other.lattice.name,
            )

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same(other)
        return DivisorClass(
            self.lattice, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same(other)
        return DivisorClass(
            self.lattice, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar: RationalLike) -> "DivisorClass":
        factor = parse_rational(scalar)
        return DivisorClass(self.lattice, tuple(a * factor for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, scalar: RationalLike) -> "DivisorClass":
        return self * (1 / parse_rational(scalar))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return other.lattice is self.lattice and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash((self.lattice.token, self.coeffs))

    def __str__(self) -> str:
        terms = []
        for label, c in zip(self.lattice.basis_labels, self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            body = label if magnitude == 1 else f"{magnitude}*{label}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) or "0"

    def coords(self) -> Tuple[Fraction, ...]:
        return self.coeffs

    def as_dict(self) -> Dict[str, Fraction]:
        return {
            label: c for label, c in zip(self.lattice.basis_labels, self.coeffs) if c
        }

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def dot(self, other: "DivisorClass") -> Fraction:
        return pair(self, other)


def pair(u: DivisorClass, v: DivisorClass) -> Fraction:
    """Intersection number uᵀ·gram·v."""
    u._check_same(v)
    gram = u.lattice.gram
    total = Fraction(0)
    for i, a in enumerate(u.coeffs):
        if a == 0:
            continue
        row = gram[i]
        for j, b in enumerate(v.coeffs):
            if b:
                total += a * row[j] * b
    return total


def numerically_equivalent(u: DivisorClass, v: DivisorClass) -> bool:
    """True when u − v pairs to zero with every basis class."""
    difference = u - v
    return all(pair(difference, e) == 0 for e in u.lattice.basis())


def is_numerically_trivial(u: DivisorClass) -> bool:
    return numerically_equivalent(u, u.lattice.zero())


def orthogonalize(
    vectors: Sequence[DivisorClass],
) -> List[Tuple[DivisorClass, Fraction]]:
    """Exact Gram–Schmidt; returns each orthogonal vector with its norm.

    A vector that becomes numerically trivial after projection is a linear
    dependency (modulo numerical equivalence) and raises
    ``DependentVectorsError`` naming the relation. A nontrivial vector of
    norm zero cannot be used as a projection direction and raises
    ``IsotropicVectorError``.
    """
    vectors = list(vectors)
    for v in vectors[1:]:
        vectors[0]._check_same(v)

    result: List[Tuple[DivisorClass, Fraction]] = []
    relations: List[List[Fraction]] = []
    for k, v in enumerate(vectors):
        w = v
        relation = [Fraction(0)] * len(vectors)
        relation[k] = Fraction(1)
        for (u, norm), u_relation in zip(result, relations):
            factor = pair(v, u) / norm
            if factor:
                w = w - factor * u
                relation = [r - factor * s for r, s in zip(relation, u_relation)]

        if is_numerically_trivial(w):
            raise DependentVectorsError(
                f"Vector {k} is dependent on the preceding vectors",
                index=k,
                relation=[
                    f"{c}*v{i}" for i, c in enumerate(relation) if c != 0
                ],
            )
        norm = pair(w, w)
        if norm == 0:
            raise IsotropicVectorError(
                f"Vector {k} is isotropic after projection", index=k
            )
        result.append((w, norm))
        relations.append(relation)
    return result


def orthogonal_coordinates(
    divisor: DivisorClass, orthobasis: Iterable[DivisorClass]
) -> Tuple[Fraction, ...]:
    """Coefficients of ``divisor`` along an orthogonal basis, D·w / w·w."""
    coords = []
    for index, w in enumerate(orthobasis):
        norm = pair(w, w)
        if norm == 0:
            raise IsotropicVectorError(
                "Orthogonal basis contains an isotropic vector", index=index
            )
        coords.append(pair(divisor, w) / norm)
    return tuple(coords)
