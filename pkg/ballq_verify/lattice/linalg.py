"""
Exact linear algebra over the rationals.

Gram matrices are tuples of tuples of ``Fraction``. Inertia is computed by
congruence diagonalization; linear solves go through sympy so no step ever
touches floating point.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy

from ..common.rational import RationalLike, parse_rational
from ..errors.exceptions import LatticeError, NonSymmetricGramError

Gram = Tuple[Tuple[Fraction, ...], ...]
Signature = Tuple[int, int, int]


def to_gram(matrix: Sequence[Sequence[RationalLike]]) -> Gram:
    """Parse and validate a square symmetric matrix."""
    rows = tuple(tuple(parse_rational(x) for x in row) for row in matrix)
    check_symmetric(rows)
    return rows


def check_symmetric(gram: Sequence[Sequence[Fraction]]) -> None:
    size = len(gram)
    for i, row in enumerate(gram):
        if len(row) != size:
            raise NonSymmetricGramError(
                f"Gram matrix is not square: row {i} has {len(row)} entries, "
                f"expected {size}",
                row=i,
            )
    for i in range(size):
        for j in range(i + 1, size):
            if gram[i][j] != gram[j][i]:
                raise NonSymmetricGramError(
                    f"Gram matrix is not symmetric at ({i}, {j}): "
                    f"{gram[i][j]} != {gram[j][i]}",
                    row=i,
                    column=j,
                )


def signature(gram: Sequence[Sequence[RationalLike]]) -> Signature:
    """Return (n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Pivot choice: the first nonzero diagonal entry; when the whole diagonal
    vanishes, the first nonzero off-diagonal entry (i, j) is moved onto the
    diagonal by adding row and column j to row and column i.
    """
    matrix: List[List[Fraction]] = [list(row) for row in to_gram(gram)]
    n_plus = n_minus = n_zero = 0

    while matrix:
        size = len(matrix)
        pivot = next((i for i in range(size) if matrix[i][i] != 0), None)
        if pivot is None:
            pair = next(
                (
                    (i, j)
                    for i in range(size)
                    for j in range(i + 1, size)
                    if matrix[i][j] != 0
                ),
                None,
            )
            if pair is None:
                n_zero += size
                break
            i, j = pair
            for k in range(size):
                matrix[i][k] += matrix[j][k]
            for k in range(size):
                matrix[k][i] += matrix[k][j]
            pivot = i

        d = matrix[pivot][pivot]
        if d > 0:
            n_plus += 1
        else:
            n_minus += 1

        rest = [k for k in range(size) if k != pivot]
        matrix = [
            [matrix[r][c] - matrix[r][pivot] * matrix[pivot][c] / d for c in rest]
            for r in rest
        ]

    return n_plus, n_minus, n_zero


def is_negative_definite(gram: Sequence[Sequence[RationalLike]]) -> bool:
    n_plus, _, n_zero = signature(gram)
    return n_plus == 0 and n_zero == 0


def _to_sympy(matrix: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in matrix]
    )


def _from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def determinant(gram: Sequence[Sequence[RationalLike]]) -> Fraction:
    rows = tuple(tuple(parse_rational(x) for x in row) for row in gram)
    if not rows:
        return Fraction(1)
    return _from_sympy(_to_sympy(rows).det())


def solve_exact(
    gram: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]
) -> Tuple[Fraction, ...]:
    """Solve ``gram @ x = rhs`` exactly; a singular matrix is an error."""
    matrix = tuple(tuple(parse_rational(x) for x in row) for row in gram)
    vector = [parse_rational(x) for x in rhs]
    if len(vector) != len(matrix):
        raise LatticeError(
            "Right-hand side length does not match matrix size",
            {"rows": len(matrix), "rhs": len(vector)},
        )
    if not matrix:
        return ()
    system = _to_sympy(matrix)
    if system.det() == 0:
        raise LatticeError("Matrix is singular; no unique solution")
    solution = system.LUsolve(_to_sympy([[x] for x in vector]))
    return tuple(_from_sympy(x) for x in solution)


def quadratic_form(
    gram: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]
) -> Fraction:
    """Return vᵀ·gram·v."""
    size = len(vector)
    return sum(
        (vector[i] * gram[i][j] * vector[j] for i in range(size) for j in range(size)),
        Fraction(0),
    )


def tridiagonal(diagonal: Sequence[int], off_diagonal: int = 1) -> Gram:
    """Gram matrix of a chain of curves meeting transversally in sequence."""
    size = len(diagonal)
    return tuple(
        tuple(
            Fraction(diagonal[i])
            if i == j
            else Fraction(off_diagonal if abs(i - j) == 1 else 0)
            for j in range(size)
        )
        for i in range(size)
    )


def block_diagonal(*blocks: Sequence[Sequence[Fraction]]) -> Gram:
    size = sum(len(b) for b in blocks)
    rows: List[List[Fraction]] = [[Fraction(0)] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, value in enumerate(row):
                rows[offset + i][offset + j] = Fraction(value)
        offset += len(block)
    return tuple(tuple(row) for row in rows)
