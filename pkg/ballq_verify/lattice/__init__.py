"""Exact intersection lattices: pairings, Gram–Schmidt, inertia."""

from .intersection import (
    DivisorClass,
    IntersectionLattice,
    numerically_equivalent,
    orthogonal_coordinates,
    orthogonalize,
    pair,
)
from .io import dump_lattice_json, load_lattice_json
from .linalg import (
    block_diagonal,
    determinant,
    is_negative_definite,
    signature,
    solve_exact,
    tridiagonal,
)

__all__ = [
    "DivisorClass",
    "IntersectionLattice",
    "numerically_equivalent",
    "orthogonal_coordinates",
    "orthogonalize",
    "pair",
    "dump_lattice_json",
    "load_lattice_json",
    "block_diagonal",
    "determinant",
    "is_negative_definite",
    "signature",
    "solve_exact",
    "tridiagonal",
]
