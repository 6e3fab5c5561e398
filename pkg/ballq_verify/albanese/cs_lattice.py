"""
The Cartwright–Steger surface lattice and the genus-2 curve class B.

The Gram matrix of (E1, E2, E3, C1, C2) is measured input data and is
embedded verbatim together with its checksum. K ≡ E3, E1 + E2 ≡ 2K, and
{K, E1 − E2, D = C1 − K + ¼(E1 − E2)} is an orthogonal basis of NS/tor.
A curve B with B² = 0 and K·B = 2 is written B ≡ aK + b(E1 − E2) + cD.
"""

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import List, Optional, Sequence, Tuple

from sympy.ntheory.primetest import is_square

from ..errors.exceptions import InvariantViolationError
from ..lattice.intersection import (
    DivisorClass,
    IntersectionLattice,
    numerically_equivalent,
    orthogonal_coordinates,
    orthogonalize,
    pair,
)
from ..log_config.logger import get_logger

logger = get_logger(__name__)

CS_BASIS = ("E1", "E2", "E3", "C1", "C2")
CS_GRAM = (
    (5, 13, 9, 11, 11),
    (13, 5, 9, 7, 7),
    (9, 9, 9, 9, 9),
    (11, 7, 9, -1, 17),
    (11, 7, 9, 17, -1),
)
CS_GRAM_SHA256 = "ff6a2d050f4afcd1398e163284bb6da16493b1f700ed2cb4e119c6bf9efd1233"

ORTHOGONAL_NORMS = (Fraction(9), Fraction(-16), Fraction(-9))

# B² = 0 and K·B = 2 for the curve produced by Reider's method
B_SQ = Fraction(0)
K_DOT_B = Fraction(2)
N_RANGE = range(0, 17)


def gram_checksum(gram: Sequence[Sequence]) -> str:
    text = ";".join(",".join(str(Fraction(x)) for x in row) for row in gram)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CsLattice:
    lattice: IntersectionLattice
    K: DivisorClass
    E12: DivisorClass
    D: DivisorClass
    F: DivisorClass

    def basis_class(self, label: str) -> DivisorClass:
        return self.lattice.basis_class(label)

    @property
    def C1(self) -> DivisorClass:
        return self.lattice.basis_class("C1")

    @property
    def C2(self) -> DivisorClass:
        return self.lattice.basis_class("C2")

    @property
    def orthobasis(self) -> Tuple[DivisorClass, DivisorClass, DivisorClass]:
        return self.K, self.E12, self.D

    def combination(self, a, b, c) -> DivisorClass:
        """aK + b(E1 − E2) + cD."""
        return a * self.K + b * self.E12 + c * self.D

    def F_from_orthobasis(self) -> DivisorClass:
        """F ≡ 4K − 3(E1 − E2)."""
        return 4 * self.K - 3 * self.E12

    def C2_identity(self) -> DivisorClass:
        """2K − C1 − ½(E1 − E2), numerically equal to C2."""
        return 2 * self.K - self.C1 - Fraction(1, 2) * self.E12


def _require(condition: bool, invariant: str, value=None) -> None:
    if not condition:
        raise InvariantViolationError(
            "Embedded lattice data is inconsistent", invariant=invariant, value=value
        )


def build_cs_lattice() -> CsLattice:
    """Construct the lattice and assert every identity it must satisfy."""
    checksum = gram_checksum(CS_GRAM)
    _require(checksum == CS_GRAM_SHA256, "gram_checksum", checksum)

    lattice = IntersectionLattice(CS_BASIS, CS_GRAM, name="cartwright-steger")
    E1, E2, E3, C1, _ = lattice.basis()
    K = E3
    E12 = E1 - E2
    D = C1 - K + Fraction(1, 4) * E12
    F = -E1 + 5 * E2

    _require(numerically_equivalent(E1 + E2, 2 * K), "E1 + E2 = 2K")
    norms = tuple(norm for _, norm in orthogonalize([K, E12, D]))
    _require(norms == ORTHOGONAL_NORMS, "orthogonal norms (9, -16, -9)", norms)
    _require(pair(K, E12) == 0 and pair(K, D) == 0 and pair(E12, D) == 0, "orthogonal")

    cs = CsLattice(lattice=lattice, K=K, E12=E12, D=D, F=F)
    _require(numerically_equivalent(F, cs.F_from_orthobasis()), "F two ways")
    _require(numerically_equivalent(cs.C2, cs.C2_identity()), "C2 identity")
    logger.debug("Built Cartwright-Steger lattice", checksum=checksum)
    return cs


def row_relation_holds(gram: Sequence[Sequence] = CS_GRAM) -> bool:
    """row(E1) + row(E2) = 2·row(E3), so the Gram matrix is singular."""
    return all(gram[0][j] + gram[1][j] == 2 * gram[2][j] for j in range(len(gram)))


class Verdict(str, Enum):
    INTEGRALITY_FAIL = "IntegralityFail"
    SURVIVES = "Survives"


@dataclass(frozen=True)
class BCandidate:
    n: int
    a: Fraction
    b: Fraction
    c: Fraction
    verdict: Optional[Verdict] = None
    B_dot_C1: Optional[Fraction] = None
    B_dot_C2: Optional[Fraction] = None
    orthogonal_curve: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def sign(self) -> str:
        return "+" if self.c > 0 else "-" if self.c < 0 else "0"

    def label(self) -> str:
        return f"n={self.n}" if self.c == 0 else f"n={self.n},c{self.sign}"


def solve_b_constraints(cs: CsLattice = None) -> List[BCandidate]:
    """Rational (a, b, c) for every n = F·B in 0..16.

    K·B = 2 gives a = 2/9; F·B = n gives 6b = n/8 − 1; B² = 0 gives
    (6b)² + (9c/2)² = 1, so c = ±√((16 − n)n)/36 is rational only when
    (16 − n)n is a perfect square.
    """
    cs = cs or build_cs_lattice()
    K_sq = pair(cs.K, cs.K)
    a = K_DOT_B / K_sq
    F = cs.F_from_orthobasis()
    F_coords = orthogonal_coordinates(F, cs.orthobasis)

    candidates: List[BCandidate] = []
    for n in N_RANGE:
        discriminant = (16 - n) * n
        if not is_square(discriminant):
            continue
        # F·B = F_K·a·K² + F_E·b·(E1 − E2)², with F·D = 0
        b = (n - F_coords[0] * a * K_sq) / (F_coords[1] * pair(cs.E12, cs.E12))
        root = Fraction(isqrt(discriminant), 36)
        for c in sorted({root, -root}, reverse=True):
            cand = BCandidate(n=n, a=a, b=b, c=c)
            B = cs.combination(a, b, c)
            if pair(B, B) != B_SQ or pair(cs.K, B) != K_DOT_B or pair(F, B) != n:
                raise InvariantViolationError(
                    "Candidate violates B·B = 0, K·B = 2 or F·B = n",
                    invariant="b_constraints",
                    value=cand.label(),
                )
            candidates.append(cand)
    return candidates


def integrality_eliminate(cand: BCandidate, cs: CsLattice = None) -> BCandidate:
    """Fill in B·C1, B·C2 and the verdict for a candidate."""
    cs = cs or build_cs_lattice()
    B = cs.combination(cand.a, cand.b, cand.c)
    B_C1 = pair(B, cs.C1)
    B_C2 = pair(B, cs.C2)
    integral = B_C1.denominator == 1 and B_C2.denominator == 1
    verdict = Verdict.SURVIVES if integral else Verdict.INTEGRALITY_FAIL
    orthogonal_curve = None
    if integral:
        orthogonal_curve = "C1" if B_C1 == 0 else "C2" if B_C2 == 0 else None
    notes = [f"B = {B}", f"B·C1 = {B_C1}", f"B·C2 = {B_C2}"]
    return BCandidate(
        n=cand.n,
        a=cand.a,
        b=cand.b,
        c=cand.c,
        verdict=verdict,
        B_dot_C1=B_C1,
        B_dot_C2=B_C2,
        orthogonal_curve=orthogonal_curve,
        notes=notes,
    )


def eliminate_all(cs: CsLattice = None) -> List[BCandidate]:
    cs = cs or build_cs_lattice()
    return [integrality_eliminate(c, cs) for c in solve_b_constraints(cs)]


def surviving_class(cs: CsLattice = None, curve: str = "C1") -> DivisorClass:
    """B for the n = 8 survivor with B·C = 0 for the chosen C."""
    cs = cs or build_cs_lattice()
    for cand in eliminate_all(cs):
        if cand.verdict == Verdict.SURVIVES and cand.orthogonal_curve == curve:
            return cs.combination(cand.a, cand.b, cand.c)
    raise InvariantViolationError(
        "No surviving candidate orthogonal to the requested curve",
        invariant="n8_survivor",
        value=curve,
    )


def brute_force_n_scan() -> List[int]:
    """Independent scan of n in 0..16 with (16 − n)n a perfect square."""
    return [n for n in N_RANGE if isqrt((16 - n) * n) ** 2 == (16 - n) * n]
