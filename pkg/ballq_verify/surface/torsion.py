"""Torsion line bundles and divisors polarized by them.

Torsion classes are numerically trivial: they never change an
intersection number. They matter only for bookkeeping such as which
products of sections land in which linear system.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..errors.exceptions import ValidationError
from ..lattice.intersection import DivisorClass, pair


@dataclass(frozen=True)
class TorsionClass:
    """``power`` times a torsion generator ``label`` of the given order.

    ``order=None`` means the order is unknown; powers then add without
    reduction.
    """

    label: str
    order: Optional[int] = None
    power: int = 1

    def __post_init__(self):
        if self.order is not None:
            if self.order < 1:
                raise ValidationError(
                    "Torsion order must be positive",
                    field="order",
                    value=self.order,
                    constraint=">= 1",
                )
            object.__setattr__(self, "power", self.power % self.order)

    def __add__(self, other: "TorsionClass") -> "TorsionClass":
        if not isinstance(other, TorsionClass):
            return NotImplemented
        if other.label != self.label or other.order != self.order:
            raise ValidationError(
                "Cannot add torsion classes with different generators",
                field="label",
                value=f"{self.label}/{other.label}",
            )
        return TorsionClass(self.label, self.order, self.power + other.power)

    def __mul__(self, n: int) -> "TorsionClass":
        return TorsionClass(self.label, self.order, self.power * n)

    __rmul__ = __mul__

    def is_trivial(self) -> bool:
        return self.power == 0

    def pair(self, _other: object = None) -> Fraction:
        return Fraction(0)

    def __str__(self) -> str:
        if self.power == 0:
            return "0"
        return self.label if self.power == 1 else f"{self.power}{self.label}"


@dataclass(frozen=True)
class PolarizedDivisor:
    """A numerical class plus an optional torsion twist."""

    numerical: DivisorClass
    torsion: Optional[TorsionClass] = None

    def __add__(
        self, other: Union["PolarizedDivisor", DivisorClass, TorsionClass]
    ) -> "PolarizedDivisor":
        if isinstance(other, DivisorClass):
            return PolarizedDivisor(self.numerical + other, self.torsion)
        if isinstance(other, TorsionClass):
            return PolarizedDivisor(self.numerical, _add_torsion(self.torsion, other))
        if isinstance(other, PolarizedDivisor):
            return PolarizedDivisor(
                self.numerical + other.numerical,
                _add_torsion(self.torsion, other.torsion),
            )
        return NotImplemented

    def __mul__(self, n: int) -> "PolarizedDivisor":
        torsion = self.torsion * n if self.torsion is not None else None
        return PolarizedDivisor(self.numerical * n, torsion)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.torsion is None or self.torsion.is_trivial():
            return str(self.numerical)
        return f"{self.numerical} + {self.torsion}"


def _add_torsion(
    left: Optional[TorsionClass], right: Optional[TorsionClass]
) -> Optional[TorsionClass]:
    if left is None:
        return right
    if right is None:
        return left
    return left + right


Divisorial = Union[DivisorClass, PolarizedDivisor]


def numerical_part(divisor: Divisorial) -> DivisorClass:
    if isinstance(divisor, PolarizedDivisor):
        return divisor.numerical
    return divisor


def pair_polarized(u: Divisorial, v: Divisorial) -> Fraction:
    """Pairing that ignores torsion parts."""
    return pair(numerical_part(u), numerical_part(v))
