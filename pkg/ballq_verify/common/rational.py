"""
Exact rational helpers.

Every number that crosses a module boundary is a ``fractions.Fraction``.
Serialized values use the "p/q" string form so nothing passes through float.
"""

import re
from enum import Enum
from fractions import Fraction
from typing import Any, Union

from pydantic import BaseModel

from ..errors.exceptions import ValidationError

RationalLike = Union[Fraction, int, str]

RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an int, Fraction or "p/q" string into a Fraction.

    Floats are refused: they cannot represent the coefficients exactly.
    """
    if isinstance(value, bool):
        raise ValidationError(
            "Booleans are not rationals", field="rational", value=value
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = RATIONAL_PATTERN.match(value)
        if not match:
            raise ValidationError(
                f"Not a rational literal: {value!r}",
                field="rational",
                value=value,
                constraint="p/q",
            )
        numerator, denominator = match.group(1), match.group(2)
        if denominator is not None and int(denominator) == 0:
            raise ValidationError(
                f"Zero denominator in {value!r}",
                field="rational",
                value=value,
                constraint="q>0",
            )
        return Fraction(int(numerator), int(denominator or 1))
    raise ValidationError(
        f"Unsupported rational type: {type(value).__name__}",
        field="rational",
        value=str(value),
    )


def format_rational(value: RationalLike) -> str:
    """Render a rational in lowest terms, "p/q" or "p"."""
    return str(parse_rational(value))


def is_rational_literal(value: str) -> bool:
    return bool(RATIONAL_PATTERN.match(value))


def is_integral(value: RationalLike) -> bool:
    return parse_rational(value).denominator == 1


def _sort_key(item: Any):
    canonical = canonicalize(item)
    if isinstance(canonical, str) and is_rational_literal(canonical):
        return (0, parse_rational(canonical), "")
    return (1, Fraction(0), repr(canonical))


def canonicalize(value: Any) -> Any:
    """Normal form used for exact comparison and for JSON output.

    ints and Fractions become "p/q" strings, rational strings are reduced,
    enums become their values, tuples become lists, sets become sorted lists
    and mapping keys become strings. Everything else is left alone.
    """
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, Enum):
        return canonicalize(value.value)
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, str):
        if is_rational_literal(value):
            return format_rational(value)
        return value
    if isinstance(value, BaseModel):
        return canonicalize(value.model_dump())
    if isinstance(value, dict):
        return {str(canonicalize(k)): canonicalize(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [canonicalize(v) for v in sorted(value, key=_sort_key)]
    if isinstance(value, (list, tuple)):
        return [canonicalize(v) for v in value]
    return value
