"""Shared helpers: output formatting, exact rationals and check results."""

from .rational import canonicalize, format_rational, is_integral, parse_rational
from .results import CheckResult, Expected, Provenance, Status, build_result
from .utils import format_table, handle_success

__all__ = [
    "canonicalize",
    "format_rational",
    "is_integral",
    "parse_rational",
    "CheckResult",
    "Expected",
    "Provenance",
    "Status",
    "build_result",
    "format_table",
    "handle_success",
]
