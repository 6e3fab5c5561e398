"""Fake projective plane registry."""

from .loader import (
    AUT_ORDERS,
    CoveringContext,
    FppCase,
    FppRecord,
    covering_context,
    dump_registry_csv,
    load_registry,
    parse_registry_csv,
    partition_counts,
    query_by_case,
    records_to_json,
)

__all__ = [
    "AUT_ORDERS",
    "CoveringContext",
    "FppCase",
    "FppRecord",
    "covering_context",
    "dump_registry_csv",
    "load_registry",
    "parse_registry_csv",
    "partition_counts",
    "query_by_case",
    "records_to_json",
]
