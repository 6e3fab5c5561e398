"""Reider–Bogomolov case enumeration."""

from .enumeration import (
    CaseTag,
    ExtensionData,
    ReiderCandidate,
    bogomolov_unstable,
    enumerate_destabilizations,
    exclude_low_genus,
    hodge_delta,
    surviving,
)

__all__ = [
    "CaseTag",
    "ExtensionData",
    "ReiderCandidate",
    "bogomolov_unstable",
    "enumerate_destabilizations",
    "exclude_low_genus",
    "hodge_delta",
    "surviving",
]
