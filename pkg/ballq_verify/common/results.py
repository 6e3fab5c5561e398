"""Replayed proof step results shared by calculators and the report runner."""

from enum import Enum
from typing import Any, List

from pydantic import BaseModel, ConfigDict, Field

from .rational import canonicalize


class Status(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    FLAGGED = "FLAGGED"


class Provenance(str, Enum):
    PAPER = "PAPER"
    TRIVIAL = "TRIVIAL"
    DERIVED = "DERIVED"


class Expected(BaseModel):
    """Expected value of a check together with where it comes from."""

    model_config = ConfigDict(frozen=True)

    value: Any
    provenance: Provenance


class CheckResult(BaseModel):
    """One replayed proof step.

    ``expected.value`` and ``computed`` are stored in canonical form, so
    status is decided by plain equality.
    ``axioms_used`` holds the cited statements, not the catalogue names.
    """

    model_config = ConfigDict(frozen=True)

    check_id: str
    scope: str
    paper_anchor: str
    expected: Expected
    computed: Any
    status: Status
    axioms_used: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    def to_json_dict(self) -> dict:
        return self.model_dump(mode="json")


def decide_status(expected: Any, computed: Any, disputed: bool = False) -> Status:
    """MATCH on exact equality; otherwise FLAGGED for disputed steps."""
    if canonicalize(expected) == canonicalize(computed):
        return Status.MATCH
    return Status.FLAGGED if disputed else Status.MISMATCH


def build_result(
    check_id: str,
    scope: str,
    paper_anchor: str,
    expected: Any,
    provenance: Provenance,
    computed: Any,
    *,
    disputed: bool = False,
    axioms_used: List[str] = None,
    notes: List[str] = None,
) -> CheckResult:
    return CheckResult(
        check_id=check_id,
        scope=scope,
        paper_anchor=paper_anchor,
        expected=Expected(value=canonicalize(expected), provenance=provenance),
        computed=canonicalize(computed),
        status=decide_status(expected, computed, disputed),
        axioms_used=list(axioms_used or []),
        notes=list(notes or []),
    )
