"""Rendering of replay results and the report exit status."""

import json
from typing import Any, List, Sequence

from ..common.results import CheckResult, Status
from ..common.utils import format_table

VALUE_WIDTH = 40


def _short(value: Any) -> str:
    text = value if isinstance(value, str) else json.dumps(value, ensure_ascii=False)
    if len(text) > VALUE_WIDTH:
        return text[: VALUE_WIDTH - 3] + "..."
    return text


def summary_line(results: Sequence[CheckResult]) -> str:
    counts = {status: 0 for status in Status}
    for result in results:
        counts[result.status] += 1
    return (
        f"{len(results)} checks: {counts[Status.MATCH]} MATCH, "
        f"{counts[Status.FLAGGED]} FLAGGED, {counts[Status.MISMATCH]} MISMATCH"
    )


def format_text(results: Sequence[CheckResult]) -> str:
    """Table of results followed by the summary line."""
    headers = ["Check", "Status", "Provenance", "Expected", "Computed"]
    rows: List[List[str]] = [
        [
            r.check_id,
            r.status.value,
            r.expected.provenance.value,
            _short(r.expected.value),
            _short(r.computed),
        ]
        for r in results
    ]
    return format_table(headers, rows) + "\n\n" + summary_line(results)


def format_json(results: Sequence[CheckResult]) -> str:
    """Array of CheckResult objects; rationals appear as "p/q" strings."""
    return json.dumps(
        [r.to_json_dict() for r in results], indent=2, ensure_ascii=False
    )


def exit_code(results: Sequence[CheckResult], fail_on_flagged: bool = False) -> int:
    """1 when any check is a MISMATCH (or FLAGGED if requested), else 0."""
    failing = {Status.MISMATCH}
    if fail_on_flagged:
        failing.add(Status.FLAGGED)
    return 1 if any(r.status in failing for r in results) else 0
