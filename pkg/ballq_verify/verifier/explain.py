"""Human-readable derivation traces for single checks."""

import json
from typing import List, Optional

from ..common.results import CheckResult
from .manifest import Manifest, get_manifest
from .runner import evaluate_check


def _render(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, ensure_ascii=False)


def explain(check_id: str, manifest: Optional[Manifest] = None) -> str:
    """Inputs, derivation steps and conclusion of one check.

    Raises UnknownCheckError listing the valid ids.
    """
    manifest = manifest or get_manifest()
    spec = manifest.get(check_id)
    result: CheckResult = evaluate_check(spec)

    lines: List[str] = [
        f"{spec.id} [{spec.scope}]",
        f"Anchor: {result.paper_anchor}",
        f"Calculator: {spec.calculator}",
    ]
    if spec.params:
        params = ", ".join(f"{k}={_render(v)}" for k, v in spec.params.items())
        lines.append(f"Inputs: {params}")
    if spec.axioms:
        lines.append("Axioms:")
        lines.extend(
            f"  - {name}: {text}"
            for name, text in zip(sorted(spec.axioms), result.axioms_used)
        )

    lines.append("Derivation:")
    lines.extend(f"  {note}" for note in result.notes)

    lines.append(
        f"Expected: {_render(result.expected.value)} "
        f"({result.expected.provenance.value})"
    )
    lines.append(f"Computed: {_render(result.computed)}")
    lines.append(f"Status: {result.status.value}")
    return "\n".join(lines)
