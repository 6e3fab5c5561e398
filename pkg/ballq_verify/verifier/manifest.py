"""
Declarative check manifest.

Each entry names a registered calculator, its parameters, the expected value
with its provenance, and the axioms the step relies on. Adding a check means
adding an entry; calculators stay untouched.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..common.axioms import AXIOMS
from ..common.results import Provenance
from ..config.settings import VALID_SCOPES
from ..errors.exceptions import ManifestError, UnknownCheckError
from ..errors.handlers import safe_operation
from ..log_config.logger import get_logger

logger = get_logger(__name__)

MANIFEST_FILE = Path(__file__).parent / "data" / "checks.yaml"

CHECK_SCOPES = [scope for scope in VALID_SCOPES if scope != "all"]


class ExpectedSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: Any
    provenance: Provenance


class CheckSpec(BaseModel):
    """One manifest entry."""

    model_config = ConfigDict(frozen=True)

    id: str
    scope: str
    calculator: str
    params: Dict[str, Any] = Field(default_factory=dict)
    anchor: str
    expected: ExpectedSpec
    axioms: List[str] = Field(default_factory=list)
    disputed: bool = False
    notes: List[str] = Field(default_factory=list)
    aliases: List[str] = Field(default_factory=list)

    @field_validator("scope")
    @classmethod
    def validate_scope(cls, v):
        if v not in CHECK_SCOPES:
            raise ValueError(f"Scope must be one of: {CHECK_SCOPES}")
        return v

    @field_validator("anchor")
    @classmethod
    def validate_anchor(cls, v):
        if not v.strip():
            raise ValueError("anchor must carry a nonempty quote")
        return v


class Manifest(BaseModel):
    model_config = ConfigDict(frozen=True)

    checks: List[CheckSpec]

    def check_ids(self) -> List[str]:
        return sorted(check.id for check in self.checks)

    def get(self, check_id: str) -> CheckSpec:
        for check in self.checks:
            if check.id == check_id or check_id in check.aliases:
                return check
        raise UnknownCheckError(check_id, self.check_ids())

    def select(self, scope: str = "all") -> List[CheckSpec]:
        """Checks in scope, ordered by id."""
        if scope not in VALID_SCOPES:
            raise ManifestError(f"Unknown scope: {scope}")
        chosen = [c for c in self.checks if scope == "all" or c.scope == scope]
        return sorted(chosen, key=lambda c: c.id)


def _validate_references(manifest: Manifest, source: str) -> None:
    seen = set()
    for check in manifest.checks:
        for name in [check.id, *check.aliases]:
            if name in seen:
                raise ManifestError(
                    f"Duplicate check id: {name}", file_path=source, check_id=check.id
                )
            seen.add(name)
        unknown = [a for a in check.axioms if a not in AXIOMS]
        if unknown:
            raise ManifestError(
                f"Check {check.id} uses undeclared axioms: {', '.join(unknown)}",
                file_path=source,
                check_id=check.id,
            )


def parse_manifest(data: Dict[str, Any], source: str = "manifest") -> Manifest:
    if not isinstance(data, dict):
        raise ManifestError("Manifest must be a mapping", file_path=source)
    try:
        manifest = Manifest.model_validate(data)
    except ValidationError as e:
        raise ManifestError(f"Invalid manifest: {e}", file_path=source)
    _validate_references(manifest, source)
    return manifest


def load_manifest(manifest_file: Union[str, Path, None] = None) -> Manifest:
    """Load the shipped manifest, or an override file."""
    path = Path(manifest_file) if manifest_file else MANIFEST_FILE
    if not path.is_file():
        raise ManifestError(f"Manifest not found: {path}", file_path=str(path))
    with safe_operation("load check manifest", logger):
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ManifestError(f"YAML parsing error: {e}", file_path=str(path))

        manifest = parse_manifest(data, source=str(path))
    logger.debug("Loaded check manifest", file=str(path), checks=len(manifest.checks))
    return manifest


_manifest: Optional[Manifest] = None


def get_manifest() -> Manifest:
    """The shipped manifest, loaded once."""
    global _manifest
    if _manifest is None:
        _manifest = load_manifest()
    return _manifest
