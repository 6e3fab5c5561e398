"""
Fake projective plane registry.

The 50 lattices of the classification, one row each, tagged with the case of
the very-ampleness argument that handles them. Names are plain-text
transliterations of the published table:

    \\emptyset          -> ∅
    \\{ ... \\}          -> { ... }
    X_{21}              -> X_21
    {\\mathcal C}_{18}   -> C18
    7'_7                -> 7p_7

Two typographic slips in the table are normalized: a doubled closing
parenthesis after (a=2,p=3,{2},D_3) and a missing opening parenthesis before
(C20,{v_2},{3-},D_3).
"""

import csv
import io
import json
from enum import Enum
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict

from ..errors.exceptions import RegistryDataError
from ..errors.handlers import validate_file_exists, validate_required_columns
from ..log_config.logger import get_logger

logger = get_logger(__name__)

DATA_FILE = Path(__file__).parent / "data" / "fpp_registry.csv"

COLUMNS = [
    "raw_name",
    "family",
    "prime_or_place",
    "torsion_set",
    "subgroup_tag",
    "case",
]

FAMILIES = ("a=1", "a=2", "a=7", "a=15", "a=23", "C2", "C10", "C18", "C20")

EXPECTED_RECORDS = 50

# |Aut(M)| for a fake projective plane M
AUT_ORDERS = (1, 3, 9, 21)

UNSPECIFIED = "unspecified-in-paper"


class FppCase(str, Enum):
    B = "b"
    C = "c"
    D = "d"
    MIN_TYPE = "min"

    @property
    def display(self) -> str:
        return "min type" if self is FppCase.MIN_TYPE else f"({self.value})"


class FppRecord(BaseModel):
    """One row of the registry."""

    model_config = ConfigDict(frozen=True)

    raw_name: str
    family: str
    prime_or_place: str
    torsion_set: str
    subgroup_tag: Optional[str] = None
    case: FppCase

    def composed_name(self) -> str:
        parts = [self.family, self.prime_or_place, self.torsion_set]
        if self.subgroup_tag:
            parts.append(self.subgroup_tag)
        return "(" + ",".join(parts) + ")"


class CoveringContext(BaseModel):
    model_config = ConfigDict(frozen=True)

    quotient: str
    companion: str
    degree: int


# (a=7,p=2,∅,7_21) covers X = M/Aut with |Aut| = 21; the companion M' is a
# regular cover of the same X
KNOWN_COVERINGS = {
    "(a=7,p=2,∅,7_21)": CoveringContext(
        quotient="(a=7,p=2,∅)", companion="(a=7,p=2,∅,D_3,2_3)", degree=21
    ),
}


def _record_from_row(row: dict, row_num: int, source: str) -> FppRecord:
    values = {key: (row.get(key) or "").strip() for key in COLUMNS}
    for key in ("raw_name", "family", "prime_or_place", "torsion_set", "case"):
        if not values[key]:
            raise RegistryDataError(
                f"Empty {key} in row {row_num}",
                file_path=source,
                row_number=row_num,
                column=key,
            )
    if values["family"] not in FAMILIES:
        raise RegistryDataError(
            f"Unknown family {values['family']!r} in row {row_num}",
            file_path=source,
            row_number=row_num,
            column="family",
        )
    try:
        case = FppCase(values["case"].lower())
    except ValueError:
        raise RegistryDataError(
            f"Unknown case {values['case']!r} in row {row_num}",
            file_path=source,
            row_number=row_num,
            column="case",
        )

    record = FppRecord(
        raw_name=values["raw_name"],
        family=values["family"],
        prime_or_place=values["prime_or_place"],
        torsion_set=values["torsion_set"],
        subgroup_tag=values["subgroup_tag"] or None,
        case=case,
    )
    if record.composed_name() != record.raw_name:
        raise RegistryDataError(
            f"raw_name does not match its columns in row {row_num}: "
            f"{record.raw_name} != {record.composed_name()}",
            file_path=source,
            row_number=row_num,
            column="raw_name",
        )
    if case is FppCase.MIN_TYPE and record.subgroup_tag:
        raise RegistryDataError(
            f"Minimal-type lattice with a subgroup tag in row {row_num}",
            file_path=source,
            row_number=row_num,
            column="subgroup_tag",
        )
    return record


def parse_registry_csv(
    text: str, source: str = "data", expected_count: Optional[int] = EXPECTED_RECORDS
) -> List[FppRecord]:
    """Parse registry CSV text; errors carry the offending row number."""
    records: List[FppRecord] = []
    seen = set()
    try:
        reader = csv.DictReader(io.StringIO(text))
        validate_required_columns(reader.fieldnames, COLUMNS, source)

        # Row 1 is the header
        for row_num, row in enumerate(reader, start=2):
            record = _record_from_row(row, row_num, source)
            if record.raw_name in seen:
                raise RegistryDataError(
                    f"Duplicate raw_name {record.raw_name} in row {row_num}",
                    file_path=source,
                    row_number=row_num,
                    column="raw_name",
                )
            seen.add(record.raw_name)
            records.append(record)
    except csv.Error as e:
        raise RegistryDataError(f"CSV parsing error: {e}", file_path=source)

    if expected_count is not None and len(records) != expected_count:
        raise RegistryDataError(
            f"Expected {expected_count} lattices, found {len(records)}",
            file_path=source,
        )
    return records


def load_registry(data_file: Union[str, Path, None] = None) -> List[FppRecord]:
    """All records in table order."""
    path = Path(data_file) if data_file else DATA_FILE
    validate_file_exists(str(path))
    text = path.read_text(encoding="utf-8")
    records = parse_registry_csv(text, source=str(path))
    logger.debug("Loaded registry", file=str(path), records=len(records))
    return records


def dump_registry_csv(records: Iterable[FppRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow(
            {
                "raw_name": record.raw_name,
                "family": record.family,
                "prime_or_place": record.prime_or_place,
                "torsion_set": record.torsion_set,
                "subgroup_tag": record.subgroup_tag or "",
                "case": record.case.value,
            }
        )
    return buffer.getvalue()


def records_to_json(records: Iterable[FppRecord]) -> str:
    return json.dumps(
        [record.model_dump(mode="json") for record in records],
        indent=2,
        ensure_ascii=False,
    )


def query_by_case(
    records: Sequence[FppRecord], case: Union[FppCase, str]
) -> List[FppRecord]:
    case = FppCase(case)
    return [r for r in records if r.case is case]


def partition_counts(records: Sequence[FppRecord]) -> Tuple[int, int, int, int]:
    """(|B|, |C|, |D|, |MinType|)."""
    return tuple(len(query_by_case(records, c)) for c in FppCase)


def covering_context(
    record: FppRecord,
) -> Union[CoveringContext, str, None]:
    """Quotient and regular-cover companion for a case (c) or (d) lattice.

    Case (b) and minimal-type lattices have no separate companion.
    """
    if record.case not in (FppCase.C, FppCase.D):
        return None
    return KNOWN_COVERINGS.get(record.raw_name, UNSPECIFIED)
