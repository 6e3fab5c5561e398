"""JSON import/export for intersection lattices.

Format: ``{"basis": [names], "gram": [["p/q", ...], ...]}`` with every
entry written as a rational string.
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

from ..common.rational import format_rational
from ..errors.exceptions import LatticeError
from ..errors.handlers import handle_validation_errors
from .intersection import IntersectionLattice


def lattice_to_dict(lattice: IntersectionLattice) -> Dict[str, Any]:
    return {
        "basis": list(lattice.basis_labels),
        "gram": [[format_rational(x) for x in row] for row in lattice.gram],
    }


@handle_validation_errors
def lattice_from_dict(
    data: Dict[str, Any], name: str = "lattice"
) -> IntersectionLattice:
    try:
        basis = data["basis"]
        gram = data["gram"]
    except (KeyError, TypeError):
        raise LatticeError(
            "Lattice document needs 'basis' and 'gram' keys",
            {"keys": sorted(data) if isinstance(data, dict) else None},
        )
    return IntersectionLattice(basis, gram, name=data.get("name", name))


def dump_lattice_json(lattice: IntersectionLattice, indent: int = 2) -> str:
    return json.dumps(lattice_to_dict(lattice), indent=indent, ensure_ascii=False)


def load_lattice_json(source: Union[str, Path]) -> IntersectionLattice:
    """Load from a JSON string or a path to a JSON file."""
    if isinstance(source, Path) or not str(source).lstrip().startswith("{"):
        path = Path(source)
        text = path.read_text(encoding="utf-8")
        name = path.stem
    else:
        text = str(source)
        name = "lattice"
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise LatticeError(f"Invalid lattice JSON: {e}")
    return lattice_from_dict(data, name=name)
