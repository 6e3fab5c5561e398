"""Non-computational inputs a replayed step may rest on."""

from typing import Dict, Iterable, List

AXIOMS: Dict[str, str] = {
    "vanishing": (
        "Kodaira and Kawamata-Viehweg vanishing with Serre duality: "
        "h^i(K + N) = 0 for i > 0 when N is nef and big"
    ),
    "hyperbolicity": (
        "A compact ball quotient contains no curve of arithmetic genus 0 or 1"
    ),
    "singular-fiber": (
        "A non-isotrivial fibration of a surface with c1^2 = 3c2 has a "
        "singular fiber [Li]"
    ),
    "cs-cky-input": (
        "Intersection matrix, branch data and Albanese fiber class of the "
        "Cartwright-Steger surface as computed in [CS] and [CKY]"
    ),
    "classification": (
        "Classification of fake projective planes and of their automorphism "
        "groups and quotients [PY], [CS], [Bor], [Y4]"
    ),
}


def cite(names: Iterable[str]) -> List[str]:
    """Citation statements for axiom names, sorted by name.

    Raises KeyError for a name outside the catalogue.
    """
    return [AXIOMS[name] for name in sorted(names)]
