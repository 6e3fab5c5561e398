"""Cyclic quotient singularities and the adjunction replays built on them."""

from .hirzebruch_jung import (
    CyclicSingularity,
    ExceptionalChain,
    Orientation,
    ProperTransformMode,
    correction_term,
    discrepancies,
    discrepancy_correction,
    evaluate_continued_fraction,
    hj_expand,
    per_curve_correction,
    proper_transform_coeffs,
    resolution_invariants,
)
from .replay import (
    adjunction_integrality_replay,
    contracted_configuration_gram,
    contracted_configuration_is_negative_definite,
    quotient_curve_replay,
    replay_adjunction_integrality,
    replay_quotient_curve_contradiction,
)

__all__ = [
    "CyclicSingularity",
    "ExceptionalChain",
    "Orientation",
    "ProperTransformMode",
    "correction_term",
    "discrepancies",
    "discrepancy_correction",
    "evaluate_continued_fraction",
    "hj_expand",
    "per_curve_correction",
    "proper_transform_coeffs",
    "resolution_invariants",
    "adjunction_integrality_replay",
    "contracted_configuration_gram",
    "contracted_configuration_is_negative_definite",
    "quotient_curve_replay",
    "replay_adjunction_integrality",
    "replay_quotient_curve_contradiction",
]
