"""Knotoid invariants computed from signed Gauss codes."""

from .codes import (
    CrossingInfo,
    FlatCode,
    KnotoidCode,
    Passage,
    ComponentCode,
    classify_crossings,
    evenly_intersticed,
    flat_projection,
    parse,
    reverse,
    serialize,
    spiral,
)
from .laurent import AffinePoly, ArrowMonomial, ArrowPoly, LaurentA, writhe_normalize
from .bracket import BracketReport, bracket, bracket_oracle, normalized_bracket, writhe
from .arrow import arrow_degrees, arrow_polynomial, normalized_arrow, reduce_cusps
from .affine import affine_index, arc_labels, detect_virtuality, weight_chart
from .parity import odd_writhe
from .parity_bracket import flat_parity_bracket, parity_bracket
from .closures import carter_genus, height_bounds, virtual_closure
from .moves import MoveSpec, applicable_moves, apply_move, inverse_of, random_walk
from .catalog import load_catalog, verify_entry

__all__ = [
    "AffinePoly",
    "ArrowMonomial",
    "ArrowPoly",
    "BracketReport",
    "ComponentCode",
    "CrossingInfo",
    "FlatCode",
    "KnotoidCode",
    "LaurentA",
    "Passage",
    "affine_index",
    "applicable_moves",
    "apply_move",
    "arc_labels",
    "arrow_degrees",
    "arrow_polynomial",
    "bracket",
    "bracket_oracle",
    "carter_genus",
    "classify_crossings",
    "detect_virtuality",
    "evenly_intersticed",
    "flat_parity_bracket",
    "flat_projection",
    "height_bounds",
    "inverse_of",
    "load_catalog",
    "MoveSpec",
    "normalized_arrow",
    "normalized_bracket",
    "odd_writhe",
    "parity_bracket",
    "parse",
    "random_walk",
    "reduce_cusps",
    "reverse",
    "serialize",
    "spiral",
    "verify_entry",
    "virtual_closure",
    "weight_chart",
    "writhe",
    "writhe_normalize",
]
