"""Geometric models, their oracles, and conversions to and from words."""

from .codec import decode_model, encode_model, is_interval_enumeration
from .families import FAMILIES, family_for_language, get_family
from .models import (
    BoxSystem,
    CircleGonSystem,
    CircularArcSystem,
    EnumerationScheme,
    IntervalSystem,
    LinearOrderFamily,
    PITriangleSystem,
    TrackSystem,
    TrapezoidSystem,
    Triangle,
    model_vertices,
)
from .oracles import oracle_graph
from .perturb import perturb_general_position

__all__ = [
    "BoxSystem", "CircleGonSystem", "CircularArcSystem", "EnumerationScheme",
    "IntervalSystem", "LinearOrderFamily", "PITriangleSystem", "TrackSystem",
    "TrapezoidSystem", "Triangle", "FAMILIES", "decode_model", "encode_model",
    "family_for_language", "get_family", "is_interval_enumeration", "model_vertices",
    "oracle_graph", "perturb_general_position",
]
