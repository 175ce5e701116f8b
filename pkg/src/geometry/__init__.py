"""
Geometry
Typed segments, logical-qubit loops and the geometry document format
"""

from .segment import Segment, SegmentType
from .logical_qubit import LogicalQubitGeometry, normalize_segments
from .parser import CircuitGeometry, parse, serialize

__all__ = [
    "Segment",
    "SegmentType",
    "LogicalQubitGeometry",
    "normalize_segments",
    "CircuitGeometry",
    "parse",
    "serialize",
]
