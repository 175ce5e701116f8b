"""
Lattice
Coordinates, position classes and the cluster lattice model
"""

from .coord import Coord, Direction, direction_between, sort_coords
from .position_class import Layer, PositionClass, CENTER_CLASS, FACE_CLASS, SIDE_CLASS
from .lattice_spec import LatticeSpec, face_offsets, side_offsets, segment_cells

__all__ = [
    "Coord",
    "Direction",
    "direction_between",
    "sort_coords",
    "Layer",
    "PositionClass",
    "CENTER_CLASS",
    "FACE_CLASS",
    "SIDE_CLASS",
    "LatticeSpec",
    "face_offsets",
    "side_offsets",
    "segment_cells",
]
