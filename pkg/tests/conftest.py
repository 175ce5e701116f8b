"""
Shared fixtures: reference geometries used across the test modules
"""

from pathlib import Path

import pytest

from src.geometry import LogicalQubitGeometry, Segment, SegmentType, parse
from src.graphs import CycleGraph
from src.lattice import Coord, Layer, LatticeSpec

CIRCUITS = Path(__file__).resolve().parent.parent / "circuits"

# Ten-vertex helix A..J
HELIX = {
    "A": Coord(1, 1, 1),
    "B": Coord(9, 1, 1),
    "C": Coord(9, 9, 1),
    "D": Coord(9, 9, 3),
    "E": Coord(13, 9, 3),
    "F": Coord(13, 9, 5),
    "G": Coord(9, 9, 5),
    "H": Coord(9, 9, 9),
    "I": Coord(1, 9, 9),
    "J": Coord(1, 1, 9),
}

# Reduce where the mirrored vertices are exactly the neighbours
REDUCE_TO_NEIGHBOURS = {
    "A": Coord(1, 1, 1),
    "B": Coord(5, 1, 1),
    "C": Coord(5, 5, 1),
    "D": Coord(9, 5, 1),
    "E": Coord(9, 1, 1),
    "F": Coord(13, 1, 1),
    "G": Coord(13, 9, 1),
    "H": Coord(1, 9, 1),
}

# Reduce that inserts one vertex and deletes one neighbour
REDUCE_WITH_INSERT = {
    "A": Coord(1, 9, 1),
    "B": Coord(5, 9, 1),
    "C": Coord(5, 13, 1),
    "D": Coord(9, 13, 1),
    "E": Coord(9, 5, 1),
    "F": Coord(13, 5, 1),
    "G": Coord(13, 17, 1),
    "H": Coord(1, 17, 1),
}

L_SHAPE = [Coord(1, 1, 1), Coord(9, 1, 1), Coord(9, 5, 1), Coord(5, 5, 1), Coord(5, 9, 1), Coord(1, 9, 1)]
RECTANGLE = [Coord(1, 1, 1), Coord(5, 1, 1), Coord(5, 5, 1), Coord(1, 5, 1)]


def loop_geometry(qubit_id, layer, coords, types=None, lattice=None):
    """Closed loop through coords; edge i gets types[i] (default all DEFECT)"""
    coords = [Coord(*c) for c in coords]
    types = types or [SegmentType.DEFECT] * len(coords)
    segments = [
        Segment(coords[i], coords[(i + 1) % len(coords)], types[i]) for i in range(len(coords))
    ]
    return LogicalQubitGeometry.build(qubit_id, layer, segments, lattice)


def staircase(m, origin=(1, 1, 1)):
    """+w,+h repeated m times, then +t, -w*m, -h*m, -t (2m + 4 vertices)"""
    current = Coord(*origin)
    coords = [current]
    for _ in range(m):
        current = current.shifted(0, 2)
        coords.append(current)
        current = current.shifted(1, 2)
        coords.append(current)
    for axis, delta in ((2, 2), (0, -2 * m), (1, -2 * m)):
        current = current.shifted(axis, delta)
        coords.append(current)
    return coords


@pytest.fixture
def helix_graph():
    return CycleGraph.from_coordinates(HELIX.values())


@pytest.fixture
def helix_lattice():
    return LatticeSpec(7, 5, 5)


@pytest.fixture
def identity_text():
    return (CIRCUITS / "identity.tqc").read_text()


@pytest.fixture
def identity_circuit(identity_text):
    return parse(identity_text)


@pytest.fixture
def cnot_path():
    return CIRCUITS / "cnot.tqc"


@pytest.fixture
def cnot_circuit(cnot_path):
    return parse(cnot_path.read_text())


@pytest.fixture
def identity_defects():
    return {Coord(w, 3, t) for w in (3, 7) for t in range(0, 11, 2)}


@pytest.fixture
def identity_sheet():
    return {Coord(w, 3, t) for w in (4, 6) for t in (2, 4, 6, 8)}


@pytest.fixture
def primal():
    return Layer.PRIMAL
