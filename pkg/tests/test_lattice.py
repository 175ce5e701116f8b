"""
Lattice model: sizes, classification, cell qubits, adjacency
"""

import random

import pytest

from src.errors import LatticeError
from src.lattice import Coord, Direction, LatticeSpec, PositionClass, direction_between


@pytest.mark.parametrize("counts, expected", [((1, 1, 1), 64), ((2, 3, 4), 480), ((1, 1, 2), 96)])
def test_total_positions(counts, expected):
    assert LatticeSpec(*counts).total_positions() == expected


def test_total_positions_matches_enumeration_for_random_specs():
    rng = random.Random(7)
    for _ in range(20):
        spec = LatticeSpec(rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4))
        expected = (2 * spec.mc_w + 2) * (2 * spec.mc_h + 2) * (2 * spec.mc_t + 2)
        assert spec.total_positions() == expected
        assert len(spec.qubit_positions()) + len(spec.center_positions()) == expected
        assert sum(spec.class_counts().values()) == expected


@pytest.mark.parametrize("value", [0, -1, 2.5])
def test_invalid_spec_rejected(value):
    with pytest.raises(LatticeError):
        LatticeSpec(value, 1, 1)


@pytest.mark.parametrize(
    "coord, expected",
    [
        ((1, 1, 1), PositionClass.PRIMAL_CENTER),
        ((2, 1, 1), PositionClass.PRIMAL_FACE),
        ((2, 2, 1), PositionClass.DUAL_FACE),
        ((2, 2, 2), PositionClass.DUAL_CENTER),
    ],
)
def test_classify(coord, expected):
    assert LatticeSpec(1, 1, 1).classify(Coord(*coord)) is expected


def test_classify_out_of_bounds():
    with pytest.raises(LatticeError, match="outside"):
        LatticeSpec(1, 1, 1).classify(Coord(4, 0, 0))


def test_class_counts_of_single_cell_lattice():
    counts = LatticeSpec(1, 1, 1).class_counts()
    assert counts[PositionClass.PRIMAL_CENTER] == 8
    assert counts[PositionClass.PRIMAL_FACE] == 24
    assert counts[PositionClass.DUAL_FACE] == 24
    assert counts[PositionClass.DUAL_CENTER] == 8


def test_qubit_positions_sorted_by_t_h_w():
    positions = LatticeSpec(1, 1, 1).qubit_positions()
    assert positions[0] == Coord(1, 0, 0)
    assert positions == sorted(positions, key=Coord.sort_key)
    assert len(positions) == 48


def test_face_qubits_of_primal_center():
    spec = LatticeSpec(1, 1, 1)
    faces = spec.face_qubits(Coord(1, 1, 1))
    assert faces == {(0, 1, 1), (2, 1, 1), (1, 0, 1), (1, 2, 1), (1, 1, 0), (1, 1, 2)}
    assert all(spec.classify(q) is PositionClass.PRIMAL_FACE for q in faces)


def test_face_qubits_of_dual_center():
    spec = LatticeSpec(1, 1, 1)
    faces = spec.face_qubits(Coord(2, 2, 2))
    assert len(faces) == 6
    assert all(spec.classify(q) is PositionClass.DUAL_FACE for q in faces)


def test_face_qubits_require_center():
    with pytest.raises(LatticeError, match="not a cell center"):
        LatticeSpec(1, 1, 1).face_qubits(Coord(1, 1, 2))


def test_side_qubits_disjoint_from_faces():
    spec = LatticeSpec(2, 2, 2)
    center = Coord(3, 3, 3)
    sides = spec.side_qubits(center)
    assert len(sides) == 12
    assert all(q.even_count() == 2 for q in sides)
    assert not sides & spec.face_qubits(center)
    assert len(spec.cell_qubits(center)) == 18


def test_unit_cell_holds_18_of_27_positions_as_qubits():
    spec = LatticeSpec(2, 2, 2)
    block = [Coord(3 + dw, 3 + dh, 3 + dt) for dw in (-1, 0, 1) for dh in (-1, 0, 1) for dt in (-1, 0, 1)]
    qubits = [c for c in block if spec.classify(c).is_qubit]
    assert len(block) == 27
    assert set(qubits) == spec.cell_qubits(Coord(3, 3, 3))


@pytest.mark.parametrize(
    "begin, end, expected",
    [
        ((1, 1, 1), (1, 1, 7), [(1, 1, 1), (1, 1, 3), (1, 1, 5), (1, 1, 7)]),
        ((5, 1, 1), (1, 1, 1), [(5, 1, 1), (3, 1, 1), (1, 1, 1)]),
    ],
)
def test_cells_on_segment(begin, end, expected):
    cells = LatticeSpec(4, 4, 4).cells_on_segment(Coord(*begin), Coord(*end))
    assert cells == [Coord(*c) for c in expected]


def test_cells_on_segment_reversed():
    spec = LatticeSpec(4, 4, 4)
    forward = spec.cells_on_segment(Coord(1, 3, 1), Coord(7, 3, 1))
    assert spec.cells_on_segment(Coord(7, 3, 1), Coord(1, 3, 1)) == forward[::-1]


@pytest.mark.parametrize(
    "begin, end",
    [
        ((1, 1, 1), (2, 1, 1)),  # not a center
        ((1, 1, 1), (2, 2, 2)),  # different sublattices
        ((1, 1, 1), (1, 1, 1)),  # zero length
        ((1, 1, 1), (3, 3, 1)),  # diagonal
    ],
)
def test_cells_on_segment_errors(begin, end):
    with pytest.raises(LatticeError):
        LatticeSpec(4, 4, 4).cells_on_segment(Coord(*begin), Coord(*end))


def test_entangled_neighbors_interior():
    neighbors = LatticeSpec(2, 2, 2).entangled_neighbors(Coord(2, 1, 1))
    assert neighbors == {(2, 0, 1), (2, 2, 1), (2, 1, 0), (2, 1, 2)}


def test_entangled_neighbors_clipped_at_boundary():
    assert len(LatticeSpec(2, 2, 2).entangled_neighbors(Coord(0, 2, 1))) == 3


def test_entangled_neighbors_requires_qubit():
    with pytest.raises(LatticeError, match="not a qubit"):
        LatticeSpec(2, 2, 2).entangled_neighbors(Coord(1, 1, 1))


def test_entanglement_graph_is_bipartite():
    spec = LatticeSpec(2, 2, 2)
    for q in spec.qubit_positions():
        for p in spec.entangled_neighbors(q):
            assert p.even_count() != q.even_count()


def test_direction_between():
    assert direction_between(Coord(1, 1, 1), Coord(1, 1, 5)) == Direction(2, 1)
    assert str(direction_between(Coord(1, 5, 1), Coord(1, 1, 1))) == "-h"
    with pytest.raises(ValueError):
        direction_between(Coord(1, 1, 1), Coord(3, 3, 1))


def test_coord_parse_and_str():
    assert Coord.parse("3,5,7") == Coord(3, 5, 7)
    assert str(Coord(3, 5, 7)) == "3,5,7"
    with pytest.raises(ValueError):
        Coord.parse("3,5")
