"""
Sheet finding: rewrite rules, sub-sheet search and sheet assembly
"""

import pytest

from src.errors import GraphError, SheetFindingError
from src.geometry import CircuitGeometry
from src.graphs import CycleGraph
from src.lattice import Coord, Layer, LatticeSpec
from src.mapping import (
    SubSheet,
    assemble_sheet,
    boundingbox,
    can_reduce,
    collapse_duplicates,
    find_subsheets,
    map_tubes,
    reduce,
    reshape,
    sheet_qubits,
    sheets_equivalent,
    xor_sheets,
)
from src.mapping_event_handler import MappingEventHandler
from src.systems.events import EventBus, MappingEvent
from src.verification import SHEET, verify_surface
from tests.conftest import HELIX, L_SHAPE, RECTANGLE, REDUCE_TO_NEIGHBOURS, REDUCE_WITH_INSERT, staircase


def _graph(named):
    return CycleGraph.from_coordinates(named.values())


def _mapped_sheet(graph, start=None):
    qubit_tuple = map_tubes(graph, Layer.PRIMAL, "s")
    result = find_subsheets(graph, start, "s")
    assemble_sheet(result.subsheets, qubit_tuple)
    return qubit_tuple, result


# ==================== SUB-SHEETS ====================


def test_subsheet_box_ignores_corner_order():
    ss = SubSheet(Coord(5, 1, 3), Coord(1, 5, 1))
    assert ss.box() == (Coord(1, 1, 1), Coord(5, 5, 3))
    assert SubSheet(Coord(1, 5, 1), Coord(5, 1, 3)).box() == ss.box()


@pytest.mark.parametrize(
    "corners, degenerate",
    [
        (((1, 1, 1), (5, 5, 1)), False),
        (((1, 1, 1), (5, 1, 1)), True),
        (((1, 1, 1), (1, 1, 1)), True),
    ],
)
def test_subsheet_is_degenerate(corners, degenerate):
    assert SubSheet(Coord(*corners[0]), Coord(*corners[1])).is_degenerate is degenerate


def test_boundingbox_of_rectangle():
    box = boundingbox(SubSheet(Coord(1, 1, 1), Coord(5, 5, 1)))
    assert len(box) == 16
    assert Coord(3, 3, 1) not in box


def test_boundingbox_of_line():
    assert boundingbox(SubSheet(Coord(1, 1, 1), Coord(1, 1, 5))) == {Coord(1, 1, 2), Coord(1, 1, 4)}


def test_sheet_qubits_by_layer():
    ss = SubSheet(Coord(1, 1, 1), Coord(5, 5, 1))
    assert sheet_qubits(ss, Layer.PRIMAL) == {Coord(w, h, 1) for w in (2, 4) for h in (2, 4)}
    # dual side qubits are primal faces: exactly one even component
    dual = sheet_qubits(ss, Layer.DUAL)
    assert len(dual) == 12
    assert all(c.even_count() == 1 for c in dual)
    assert {Coord(2, 1, 1), Coord(1, 2, 1), Coord(4, 5, 1)} <= dual


def test_sheet_qubits_of_dual_box():
    ss = SubSheet(Coord(2, 2, 2), Coord(6, 6, 2))
    assert sheet_qubits(ss, Layer.DUAL) == {Coord(w, h, 2) for w in (3, 5) for h in (3, 5)}


def test_xor_sheets_cancels_overlap():
    sheets = [SubSheet(Coord(1, 1, 1), Coord(5, 5, 1)), SubSheet(Coord(3, 3, 1), Coord(7, 7, 1))]
    result = xor_sheets(sheets, Layer.PRIMAL)
    assert Coord(4, 4, 1) not in result
    assert len(result) == 6
    assert xor_sheets(sheets + sheets, Layer.PRIMAL) == set()
    assert xor_sheets([], Layer.PRIMAL) == set()


# ==================== REWRITE RULES ====================


def test_can_reduce():
    graph = CycleGraph.from_coordinates(RECTANGLE)
    a, b = graph.vertex_at(Coord(5, 1, 1)), graph.vertex_at(Coord(5, 5, 1))
    assert can_reduce(graph, a, b)
    staircase_graph = CycleGraph.from_coordinates(staircase(2))
    a = staircase_graph.vertex_at(Coord(3, 1, 1))
    assert not can_reduce(staircase_graph, a, staircase_graph.ngh(a))


def test_reduce_deletes_both_neighbours():
    graph = _graph(REDUCE_TO_NEIGHBOURS)
    n = REDUCE_TO_NEIGHBOURS
    outcome = reduce(graph, graph.vertex_at(n["C"]), graph.vertex_at(n["D"]))
    assert graph.coordinates(graph.vertex_at(n["A"])) == [n["A"], n["F"], n["G"], n["H"]]
    assert outcome.inserted is None
    assert outcome.anchor == n["E"]
    assert set(outcome.deleted) == {n["B"], n["E"]}
    assert outcome.declined == ()


def test_reduce_inserts_mirrored_vertex():
    graph = _graph(REDUCE_WITH_INSERT)
    n = REDUCE_WITH_INSERT
    outcome = reduce(graph, graph.vertex_at(n["C"]), graph.vertex_at(n["D"]))
    inserted = Coord(9, 9, 1)
    assert graph.coordinates(graph.vertex_at(n["A"])) == [n["A"], inserted, n["E"], n["F"], n["G"], n["H"]]
    assert graph.coord(outcome.inserted) == inserted
    assert outcome.anchor == inserted
    assert outcome.deleted == (n["B"],)


def test_reduce_rejects_parallel_flanks():
    graph = CycleGraph.from_coordinates(L_SHAPE)
    a, b = graph.vertex_at(Coord(9, 5, 1)), graph.vertex_at(Coord(5, 5, 1))
    assert not can_reduce(graph, a, b)
    with pytest.raises(GraphError, match="not opposite"):
        reduce(graph, a, b)
    assert len(graph) == 6


def test_reshape_is_an_involution():
    graph = CycleGraph.from_coordinates(L_SHAPE)
    original = graph.copy()
    a = graph.vertex_at(Coord(1, 1, 1))
    b, c = graph.ngh(a), graph.ngh(a, 2)
    moved = reshape(graph, a, b, c)
    assert graph.coord(moved) == Coord(1, 5, 1)
    assert graph != original
    reshape(graph, a, moved, c)
    assert graph == original


def test_reshape_needs_consecutive_vertices():
    graph = CycleGraph.from_coordinates(L_SHAPE)
    a = graph.head
    with pytest.raises(GraphError, match="consecutive"):
        reshape(graph, a, graph.ngh(a, 2), graph.ngh(a, 3))


def test_collapse_duplicates():
    graph = CycleGraph.from_coordinates(RECTANGLE)
    graph._insert_after(graph.head, Coord(1, 1, 1))
    assert len(graph) == 5
    assert collapse_duplicates(graph) == 1
    assert graph.coordinates() == RECTANGLE


# ==================== SUB-SHEET FINDING ====================


def test_rectangle_single_area_subsheet():
    graph = CycleGraph.from_coordinates(RECTANGLE)
    qubit_tuple, result = _mapped_sheet(graph)
    assert len(result.area_subsheets) == 1
    assert result.area_subsheets[0].box() == (Coord(1, 1, 1), Coord(5, 5, 1))
    assert qubit_tuple.Z == {Coord(2, 2, 1), Coord(2, 4, 1), Coord(4, 2, 1), Coord(4, 4, 1)}
    assert result.traversals == 1
    assert len(graph) == 4


def test_l_shape_sheet():
    _, result = _mapped_sheet(CycleGraph.from_coordinates(L_SHAPE))
    expected = {Coord(w, h, 1) for w in range(2, 9, 2) for h in range(2, 9, 2)}
    expected -= {Coord(6, 6, 1), Coord(6, 8, 1), Coord(8, 6, 1), Coord(8, 8, 1)}
    assert xor_sheets(result.subsheets, Layer.PRIMAL) == expected
    assert len(expected) == 12


def test_helix_subsheets(helix_graph):
    result = find_subsheets(helix_graph)
    boxes = [ss.box() for ss in result.area_subsheets]
    assert boxes == [
        SubSheet(HELIX["G"], HELIX["E"]).box(),
        SubSheet(HELIX["A"], HELIX["C"]).box(),
        SubSheet(HELIX["I"], HELIX["C"]).box(),
        SubSheet(HELIX["A"], HELIX["I"]).box(),
    ]
    assert result.reshapes == 1
    assert result.reduces == 3
    assert result.traversals == 3
    assert result.declined == 4
    assert not result.planar
    assert len(helix_graph) == 10


def test_helix_sheet_verifies(helix_graph, helix_lattice):
    qubit_tuple, _ = _mapped_sheet(helix_graph)
    report = verify_surface(qubit_tuple.sheet, qubit_tuple, SHEET, helix_lattice)
    assert report.passed, str(report)


def test_helix_sheets_agree_from_every_start(helix_graph, helix_lattice):
    circuit = CircuitGeometry(helix_lattice, ())
    reference, _ = _mapped_sheet(helix_graph)
    for start in range(1, len(helix_graph)):
        qubit_tuple, _ = _mapped_sheet(helix_graph, start)
        assert verify_surface(qubit_tuple.sheet, qubit_tuple, SHEET, helix_lattice).passed
        assert qubit_tuple.sheet == reference.sheet or sheets_equivalent(reference.sheet, qubit_tuple.sheet, circuit)


@pytest.mark.parametrize("m", [2, 6, 14, 30])
def test_staircase_bounds(m):
    graph = CycleGraph.from_coordinates(staircase(m))
    size = len(graph)
    qubit_tuple, result = _mapped_sheet(graph)
    assert size == 2 * m + 4
    assert result.traversals <= 4 * size * size
    assert result.max_consecutive_reshapes <= size - 3
    lattice = LatticeSpec(m + 1, m + 1, 2)
    assert verify_surface(qubit_tuple.sheet, qubit_tuple, SHEET, lattice).passed


def test_traversal_bound_enforced(helix_graph):
    with pytest.raises(SheetFindingError, match="no result after 1 traversals"):
        find_subsheets(helix_graph, qubit_id="h", max_traversals=1)


def test_zero_traversal_bound_is_not_the_default(helix_graph):
    with pytest.raises(SheetFindingError, match="no result after 0 traversals"):
        find_subsheets(helix_graph, qubit_id="h", max_traversals=0)


def test_finder_events_match_counters(helix_graph):
    bus = EventBus(max_history=500)
    handler = MappingEventHandler(bus)
    result = find_subsheets(helix_graph, qubit_id="h", bus=bus)
    counts = handler.counters["h"]
    assert counts["subsheets"] == len(result.subsheets)
    assert counts["area_subsheets"] == len(result.area_subsheets)
    assert counts["reduce"] == result.reduces
    assert counts["reshape"] == result.reshapes
    assert counts["traversals"] == result.traversals
    rules = [event.rule for _, event in bus.get_history(MappingEvent.SUBSHEET_FOUND, limit=100)]
    assert rules.count("reshape") == result.reshapes


def test_helix_sheet_independent_of_listing_rotation(helix_graph):
    reference, _ = _mapped_sheet(helix_graph)
    coords = list(HELIX.values())
    for shift in range(1, len(coords)):
        rotated = CycleGraph.from_coordinates(coords[shift:] + coords[:shift])
        qubit_tuple, _ = _mapped_sheet(rotated)
        assert qubit_tuple.sheet == reference.sheet
