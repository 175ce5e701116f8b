"""
Verifier: stabilizer products, residual checks and structural checks
"""

import pytest

from src.lattice import Coord, Layer, LatticeSpec
from src.mapping import CircuitMapper, QubitTuple
from src.systems.events import EventBus, MappingEvent
from src.verification import (
    SHEET,
    STRUCTURE,
    TUBE,
    PauliOperator,
    SurfaceReport,
    allowed_residual,
    cluster_stabilizer,
    multiply,
    surface_product,
    verify_circuit,
    verify_surface,
    verify_tuple,
)


@pytest.fixture
def identity_tuple(identity_circuit):
    return CircuitMapper(workers=1).map_circuit(identity_circuit)[0].qubit_tuple


# ==================== PAULI PRODUCTS ====================


def test_cluster_stabilizer():
    lattice = LatticeSpec(2, 2, 2)
    op = cluster_stabilizer(lattice, Coord(2, 1, 1))
    assert op.x_support == {Coord(2, 1, 1)}
    assert op.z_support == lattice.entangled_neighbors(Coord(2, 1, 1))


def test_multiply_cancels_shared_support():
    a = PauliOperator(frozenset({Coord(1, 0, 0)}), frozenset({Coord(2, 1, 0), Coord(1, 1, 1)}))
    b = PauliOperator(frozenset(), frozenset({Coord(2, 1, 0)}))
    assert multiply([a, b]) == a * b
    assert (a * b).z_support == {Coord(1, 1, 1)}
    assert (a * a).is_identity
    assert multiply([]).is_identity


def test_identity_sheet_residual(identity_circuit, identity_sheet):
    product = surface_product(identity_circuit.lattice, identity_sheet)
    expected = {Coord(w, 3, t) for w in (3, 7) for t in (2, 4, 6, 8)}
    expected |= {Coord(4, 3, 1), Coord(6, 3, 1), Coord(4, 3, 9), Coord(6, 3, 9)}
    assert product.z_support == expected
    assert product.x_support == identity_sheet


def test_allowed_residual_covers_logic_operators(identity_tuple, identity_circuit):
    allowed = allowed_residual(identity_circuit.lattice, identity_tuple)
    assert identity_tuple.logic_operators <= allowed
    assert Coord(2, 3, 2) in allowed
    assert Coord(5, 3, 4) not in allowed


# ==================== SURFACES ====================


def test_identity_sheet_and_tube_pass(identity_tuple, identity_circuit, identity_sheet):
    assert identity_tuple.Z == identity_sheet
    lattice = identity_circuit.lattice
    sheet = verify_surface(identity_tuple.sheet, identity_tuple, SHEET, lattice)
    tube = verify_surface(identity_tuple.tube, identity_tuple, TUBE, lattice)
    assert sheet.passed and tube.passed
    assert str(sheet) == "PASS q sheet"
    assert str(tube) == "PASS q tube"


def test_punctured_sheet_fails(identity_tuple, identity_circuit):
    surface = identity_tuple.sheet - {Coord(4, 3, 4)}
    report = verify_surface(surface, identity_tuple, SHEET, identity_circuit.lattice)
    assert not report.passed
    assert report.violations == [Coord(4, 3, 3), Coord(5, 3, 4), Coord(4, 3, 5)]
    assert str(report) == "FAIL q sheet 4,3,3 5,3,4 4,3,5"


def test_sheet_residual_must_stay_on_logic_operators(identity_tuple, identity_circuit):
    # One defect qubit: its residual is N(L) \ L, fine for a tube but not a sheet
    surface = {Coord(3, 3, 4)}
    lattice = identity_circuit.lattice
    assert verify_surface(surface, identity_tuple, TUBE, lattice).passed
    report = verify_surface(surface, identity_tuple, SHEET, lattice)
    assert set(report.violations) == lattice.entangled_neighbors(Coord(3, 3, 4))


def test_surface_with_non_qubit_position(identity_tuple, identity_circuit):
    report = verify_surface({Coord(5, 3, 5)}, identity_tuple, SHEET, identity_circuit.lattice)
    assert not report.passed
    assert report.reasons == ["not a qubit position"]


def test_empty_surface_passes(identity_circuit):
    report = verify_surface(set(), QubitTuple("e", Layer.PRIMAL), TUBE, identity_circuit.lattice)
    assert report.passed


# ==================== STRUCTURE ====================


def test_verify_tuple_passes_for_mapped_qubit(identity_tuple, identity_circuit):
    report = verify_tuple(identity_tuple, identity_circuit.lattice)
    assert report.passed
    assert report.kind == STRUCTURE


def test_verify_tuple_flags_wrong_class(identity_tuple, identity_circuit):
    identity_tuple.J.add(Coord(4, 3, 1))
    identity_tuple.D.add(Coord(5, 3, 5))
    report = verify_tuple(identity_tuple, identity_circuit.lattice)
    assert not report.passed
    assert set(report.violations) == {Coord(4, 3, 1), Coord(5, 3, 5)}
    assert any(reason.startswith("J holds") for reason in report.reasons)


def test_verify_tuple_flags_side_defects(identity_tuple, identity_circuit):
    identity_tuple.D.add(Coord(4, 3, 2))
    report = verify_tuple(identity_tuple, identity_circuit.lattice)
    assert "D ∩ S = ∅ violated" in report.reasons


def test_surface_report_str_without_violations():
    assert str(SurfaceReport("x", STRUCTURE, [], ["bad"])) == "FAIL x structure"


# ==================== CIRCUITS ====================


def test_cnot_circuit_passes(cnot_circuit):
    tuples = [m.qubit_tuple for m in CircuitMapper(workers=2).map_circuit(cnot_circuit)]
    bus = EventBus()
    seen = []
    bus.subscribe(MappingEvent.SURFACE_VERIFIED, seen.append)
    reports = verify_circuit(tuples, cnot_circuit.lattice, bus)
    assert [str(r) for r in reports] == [
        f"PASS {qubit_id} {kind}" for qubit_id in ("1", "2", "3", "4") for kind in (SHEET, TUBE)
    ]
    assert len(seen) == 8


def test_injection_qubits_checked_structurally(identity_tuple, identity_circuit):
    identity_tuple.J.add(Coord(5, 3, 1))
    assert verify_circuit([identity_tuple], identity_circuit.lattice) == []


def test_structure_failure_reported(identity_tuple, identity_circuit):
    identity_tuple.D.add(Coord(4, 3, 2))
    reports = verify_circuit([identity_tuple], identity_circuit.lattice)
    assert [r.kind for r in reports] == [STRUCTURE, SHEET, TUBE]
    assert not reports[0].passed
