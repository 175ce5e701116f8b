"""
Verifier
Independent checks of mapper output: stabilizer products for the
correlation surfaces and class membership for every coordinate set
"""

from dataclasses import dataclass, field
from typing import List, Set

from src.lattice import CENTER_CLASS, FACE_CLASS, SIDE_CLASS, Coord, LatticeSpec, sort_coords
from src.logger import logger
from src.mapping.qubit_tuple import QubitTuple
from src.systems.events import MappingEvent
from .pauli import surface_product

SHEET = "sheet"
TUBE = "tube"
STRUCTURE = "structure"


@dataclass
class SurfaceReport:
    """
    Outcome of one check

    Attributes:
        qubit_id: Logical qubit checked
        kind: "sheet", "tube" or "structure"
        violations: Offending coordinates (empty on PASS)
        reasons: Human-readable notes for structural failures
    """

    qubit_id: str
    kind: str
    violations: List[Coord] = field(default_factory=list)
    reasons: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.reasons

    def __str__(self):
        if self.passed:
            return f"PASS {self.qubit_id} {self.kind}"
        coords = " ".join(str(c) for c in self.violations)
        return f"FAIL {self.qubit_id} {self.kind} {coords}".rstrip()


def allowed_residual(lattice: LatticeSpec, qubit_tuple: QubitTuple) -> Set[Coord]:
    """L | N(L) with L = D | I | O"""
    logic = qubit_tuple.logic_operators
    allowed = set(logic)
    for q in logic:
        if lattice.contains(q):
            allowed |= lattice.entangled_neighbors(q)
    return allowed


def verify_surface(surface, qubit_tuple: QubitTuple, kind: str, lattice: LatticeSpec) -> SurfaceReport:
    """
    Multiply the stabilizers of every surface qubit and check the residual

    PASS iff the residual X lies on the surface and the residual Z lies
    on logic-operator qubits. A tube may also leave Z on their neighbours,
    where it closes off against the input and output rings. Never raises
    for a failing surface.
    """
    surface = set(surface)
    outside = [q for q in surface if not lattice.contains(q) or not lattice.classify(q).is_qubit]
    if outside:
        return SurfaceReport(qubit_tuple.qubit_id, kind, sort_coords(outside), ["not a qubit position"])

    product = surface_product(lattice, surface)
    allowed = set(qubit_tuple.logic_operators) if kind == SHEET else allowed_residual(lattice, qubit_tuple)
    violations = (set(product.z_support) - allowed) | (set(product.x_support) - surface)
    report = SurfaceReport(qubit_tuple.qubit_id, kind, sort_coords(violations))
    logger.debug(
        f"🔍 {report.qubit_id} {kind}: |surface|={len(surface)} residual Z={len(product.z_support)} "
        f"-> {'PASS' if report.passed else 'FAIL'}"
    )
    return report


def verify_tuple(qubit_tuple: QubitTuple, lattice: LatticeSpec) -> SurfaceReport:
    """Position-class checks for every set of the tuple"""
    layer = qubit_tuple.layer
    face = FACE_CLASS[layer].value
    expectations = [
        ("D", qubit_tuple.D, face),
        ("I", qubit_tuple.I, face),
        ("O", qubit_tuple.O, face),
        ("tube", qubit_tuple.tube, face),
        ("J", qubit_tuple.J, CENTER_CLASS[layer].value),
        ("sheet", qubit_tuple.sheet, SIDE_CLASS[layer].value),
    ]

    violations: Set[Coord] = set()
    reasons: List[str] = []
    for name, coords, expected in expectations:
        wrong = {c for c in coords if not lattice.contains(c) or Coord(*c).even_count() != expected}
        if wrong:
            violations |= wrong
            reasons.append(f"{name} holds {len(wrong)} coordinate(s) of the wrong class")

    side_defects = {c for c in qubit_tuple.D if Coord(*c).even_count() == SIDE_CLASS[layer].value}
    if side_defects:
        reasons.append("D ∩ S = ∅ violated")

    return SurfaceReport(qubit_tuple.qubit_id, STRUCTURE, sort_coords(violations), reasons)


def verify_circuit(qubit_tuples, lattice: LatticeSpec, bus=None) -> List[SurfaceReport]:
    """
    Structural check plus sheet and tube oracles for every qubit

    Qubits carrying injection points get the structural check only.
    Structural reports are returned only when they fail.
    """
    reports: List[SurfaceReport] = []
    for qubit_tuple in sorted(qubit_tuples, key=lambda q: q.qubit_id):
        structure = verify_tuple(qubit_tuple, lattice)
        if not structure.passed:
            reports.append(structure)
        if qubit_tuple.J:
            logger.info(f"💉 Qubit {qubit_tuple.qubit_id}: injection points, surfaces checked structurally")
            continue
        for kind, surface in ((SHEET, qubit_tuple.sheet), (TUBE, qubit_tuple.tube)):
            report = verify_surface(surface, qubit_tuple, kind, lattice)
            reports.append(report)
            if bus is not None:
                bus.emit(MappingEvent.SURFACE_VERIFIED, report=report)
    return reports
