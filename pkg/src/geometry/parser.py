"""
Geometry Document
Parse and serialize the line-oriented circuit geometry format
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from src.errors import GeometryError, GeometryParseError, LatticeError
from src.lattice import Coord, Layer, LatticeSpec
from src.logger import logger
from .logical_qubit import LogicalQubitGeometry
from .segment import Segment, SegmentType


@dataclass(frozen=True)
class CircuitGeometry:
    """A lattice plus the logical qubits placed on it, in declaration order"""

    lattice: LatticeSpec
    qubits: Tuple[LogicalQubitGeometry, ...] = field(default_factory=tuple)

    def qubit(self, qubit_id: str) -> LogicalQubitGeometry:
        for geometry in self.qubits:
            if geometry.qubit_id == qubit_id:
                return geometry
        raise ValueError(f"Unknown logical qubit: {qubit_id}")

    @property
    def qubit_ids(self) -> List[str]:
        return [geometry.qubit_id for geometry in self.qubits]


def _tokens(line: str) -> List[Tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based column"""
    tokens = []
    column = 0
    while column < len(line):
        if line[column].isspace():
            column += 1
            continue
        start = column
        while column < len(line) and not line[column].isspace():
            column += 1
        tokens.append((line[start:column], start + 1))
    return tokens


def _parse_int(token: str, column: int, line_no: int, name: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GeometryParseError(f"{name} must be an integer, got '{token}'", line_no, column) from None


def _parse_coord(token: str, column: int, line_no: int) -> Coord:
    try:
        return Coord.parse(token)
    except ValueError as exc:
        raise GeometryParseError(str(exc), line_no, column) from None


def parse(text: str) -> CircuitGeometry:
    """
    Parse a geometry document

    Format:
        lattice <mc_w> <mc_h> <mc_t>
        logical <id> <primal|dual>
        segment <id> <defect|init|measure|inject> <w,h,t> <w,h,t>

    Segments are listed in cycle order per qubit; '#' starts a comment.

    Returns:
        CircuitGeometry with every qubit normalized and validated

    Raises:
        GeometryParseError: carrying line and column of the offending token
    """
    lattice = None
    layers: Dict[str, Layer] = {}
    declared_at: Dict[str, int] = {}
    segments: Dict[str, List[Segment]] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokens(raw.split("#", 1)[0])
        if not tokens:
            continue
        keyword, column = tokens[0]

        if lattice is None and keyword != "lattice":
            raise GeometryParseError("document must start with a 'lattice' line", line_no, column)

        if keyword == "lattice":
            if lattice is not None:
                raise GeometryParseError("duplicate 'lattice' line", line_no, column)
            if len(tokens) != 4:
                raise GeometryParseError("expected: lattice <mc_w> <mc_h> <mc_t>", line_no, column)
            counts = [_parse_int(tok, col, line_no, "cell count") for tok, col in tokens[1:]]
            try:
                lattice = LatticeSpec(*counts)
            except LatticeError as exc:
                raise GeometryParseError(str(exc), line_no, tokens[1][1]) from None

        elif keyword == "logical":
            if len(tokens) != 3:
                raise GeometryParseError("expected: logical <id> <primal|dual>", line_no, column)
            (qubit_id, id_col), (layer_name, layer_col) = tokens[1], tokens[2]
            if qubit_id in layers:
                raise GeometryParseError(f"duplicate logical qubit '{qubit_id}'", line_no, id_col)
            try:
                layers[qubit_id] = Layer(layer_name)
            except ValueError:
                raise GeometryParseError(f"unknown layer '{layer_name}'", line_no, layer_col) from None
            declared_at[qubit_id] = line_no
            segments[qubit_id] = []

        elif keyword == "segment":
            if len(tokens) != 5:
                raise GeometryParseError("expected: segment <id> <type> <w,h,t> <w,h,t>", line_no, column)
            (qubit_id, id_col), (type_name, type_col) = tokens[1], tokens[2]
            if qubit_id not in layers:
                raise GeometryParseError(f"segment for undeclared qubit '{qubit_id}'", line_no, id_col)
            try:
                seg_type = SegmentType(type_name)
            except ValueError:
                raise GeometryParseError(f"unknown segment type '{type_name}'", line_no, type_col) from None
            ends = []
            for token, col in tokens[3:]:
                coord = _parse_coord(token, col, line_no)
                if not lattice.contains(coord):
                    raise GeometryParseError(f"coordinate {coord} outside lattice", line_no, col)
                ends.append(coord)
            if ends[0] == ends[1]:
                raise GeometryParseError("zero-length segment", line_no, tokens[3][1])
            if sum(1 for axis in range(3) if ends[0][axis] != ends[1][axis]) > 1:
                raise GeometryParseError(
                    f"segment {ends[0]} -> {ends[1]} is not axis-aligned", line_no, tokens[3][1]
                )
            segments[qubit_id].append(Segment(ends[0], ends[1], seg_type))

        else:
            raise GeometryParseError(f"unknown keyword '{keyword}'", line_no, column)

    if lattice is None:
        raise GeometryParseError("empty document: missing 'lattice' line", 1, 1)

    qubits = []
    for qubit_id, layer in layers.items():
        try:
            qubits.append(LogicalQubitGeometry.build(qubit_id, layer, segments[qubit_id], lattice))
        except GeometryError as exc:
            raise GeometryParseError(str(exc), declared_at[qubit_id], 1) from None

    logger.debug(f"📐 Parsed {len(qubits)} logical qubit(s) on lattice {lattice.mc_w}x{lattice.mc_h}x{lattice.mc_t}")
    return CircuitGeometry(lattice, tuple(qubits))


def serialize(circuit: CircuitGeometry) -> str:
    """Inverse of parse: one 'logical' block per qubit, segments in cycle order"""
    lattice = circuit.lattice
    lines = [f"lattice {lattice.mc_w} {lattice.mc_h} {lattice.mc_t}"]
    for geometry in circuit.qubits:
        lines.append(f"logical {geometry.qubit_id} {geometry.layer.value}")
        for segment in geometry.segments:
            lines.append(f"segment {geometry.qubit_id} {segment}")
    return "\n".join(lines) + "\n"
