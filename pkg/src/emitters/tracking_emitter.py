"""
Tracking Emitter
Coordinate sets needed for classical byproduct tracking
"""

from typing import List

from src.config import OutputConfig
from src.errors import GeometryParseError
from src.lattice import Coord, Layer, sort_coords
from src.mapping.qubit_tuple import QubitTuple


def _format_set(name: str, coords) -> str:
    values = " ".join(str(c) for c in sort_coords(coords))
    return f"{name}: {values}".rstrip()


def emit_tracking(qubit_tuples) -> str:
    """
    One block per logical qubit, ordered by id:

        qubit <id> <primal|dual>
        D: w,h,t ...
        I: ...
        O: ...
        J: ...
        X: ...
        Z: ...
    """
    blocks = []
    for qubit_tuple in sorted(qubit_tuples, key=lambda q: q.qubit_id):
        sets = qubit_tuple.named_sets()
        lines = [f"qubit {qubit_tuple.qubit_id} {qubit_tuple.layer.value}"]
        lines += [_format_set(name, sets[name]) for name in OutputConfig.TRACKING_SETS]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def parse_tracking(text: str) -> List[QubitTuple]:
    """
    Inverse of emit_tracking

    Raises:
        GeometryParseError: for malformed lines
    """
    tuples: List[QubitTuple] = []
    current = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("qubit "):
            parts = line.split()
            if len(parts) != 3:
                raise GeometryParseError("expected: qubit <id> <primal|dual>", line_no, 1)
            try:
                current = QubitTuple(parts[1], Layer(parts[2]))
            except ValueError:
                raise GeometryParseError(f"unknown layer '{parts[2]}'", line_no, len(parts[0]) + len(parts[1]) + 3) from None
            tuples.append(current)
            continue

        name, _, values = line.partition(":")
        if current is None or name not in OutputConfig.TRACKING_SETS:
            raise GeometryParseError(f"unexpected line '{line}'", line_no, 1)
        try:
            current.named_sets()[name].update(Coord.parse(token) for token in values.split())
        except ValueError as exc:
            raise GeometryParseError(str(exc), line_no, len(name) + 2) from None
    return tuples
