"""
Geometry Exporter
Plain point/quad listing of mapped surfaces for external 3D viewers
"""

from src.lattice import Coord, sort_coords


def _quad(subsheet):
    """Four corners of a sub-sheet rectangle in cycle order"""
    lower, upper = subsheet.box()
    spanning = [axis for axis in range(3) if lower[axis] != upper[axis]]
    first, second = spanning
    corners = []
    for pick_first, pick_second in ((0, 0), (1, 0), (1, 1), (0, 1)):
        values = list(lower)
        values[first] = (lower, upper)[pick_first][first]
        values[second] = (lower, upper)[pick_second][second]
        corners.append(Coord(*values))
    return corners


def export_geometry(mapped_qubits) -> str:
    """
    Per qubit: its loop, its sub-sheet quads and its D and surface points

    Lines:
        qubit <id> <layer>
        loop w,h,t ...
        quad w,h,t w,h,t w,h,t w,h,t
        point <D|sheet|tube> w,h,t
    """
    lines = ["# mapped geometry export"]
    for mapped in mapped_qubits:
        qubit_tuple = mapped.qubit_tuple
        lines.append(f"qubit {mapped.qubit_id} {qubit_tuple.layer.value}")
        lines.append("loop " + " ".join(str(s.begin) for s in mapped.geometry.segments))
        for subsheet in mapped.sheet_result.area_subsheets:
            lines.append("quad " + " ".join(str(c) for c in _quad(subsheet)))
        for name, coords in (("D", qubit_tuple.D), ("sheet", qubit_tuple.sheet), ("tube", qubit_tuple.tube)):
            lines.extend(f"point {name} {c}" for c in sort_coords(coords))
    return "\n".join(lines) + "\n"
