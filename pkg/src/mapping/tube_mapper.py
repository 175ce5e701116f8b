"""
Tube Mapper
Single traversal of a cycle graph collecting defect, logic-operator,
injection and tube qubits
"""

from typing import Optional, Set

from src.errors import TubeMappingError
from src.geometry import SegmentType
from src.graphs import CycleGraph
from src.lattice import CENTER_CLASS, Coord, Layer, face_offsets, segment_cells
from src.logger import logger
from src.systems.events import EventBus, MappingEvent
from .qubit_tuple import QubitTuple


def map_tubes(
    graph: CycleGraph,
    layer: Layer,
    qubit_id: str = "",
    bus: Optional[EventBus] = None,
) -> QubitTuple:
    """
    Populate D, I, O, J and the tube of one logical qubit

    Every cell on an edge (both endpoints included) owns the two face
    qubits along the edge direction. Those go to D, I or O by edge type;
    injection edges instead contribute their midpoint to J. The tube is
    the symmetric difference of the face sets of all defect cells, with
    defect qubits taken out.

    Args:
        graph: Cycle graph of the logical qubit
        layer: Sublattice the qubit lives on
        qubit_id: Name used in logs and events
        bus: Optional event bus for TUBES_MAPPED

    Returns:
        QubitTuple with D, I, O, J and tube filled

    Raises:
        TubeMappingError: for a corrupt cycle or an unrepresentable injection point
    """
    result = QubitTuple(qubit_id, layer)
    defect_cells: Set[Coord] = set()
    routes = {SegmentType.DEFECT: result.D, SegmentType.INIT: result.I, SegmentType.MEASURE: result.O}

    start = graph.lexicographic_min()
    k = start
    visits = 0
    while True:
        visits += 1
        if visits > len(graph):
            raise TubeMappingError(f"qubit {qubit_id}: traversal did not return to {graph.coord(start)}")

        begin, end = graph.coord(k), graph.coord(graph.ngh(k))
        edge_type = graph.edge_type(k)
        direction = graph.dir(k)
        unit = direction.unit()

        for cc in segment_cells(begin, end, direction):
            d_cc = {cc.plus(unit), cc.minus(unit)}
            if edge_type in routes:
                routes[edge_type].update(d_cc)
            if edge_type is SegmentType.DEFECT:
                defect_cells.add(cc)

        if edge_type is SegmentType.INJECT:
            center = _injection_center(begin, end, layer, qubit_id)
            result.J.add(center)
            result.injections[center] = center.plus(unit)

        k = graph.ngh(k)
        if k == start:
            break

    if visits != len(graph):
        raise TubeMappingError(f"qubit {qubit_id}: visited {visits} of {len(graph)} vertices")

    tube: Set[Coord] = set()
    for cc in defect_cells:
        tube ^= face_offsets(cc)
    result.tube = tube - result.D

    logger.debug(
        f"🧪 Qubit {qubit_id}: |D|={len(result.D)} |I|={len(result.I)} |O|={len(result.O)} "
        f"|J|={len(result.J)} |tube|={len(result.tube)}"
    )
    if bus is not None:
        bus.emit(MappingEvent.TUBES_MAPPED, qubit_id=qubit_id, qubit_tuple=result, visits=visits)
    return result


def _injection_center(begin: Coord, end: Coord, layer: Layer, qubit_id: str) -> Coord:
    total = begin.plus(end)
    if any(value % 2 for value in total):
        raise TubeMappingError(f"qubit {qubit_id}: injection {begin} -> {end} has no midpoint")
    center = Coord(*(value // 2 for value in total))
    if center.even_count() != CENTER_CLASS[layer].value:
        raise TubeMappingError(
            f"qubit {qubit_id}: injection midpoint {center} is not a {layer.value} cell center"
        )
    return center
