"""
Sheet Mapper
Finds the sub-sheets of a defect loop by rewriting its cycle graph,
then assembles the sheet qubits

Every rule replaces the loop by loop XOR the boundary of the rectangle
it records, so the recorded rectangles always span the original loop.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from src.config import MappingConfig
from src.errors import GraphError, SheetFindingError
from src.graphs import CycleGraph
from src.lattice import Coord
from src.logger import logger
from src.systems.events import EventBus, MappingEvent
from .qubit_tuple import QubitTuple
from .subsheet import SubSheet, xor_sheets


# ==================== REWRITE RULES ====================


@dataclass(frozen=True)
class ReduceOutcome:
    """
    What a reduce did to the graph

    Attributes:
        anchor: Corner shared by the two recorded rectangles
        inserted: Id of the inserted vertex, if any
        deleted: Neighbour coordinates removed afterwards
        declined: Neighbour coordinates kept because removal would leave a diagonal edge
    """

    anchor: Coord
    inserted: Optional[int]
    deleted: tuple
    declined: tuple


def can_reduce(graph: CycleGraph, a: int, b: int) -> bool:
    """Edges into a and out of b point in opposite directions"""
    if len(graph) < 4:
        return False
    try:
        before = graph.dir(graph.ngh(a, -1), a)
        after = graph.dir(b, graph.ngh(b))
        middle = graph.dir(a, b)
    except GraphError:
        return False
    return before == -after and not middle.is_parallel(before)


def reduce(graph: CycleGraph, a: int, b: int) -> ReduceOutcome:
    """
    Cut the rectangle closed by (n_a, a, b, n_b) off the loop

    Removes a and b, inserts the mirrored vertices that are not already
    neighbours, then removes the mirrored vertices that are neighbours.

    Raises:
        GraphError: if the flanking edges are not opposite
    """
    if not can_reduce(graph, a, b):
        raise GraphError(f"reduce({graph.coord(a)}, {graph.coord(b)}): flanking edges are not opposite")

    n_a, n_b = graph.ngh(a, -1), graph.ngh(b)
    coord_a, coord_b = graph.coord(a), graph.coord(b)
    neighbours = {graph.coord(n_a): n_a, graph.coord(n_b): n_b}
    mirrored = [
        CycleGraph.clst(coord_a, graph.mirr(b), graph.coord(n_a)),
        CycleGraph.clst(coord_b, graph.mirr(a), graph.coord(n_b)),
    ]
    to_insert = [c for c in dict.fromkeys(mirrored) if c not in neighbours]
    to_delete = [c for c in dict.fromkeys(mirrored) if c in neighbours]

    graph._unlink(a)
    graph._unlink(b)

    inserted = None
    anchor = graph.coord(n_b)
    previous = n_a
    for coord in to_insert:
        previous = inserted = graph._insert_after(previous, coord)
        anchor = coord

    deleted, declined = [], []
    for coord in to_delete:
        vertex = neighbours[coord]
        if len(graph) > 2 and vertex in graph and graph.is_collinear_at(vertex):
            graph._unlink(vertex)
            deleted.append(coord)
        else:
            declined.append(coord)

    collapse_duplicates(graph)
    return ReduceOutcome(anchor, inserted, tuple(deleted), tuple(declined))


def reshape(graph: CycleGraph, a: int, b: int, c: int) -> int:
    """
    Replace b by its mirror across the line through a and c

    Returns:
        Id of the vertex that replaces b

    Raises:
        GraphError: if (a, b) and (b, c) are not consecutive edges
    """
    if graph.ngh(a) != b or graph.ngh(b) != c:
        raise GraphError("reshape needs three consecutive vertices")
    mirrored = graph.mirr(b)
    graph._unlink(b)
    return graph._insert_after(a, mirrored)


def collapse_duplicates(graph: CycleGraph) -> int:
    """Drop vertices sitting on the same coordinate as their predecessor"""
    dropped = 0
    changed = True
    while changed and len(graph) > 2:
        changed = False
        for k in list(graph.vertices()):
            if k in graph and len(graph) > 2 and graph.coord(k) == graph.coord(graph.ngh(k, -1)):
                graph._unlink(k)
                dropped += 1
                changed = True
    return dropped


# ==================== SUB-SHEET FINDING ====================


@dataclass
class SheetFindingResult:
    """Sub-sheets of one loop plus rewrite counters"""

    subsheets: List[SubSheet] = field(default_factory=list)
    initial_size: int = 0
    traversals: int = 0
    reshapes: int = 0
    max_consecutive_reshapes: int = 0
    reduces: int = 0
    removes: int = 0
    declined: int = 0
    parity_flips: int = 0
    planar: bool = True

    @property
    def area_subsheets(self) -> List[SubSheet]:
        return [ss for ss in self.subsheets if not ss.is_degenerate]


class SheetFinder:
    """
    Rewrites one cycle graph down to two vertices

    A traversal walks ck around the cycle looking at a = ngh(ck) and
    b = ngh(a). Collinear vertices are removed, opposite flanking
    edges trigger reduce. A traversal in which nothing fired ends with
    a reshape at the start vertex, and the start moves on by one.
    """

    def __init__(
        self,
        graph: CycleGraph,
        qubit_id: str = "",
        bus: Optional[EventBus] = None,
        max_traversals: Optional[int] = None,
    ):
        """
        Args:
            graph: Defect loop; rewritten in place (pass a copy to keep it)
            qubit_id: Name used in logs and events
            bus: Optional event bus for rewrite events
            max_traversals: Safety bound (default c * |K|^2 + slack)
        """
        self.graph = graph
        self.qubit_id = qubit_id
        self.bus = bus
        size = len(graph)
        if max_traversals is None:
            max_traversals = MappingConfig.MAX_TRAVERSAL_FACTOR * size * size + MappingConfig.TRAVERSAL_SLACK
        self.max_traversals = max_traversals
        self.result = SheetFindingResult(initial_size=size, planar=graph.is_planar())

    def run(self, start: Optional[int] = None) -> SheetFindingResult:
        """
        Find all sub-sheets

        Args:
            start: Vertex the first traversal starts from (default: lexicographic minimum)

        Raises:
            SheetFindingError: when the traversal bound is exceeded
        """
        graph = self.graph
        self.start = graph.lexicographic_min() if start is None else start
        consecutive_reshapes = 0

        while len(graph) > 2:
            self.result.traversals += 1
            if self.result.traversals > self.max_traversals:
                raise SheetFindingError(
                    f"qubit {self.qubit_id}: no result after {self.max_traversals} traversals "
                    f"({len(graph)} vertices left)"
                )
            size_before = len(graph)
            compact = self._traverse()

            if not compact and len(graph) > 2:
                self._reshape_at_start()
                consecutive_reshapes += 1
                self.result.max_consecutive_reshapes = max(
                    self.result.max_consecutive_reshapes, consecutive_reshapes
                )
            elif compact:
                consecutive_reshapes = 0

            self._check_parity(size_before)
            self._emit(
                MappingEvent.TRAVERSAL_COMPLETED,
                traversal=self.result.traversals,
                size=len(graph),
                compact=compact,
            )

        logger.debug(
            f"📄 Qubit {self.qubit_id}: {len(self.result.subsheets)} sub-sheets in "
            f"{self.result.traversals} traversals ({self.result.reshapes} reshapes)"
        )
        return self.result

    # ==================== TRAVERSAL ====================

    def _traverse(self) -> bool:
        """One pass around the cycle; True if any rule fired"""
        graph = self.graph
        compact = False
        ck = self.start
        while len(graph) > 2:
            a = graph.ngh(ck)
            b = graph.ngh(a)

            if graph.is_collinear_at(a):
                ck = self._remove(a, ck)
                compact = True
                continue

            if can_reduce(graph, a, b):
                ck = self._reduce(a, b)
                compact = True
                continue

            ck = a
            if ck == self.start:
                break
        return compact

    def _remove(self, a: int, ck: int) -> int:
        """Remove a collinear vertex and return a live ck"""
        coord = self.graph.coord(a)
        self.graph._unlink(a)
        self.result.removes += 1
        if self.start == a:
            self.start = ck
        self.result.removes += collapse_duplicates(self.graph)
        self._repair_start(ck)
        logger.debug(f"  ✂️ remove {coord} -> |K|={len(self.graph)}")
        self._emit(MappingEvent.VERTEX_REMOVED, coords=(coord,), size=len(self.graph))
        return ck if ck in self.graph else self.start

    def _reduce(self, a: int, b: int) -> int:
        """Apply reduce, record its rectangles and return the new ck"""
        graph = self.graph
        coord_a, coord_b = graph.coord(a), graph.coord(b)
        n_a = graph.ngh(a, -1)
        behind = [graph.ngh(n_a, -step) for step in range(len(graph))]

        outcome = reduce(graph, a, b)
        self.result.reduces += 1
        self.result.removes += len(outcome.deleted)
        self.result.declined += len(outcome.declined)
        for coord in outcome.declined:
            logger.debug(f"  ↩️ kept {coord}: removal would leave a diagonal edge")

        for corner in (coord_a, coord_b):
            self._record(SubSheet(outcome.anchor, corner), "reduce")

        survivor = next((k for k in behind if k in graph), graph.head)
        ck = graph.ngh(survivor, -1)
        self._repair_start(ck)
        logger.debug(f"  🔻 reduce({coord_a}, {coord_b}) -> |K|={len(graph)}")
        self._emit(MappingEvent.REDUCE_APPLIED, coords=(coord_a, coord_b), size=len(graph))
        return ck

    def _reshape_at_start(self):
        graph = self.graph
        a = self.start
        b = graph.ngh(a)
        c = graph.ngh(b)
        corners = (graph.coord(a), graph.coord(b), graph.coord(c))
        self._record(SubSheet(corners[0], corners[2]), "reshape")
        moved = reshape(graph, a, b, c)
        self.result.reshapes += 1
        self.start = moved
        logger.debug(f"  🔁 reshape({corners[0]}, {corners[1]}, {corners[2]}) -> {graph.coord(moved)}")
        self._emit(MappingEvent.RESHAPE_APPLIED, coords=corners, size=len(graph))

    def _repair_start(self, fallback: int):
        if self.start not in self.graph:
            self.start = fallback if fallback in self.graph else self.graph.head

    # ==================== BOOKKEEPING ====================

    def _record(self, subsheet: SubSheet, rule: str):
        self.result.subsheets.append(subsheet)
        self._emit(MappingEvent.SUBSHEET_FOUND, subsheet=subsheet, rule=rule)

    def _check_parity(self, size_before: int):
        """
        Planar loops always turn an even number of times; 3D loops may
        legitimately change vertex parity, which is only counted
        """
        graph = self.graph
        if (len(graph) - size_before) % 2:
            self.result.parity_flips += 1
        if self.result.planar and len(graph) > 2:
            turns = sum(1 for k in graph.vertices() if not graph.is_collinear_at(k))
            if turns % 2:
                raise SheetFindingError(
                    f"qubit {self.qubit_id}: planar loop with {turns} turning vertices"
                )

    def _emit(self, event_type: str, **kwargs):
        if self.bus is not None:
            self.bus.emit(event_type, qubit_id=self.qubit_id, **kwargs)


def find_subsheets(
    graph: CycleGraph,
    start: Optional[int] = None,
    qubit_id: str = "",
    bus: Optional[EventBus] = None,
    max_traversals: Optional[int] = None,
) -> SheetFindingResult:
    """
    Sub-sheets of a defect loop; the graph itself is left untouched

    Args:
        graph: Cycle graph of the loop
        start: Index into the cycle (counted from the lexicographic minimum)
               of the first start vertex; None uses the minimum itself

    Returns:
        SheetFindingResult with the recorded rectangles and counters
    """
    working = graph.copy()
    first = working.lexicographic_min()
    start_vertex = first if start is None else working.ngh(first, start % len(working))
    return SheetFinder(working, qubit_id, bus, max_traversals).run(start_vertex)


def assemble_sheet(subsheets, qubit_tuple: QubitTuple) -> QubitTuple:
    """Store the XOR of all sub-sheets' side qubits as the tuple's sheet"""
    qubit_tuple.sheet = xor_sheets(subsheets, qubit_tuple.layer)
    logger.debug(f"📄 Qubit {qubit_tuple.qubit_id}: sheet of {len(qubit_tuple.sheet)} qubits")
    return qubit_tuple
