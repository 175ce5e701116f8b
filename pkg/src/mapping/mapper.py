"""
Circuit Mapper
Runs graph building, tube mapping and sheet finding for every logical
qubit of a circuit
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

from src.config import MappingConfig
from src.errors import SheetFindingError
from src.geometry import CircuitGeometry, LogicalQubitGeometry
from src.graphs import CycleGraph, build_cycle_graph
from src.logger import logger
from src.systems.events import EventBus, MappingEvent
from src.verification.pauli import surface_product
from .qubit_tuple import QubitTuple
from .sheet_mapper import SheetFindingResult, assemble_sheet, find_subsheets
from .subsheet import xor_sheets
from .tube_mapper import map_tubes


@dataclass
class MappedQubit:
    """Everything produced for one logical qubit"""

    geometry: LogicalQubitGeometry
    graph: CycleGraph
    qubit_tuple: QubitTuple
    sheet_result: SheetFindingResult

    @property
    def qubit_id(self) -> str:
        return self.geometry.qubit_id


class CircuitMapper:
    """
    Maps a whole circuit, one worker task per logical qubit

    Output order always follows declaration order of the qubits.
    """

    def __init__(
        self,
        bus: Optional[EventBus] = None,
        workers: int = MappingConfig.DEFAULT_WORKERS,
        max_traversals: Optional[int] = None,
        sweep_starts: bool = False,
    ):
        """
        Args:
            bus: Event bus receiving pipeline events (None: silent)
            workers: Thread pool size; 1 maps sequentially
            max_traversals: Override for the sheet-finding safety bound
            sweep_starts: Re-run sheet finding from every start vertex and
                          require equivalent sheets
        """
        self.bus = bus
        self.workers = max(1, workers)
        self.max_traversals = max_traversals
        self.sweep_starts = sweep_starts

    def map_circuit(self, circuit: CircuitGeometry) -> List[MappedQubit]:
        """Map every qubit of the circuit"""
        logger.info(f"🧭 Mapping {len(circuit.qubits)} logical qubit(s)")
        if self.workers == 1 or len(circuit.qubits) < 2:
            mapped = [self.map_qubit(geometry, circuit) for geometry in circuit.qubits]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                mapped = list(pool.map(lambda g: self.map_qubit(g, circuit), circuit.qubits))
        return mapped

    def map_qubit(self, geometry: LogicalQubitGeometry, circuit: CircuitGeometry = None) -> MappedQubit:
        """Graph, tubes, sub-sheets and sheet of one logical qubit"""
        qubit_id = geometry.qubit_id
        self._emit(MappingEvent.QUBIT_PARSED, qubit_id=qubit_id, geometry=geometry)

        graph = build_cycle_graph(geometry)
        self._emit(MappingEvent.GRAPH_BUILT, qubit_id=qubit_id, size=len(graph))

        qubit_tuple = map_tubes(graph, geometry.layer, qubit_id, self.bus)
        result = find_subsheets(graph, None, qubit_id, self.bus, self.max_traversals)
        assemble_sheet(result.subsheets, qubit_tuple)
        self._emit(MappingEvent.SHEET_ASSEMBLED, qubit_id=qubit_id, size=len(qubit_tuple.sheet))

        if self.sweep_starts:
            self._sweep(graph, qubit_tuple, circuit)

        mapped = MappedQubit(geometry, graph, qubit_tuple, result)
        logger.info(
            f"✅ Qubit {qubit_id} ({geometry.layer.value}): |K|={len(graph)} "
            f"|D|={len(qubit_tuple.D)} |sheet|={len(qubit_tuple.sheet)} |tube|={len(qubit_tuple.tube)}"
        )
        self._emit(MappingEvent.QUBIT_MAPPED, qubit_id=qubit_id, qubit_tuple=qubit_tuple, stats=result)
        return mapped

    def _sweep(self, graph: CycleGraph, qubit_tuple: QubitTuple, circuit: Optional[CircuitGeometry]):
        """
        Sheets from every start vertex must match the reference sheet;
        for non-planar loops they may differ by a closed surface

        Raises:
            SheetFindingError: naming the first disagreeing start
        """
        reference = qubit_tuple.sheet
        planar = graph.is_planar()
        for start in range(1, len(graph)):
            result = find_subsheets(graph, start, qubit_tuple.qubit_id, None, self.max_traversals)
            sheet = xor_sheets(result.subsheets, qubit_tuple.layer)
            if sheet == reference:
                continue
            if not planar and circuit is not None and sheets_equivalent(reference, sheet, circuit):
                continue
            raise SheetFindingError(
                f"qubit {qubit_tuple.qubit_id}: sheet from start {start} differs from start 0 "
                f"({len(sheet ^ reference)} qubits)"
            )
        logger.debug(f"🔄 Qubit {qubit_tuple.qubit_id}: {len(graph)} start vertices agree")

    def _emit(self, event_type: str, **kwargs):
        if self.bus is not None:
            self.bus.emit(event_type, **kwargs)


def sheets_equivalent(first, second, circuit: CircuitGeometry) -> bool:
    """True when first XOR second is a closed surface (no Z boundary)"""
    return not surface_product(circuit.lattice, set(first) ^ set(second)).z_support
