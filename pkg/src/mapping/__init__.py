"""
Mapping
Tube and sheet mapping of logical qubits onto the cluster lattice
"""

from .qubit_tuple import QubitTuple
from .subsheet import SubSheet, boundingbox, sheet_qubits, xor_sheets
from .tube_mapper import map_tubes
from .sheet_mapper import (
    ReduceOutcome,
    SheetFinder,
    SheetFindingResult,
    assemble_sheet,
    can_reduce,
    collapse_duplicates,
    find_subsheets,
    reduce,
    reshape,
)
from .mapper import CircuitMapper, MappedQubit, sheets_equivalent

__all__ = [
    "QubitTuple",
    "SubSheet",
    "boundingbox",
    "sheet_qubits",
    "xor_sheets",
    "map_tubes",
    "ReduceOutcome",
    "SheetFinder",
    "SheetFindingResult",
    "assemble_sheet",
    "can_reduce",
    "collapse_duplicates",
    "find_subsheets",
    "reduce",
    "reshape",
    "CircuitMapper",
    "MappedQubit",
    "sheets_equivalent",
]
