"""
Emitters
Instruction stream, tracking document and geometry export
"""

from .instruction_emitter import (
    Basis,
    MeasurementInstruction,
    build_instructions,
    defect_union,
    emit_instructions,
    rotated_qubits,
)
from .tracking_emitter import emit_tracking, parse_tracking
from .geometry_exporter import export_geometry

__all__ = [
    "Basis",
    "MeasurementInstruction",
    "build_instructions",
    "defect_union",
    "emit_instructions",
    "rotated_qubits",
    "emit_tracking",
    "parse_tracking",
    "export_geometry",
]
