"""
Verification
Stabilizer-product oracle and structural checks
"""

from .pauli import PauliOperator, cluster_stabilizer, multiply, surface_product
from .verifier import (
    SHEET,
    STRUCTURE,
    TUBE,
    SurfaceReport,
    allowed_residual,
    verify_circuit,
    verify_surface,
    verify_tuple,
)

__all__ = [
    "PauliOperator",
    "cluster_stabilizer",
    "multiply",
    "surface_product",
    "SHEET",
    "STRUCTURE",
    "TUBE",
    "SurfaceReport",
    "allowed_residual",
    "verify_circuit",
    "verify_surface",
    "verify_tuple",
]
