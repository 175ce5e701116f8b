"""
Position Classes
Parity classification of lattice positions
"""

from enum import Enum


class Layer(Enum):
    """Sublattice a logical qubit lives on"""

    PRIMAL = "primal"
    DUAL = "dual"

    @property
    def other(self) -> "Layer":
        return Layer.DUAL if self is Layer.PRIMAL else Layer.PRIMAL


class PositionClass(Enum):
    """
    Class of a lattice position, keyed by its number of even components

    0 even -> primal cell center
    1 even -> primal face (= dual side)
    2 even -> dual face (= primal side)
    3 even -> dual cell center
    """

    PRIMAL_CENTER = 0
    PRIMAL_FACE = 1
    DUAL_FACE = 2
    DUAL_CENTER = 3

    @classmethod
    def from_even_count(cls, even_count: int) -> "PositionClass":
        return cls(even_count)

    @property
    def is_qubit(self) -> bool:
        return self in (PositionClass.PRIMAL_FACE, PositionClass.DUAL_FACE)

    @property
    def is_center(self) -> bool:
        return not self.is_qubit

    @property
    def layer(self) -> Layer:
        if self in (PositionClass.PRIMAL_CENTER, PositionClass.PRIMAL_FACE):
            return Layer.PRIMAL
        return Layer.DUAL


# Lookups by layer
CENTER_CLASS = {Layer.PRIMAL: PositionClass.PRIMAL_CENTER, Layer.DUAL: PositionClass.DUAL_CENTER}
FACE_CLASS = {Layer.PRIMAL: PositionClass.PRIMAL_FACE, Layer.DUAL: PositionClass.DUAL_FACE}

# Side qubits of a layer are the face qubits of the other layer
SIDE_CLASS = {Layer.PRIMAL: PositionClass.DUAL_FACE, Layer.DUAL: PositionClass.PRIMAL_FACE}
