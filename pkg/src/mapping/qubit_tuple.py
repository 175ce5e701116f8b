"""
Qubit Tuple
Per-logical-qubit output sets (l, D, I, O, J, X, Z)
"""

from dataclasses import dataclass, field
from typing import Dict, Set

from src.lattice import Coord, Layer


@dataclass
class QubitTuple:
    """
    Everything needed to drive and track one logical qubit

    Attributes:
        qubit_id: Name of the logical qubit
        layer: PRIMAL or DUAL
        D: Defect qubits (measured in Z)
        I: Input logic-operator qubits
        O: Output logic-operator qubits
        J: Injection cell centers
        X: X correlation surface (tube of a primal, sheet of a dual)
        Z: Z correlation surface (sheet of a primal, tube of a dual)
    """

    qubit_id: str
    layer: Layer
    D: Set[Coord] = field(default_factory=set)
    I: Set[Coord] = field(default_factory=set)  # noqa: E741
    O: Set[Coord] = field(default_factory=set)  # noqa: E741
    J: Set[Coord] = field(default_factory=set)
    X: Set[Coord] = field(default_factory=set)
    Z: Set[Coord] = field(default_factory=set)
    injections: Dict[Coord, Coord] = field(default_factory=dict)  # J center -> rotated qubit

    @property
    def tube(self) -> Set[Coord]:
        return self.X if self.layer is Layer.PRIMAL else self.Z

    @tube.setter
    def tube(self, value: Set[Coord]):
        if self.layer is Layer.PRIMAL:
            self.X = set(value)
        else:
            self.Z = set(value)

    @property
    def sheet(self) -> Set[Coord]:
        return self.Z if self.layer is Layer.PRIMAL else self.X

    @sheet.setter
    def sheet(self, value: Set[Coord]):
        if self.layer is Layer.PRIMAL:
            self.Z = set(value)
        else:
            self.X = set(value)

    @property
    def logic_operators(self) -> Set[Coord]:
        """D | I | O: qubits a surface may end on"""
        return self.D | self.I | self.O

    def named_sets(self) -> Dict[str, Set[Coord]]:
        """The six coordinate sets keyed by their tracking names"""
        return {"D": self.D, "I": self.I, "O": self.O, "J": self.J, "X": self.X, "Z": self.Z}
