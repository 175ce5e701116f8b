"""
Instruction Emitter
Per-physical-qubit measurement bases for the whole lattice
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from src.config import MappingConfig
from src.errors import EmissionError
from src.lattice import Coord, LatticeSpec, sort_coords
from src.logger import logger


class Basis(Enum):
    X = "X"
    Z = "Z"
    ROTATED_Z = "RZ"


@dataclass(frozen=True)
class MeasurementInstruction:
    """One measurement; angle names the symbolic rotation of RZ measurements"""

    coord: Coord
    basis: Basis
    angle: Optional[str] = None

    def __str__(self):
        basis = f"{self.basis.value}:{self.angle}" if self.basis is Basis.ROTATED_Z else self.basis.value
        return f"{self.coord.w} {self.coord.h} {self.coord.t} {basis}"


def defect_union(qubit_tuples) -> set:
    """
    Union of all D sets

    Raises:
        EmissionError: if two logical qubits claim the same defect qubit
    """
    owner: Dict[Coord, str] = {}
    for qubit_tuple in qubit_tuples:
        for coord in qubit_tuple.D:
            if coord in owner and owner[coord] != qubit_tuple.qubit_id:
                raise EmissionError(
                    f"defects of qubits {owner[coord]} and {qubit_tuple.qubit_id} collide at {coord}"
                )
            owner[coord] = qubit_tuple.qubit_id
    return set(owner)


def rotated_qubits(qubit_tuples) -> Dict[Coord, str]:
    """Rotated-basis qubit -> angle name, numbered per qubit in (t, h, w) order of J"""
    rotated: Dict[Coord, str] = {}
    for qubit_tuple in sorted(qubit_tuples, key=lambda q: q.qubit_id):
        for index, center in enumerate(sort_coords(qubit_tuple.J)):
            target = qubit_tuple.injections.get(center)
            if target is None:
                raise EmissionError(f"qubit {qubit_tuple.qubit_id}: no rotated qubit recorded for {center}")
            rotated[target] = f"{MappingConfig.INJECTION_ANGLE_PREFIX}_{qubit_tuple.qubit_id}_{index}"
    return rotated


def build_instructions(lattice: LatticeSpec, qubit_tuples) -> List[MeasurementInstruction]:
    """
    One instruction per qubit position, sorted by (t, h, w)

    Raises:
        EmissionError: on colliding defects or a rotated qubit inside a defect
    """
    qubit_tuples = list(qubit_tuples)
    defects = defect_union(qubit_tuples)
    rotated = rotated_qubits(qubit_tuples)
    clash = defects & set(rotated)
    if clash:
        raise EmissionError(f"rotated-basis qubit {sort_coords(clash)[0]} lies inside a defect")

    instructions = []
    for coord in lattice.qubit_positions():
        if coord in defects:
            instructions.append(MeasurementInstruction(coord, Basis.Z))
        elif coord in rotated:
            instructions.append(MeasurementInstruction(coord, Basis.ROTATED_Z, rotated[coord]))
        else:
            instructions.append(MeasurementInstruction(coord, Basis.X))

    logger.debug(
        f"📝 {len(instructions)} instructions: {len(defects)} Z, {len(rotated)} RZ, "
        f"{len(instructions) - len(defects) - len(rotated)} X"
    )
    return instructions


def emit_instructions(lattice: LatticeSpec, qubit_tuples) -> str:
    """Instruction stream text, one '<w> <h> <t> <basis>' line per qubit"""
    return "".join(f"{instruction}\n" for instruction in build_instructions(lattice, qubit_tuples))
