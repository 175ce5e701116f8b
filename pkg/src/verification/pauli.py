"""
Pauli Supports
Sign-free Pauli operators and cluster-state stabilizers
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable

from src.lattice import Coord, LatticeSpec


@dataclass(frozen=True)
class PauliOperator:
    """Pauli operator reduced to its X and Z supports"""

    x_support: FrozenSet[Coord] = frozenset()
    z_support: FrozenSet[Coord] = frozenset()

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return PauliOperator(self.x_support ^ other.x_support, self.z_support ^ other.z_support)

    @property
    def is_identity(self) -> bool:
        return not self.x_support and not self.z_support

    def __str__(self):
        return f"X{sorted(self.x_support)} Z{sorted(self.z_support)}"


def cluster_stabilizer(lattice: LatticeSpec, q: Coord) -> PauliOperator:
    """
    X on q, Z on every entangled neighbour of q

    Raises:
        LatticeError: if q is not a qubit position
    """
    return PauliOperator(frozenset({Coord(*q)}), frozenset(lattice.entangled_neighbors(q)))


def multiply(ops: Iterable[PauliOperator]) -> PauliOperator:
    """Product of operators (supports XOR componentwise)"""
    x_support, z_support = set(), set()
    for op in ops:
        x_support ^= op.x_support
        z_support ^= op.z_support
    return PauliOperator(frozenset(x_support), frozenset(z_support))


def surface_product(lattice: LatticeSpec, surface: Iterable[Coord]) -> PauliOperator:
    """Product of the cluster stabilizers of every qubit in surface"""
    return multiply(cluster_stabilizer(lattice, q) for q in surface)
