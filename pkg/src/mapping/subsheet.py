"""
Sub-Sheets
Axis-aligned rectangles of qubits; a sheet is their symmetric difference
"""

from dataclasses import dataclass
from typing import Iterable, Set, Tuple

import numpy as np

from src.lattice import SIDE_CLASS, Coord, Layer


@dataclass(frozen=True)
class SubSheet:
    """Rectangle given by two diagonal corners (cell centers)"""

    ss1: Coord
    ss2: Coord

    @property
    def lower(self) -> Coord:
        return Coord(*(min(a, b) for a, b in zip(self.ss1, self.ss2)))

    @property
    def upper(self) -> Coord:
        return Coord(*(max(a, b) for a, b in zip(self.ss1, self.ss2)))

    @property
    def is_degenerate(self) -> bool:
        """Line or point: spans fewer than two axes"""
        return sum(1 for a, b in zip(self.ss1, self.ss2) if a == b) >= 2

    def box(self) -> Tuple[Coord, Coord]:
        """(lower, upper) corners, independent of corner order"""
        return self.lower, self.upper

    def __str__(self):
        return f"[{self.ss1} .. {self.ss2}]"


def _box_classes(ss: SubSheet) -> Tuple[np.ndarray, Coord]:
    """Even-component counts over the box, indexed [w, h, t], plus the box origin"""
    lower, upper = ss.box()
    shape = tuple(u - l + 1 for l, u in zip(lower, upper))
    w, h, t = np.indices(shape)
    counts = ((w + lower.w) % 2 == 0).astype(np.int8) + ((h + lower.h) % 2 == 0) + ((t + lower.t) % 2 == 0)
    return counts, lower


def _positions(mask: np.ndarray, origin: Coord) -> Set[Coord]:
    w, h, t = np.nonzero(mask)
    return {Coord(int(a) + origin.w, int(b) + origin.h, int(c) + origin.t) for a, b, c in zip(w, h, t)}


def boundingbox(ss: SubSheet) -> Set[Coord]:
    """Every qubit position inside the closed box spanned by ss"""
    counts, origin = _box_classes(ss)
    return _positions((counts == 1) | (counts == 2), origin)


def sheet_qubits(ss: SubSheet, layer: Layer) -> Set[Coord]:
    """boundingbox(ss) restricted to side qubits of layer"""
    counts, origin = _box_classes(ss)
    return _positions(counts == SIDE_CLASS[layer].value, origin)


def xor_sheets(subsheets: Iterable[SubSheet], layer: Layer) -> Set[Coord]:
    """
    Symmetric difference of the side qubits of every sub-sheet

    Accumulates on a dense parity grid covering all boxes.
    """
    subsheets = list(subsheets)
    if not subsheets:
        return set()
    upper = Coord(*(max(ss.upper[axis] for ss in subsheets) + 1 for axis in range(3)))
    parity = np.zeros(upper, dtype=bool)
    for ss in subsheets:
        lower, top = ss.box()
        parity[lower.w : top.w + 1, lower.h : top.h + 1, lower.t : top.t + 1] ^= True

    w, h, t = np.indices(upper)
    counts = (w % 2 == 0).astype(np.int8) + (h % 2 == 0) + (t % 2 == 0)
    return _positions(parity & (counts == SIDE_CLASS[layer].value), Coord(0, 0, 0))
