"""
Lattice Coordinates
Integer (w, h, t) positions and signed axis directions
"""

from typing import NamedTuple

from src.config import LatticeConfig


class Coord(NamedTuple):
    """Raw lattice position; cell centers of one sublattice are 2 apart"""

    w: int
    h: int
    t: int

    def shifted(self, axis: int, delta: int) -> "Coord":
        """Return this coordinate moved by delta along one axis"""
        values = list(self)
        values[axis] += delta
        return Coord(*values)

    def plus(self, other) -> "Coord":
        return Coord(self.w + other[0], self.h + other[1], self.t + other[2])

    def minus(self, other) -> "Coord":
        return Coord(self.w - other[0], self.h - other[1], self.t - other[2])

    def manhattan(self, other) -> int:
        return abs(self.w - other[0]) + abs(self.h - other[1]) + abs(self.t - other[2])

    def even_count(self) -> int:
        """Number of even components (drives the position class)"""
        return sum(1 for value in self if value % 2 == 0)

    def sort_key(self):
        """Emission order: t, then h, then w"""
        return (self.t, self.h, self.w)

    def __str__(self):
        return f"{self.w},{self.h},{self.t}"

    @classmethod
    def parse(cls, text: str) -> "Coord":
        """
        Parse a 'w,h,t' triple

        Raises:
            ValueError: if the text is not three comma-separated integers
        """
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected w,h,t triple, got '{text}'")
        return cls(*(int(part) for part in parts))


class Direction(NamedTuple):
    """One of the six lattice directions {±w, ±h, ±t}"""

    axis: int
    sign: int

    def __neg__(self) -> "Direction":
        return Direction(self.axis, -self.sign)

    def unit(self) -> Coord:
        values = [0, 0, 0]
        values[self.axis] = self.sign
        return Coord(*values)

    def is_parallel(self, other: "Direction") -> bool:
        """True for equal or opposite directions"""
        return self.axis == other.axis

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}{LatticeConfig.AXIS_NAMES[self.axis]}"


def direction_between(begin: Coord, end: Coord) -> Direction:
    """
    Signed axis of end - begin

    Raises:
        ValueError: for degenerate or non-axis-aligned pairs
    """
    delta = end.minus(begin)
    moving = [axis for axis in range(3) if delta[axis] != 0]
    if not moving:
        raise ValueError(f"degenerate segment at {begin}")
    if len(moving) > 1:
        raise ValueError(f"segment {begin} -> {end} is not axis-aligned")
    axis = moving[0]
    return Direction(axis, 1 if delta[axis] > 0 else -1)


def sort_coords(coords):
    """Sort coordinates by (t, h, w)"""
    return sorted(coords, key=Coord.sort_key)
