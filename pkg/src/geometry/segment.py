"""
Segments
Typed, axis-aligned pieces of a logical qubit's defect loop
"""

from dataclasses import dataclass
from enum import Enum

from src.lattice import Coord, Direction, direction_between


class SegmentType(Enum):
    """What a segment does to the logical qubit"""

    INIT = "init"
    MEASURE = "measure"
    INJECT = "inject"
    DEFECT = "defect"


@dataclass(frozen=True)
class Segment:
    """Directed segment between two cell centers; direction comes from (begin, end)"""

    begin: Coord
    end: Coord
    seg_type: SegmentType

    @property
    def direction(self) -> Direction:
        return direction_between(self.begin, self.end)

    @property
    def length(self) -> int:
        return self.begin.manhattan(self.end)

    def __str__(self):
        return f"{self.seg_type.value} {self.begin} {self.end}"
