"""
Logical Qubit Geometry
One logical qubit: a layer plus a closed chain of typed segments
"""

from dataclasses import dataclass
from typing import List, Tuple

from src.errors import GeometryError
from src.config import MappingConfig
from src.lattice import CENTER_CLASS, Coord, Layer, LatticeSpec, PositionClass, segment_cells
from .segment import Segment, SegmentType


@dataclass(frozen=True)
class LogicalQubitGeometry:
    """
    Geometric description of one logical qubit

    Attributes:
        qubit_id: Name used in every output
        layer: PRIMAL or DUAL sublattice
        segments: Closed chain in cycle order (normalized: collinear
                  same-type runs merged)
    """

    qubit_id: str
    layer: Layer
    segments: Tuple[Segment, ...]

    @classmethod
    def build(cls, qubit_id: str, layer: Layer, segments, lattice: LatticeSpec = None):
        """Normalize and validate a raw segment list"""
        merged = normalize_segments(list(segments))
        geometry = cls(qubit_id, layer, tuple(merged))
        geometry.validate(lattice)
        return geometry

    @property
    def vertices(self) -> List[Coord]:
        return [segment.begin for segment in self.segments]

    @property
    def has_injection(self) -> bool:
        return any(s.seg_type is SegmentType.INJECT for s in self.segments)

    def pivot_count(self) -> int:
        """Vertices where the loop changes direction"""
        count = 0
        for index, segment in enumerate(self.segments):
            previous = self.segments[index - 1]
            if not previous.direction.is_parallel(segment.direction):
                count += 1
        return count

    def validate(self, lattice: LatticeSpec = None):
        """
        Check chaining, closure, alignment, parity and (optionally) bounds

        Raises:
            GeometryError: describing the first violation found
        """
        if len(self.segments) < 2:
            raise GeometryError(f"qubit {self.qubit_id}: a loop needs at least two segments")

        center_class = CENTER_CLASS[self.layer]
        for index, segment in enumerate(self.segments):
            where = f"qubit {self.qubit_id} segment {index + 1}"
            if segment.begin == segment.end:
                raise GeometryError(f"{where}: zero-length segment")
            try:
                segment.direction
            except ValueError as exc:
                raise GeometryError(f"{where}: {exc}") from exc
            for end in (segment.begin, segment.end):
                cls = PositionClass.from_even_count(end.even_count())
                if cls is not center_class:
                    raise GeometryError(
                        f"{where}: {end} is {cls.name}, expected {center_class.name}"
                    )
                if lattice is not None and not lattice.is_interior_center(end):
                    raise GeometryError(f"{where}: {end} outside lattice interior")
            if segment.seg_type is SegmentType.INJECT:
                if segment.length % MappingConfig.INJECTION_MODULUS:
                    raise GeometryError(
                        f"{where}: injection length {segment.length} is not a multiple of "
                        f"{MappingConfig.INJECTION_MODULUS}"
                    )
            following = self.segments[(index + 1) % len(self.segments)]
            if segment.end != following.begin:
                if index + 1 == len(self.segments):
                    raise GeometryError(f"qubit {self.qubit_id}: open cycle, {segment.end} != {following.begin}")
                raise GeometryError(f"{where}: ends at {segment.end} but next begins at {following.begin}")
            if segment.direction == -following.direction:
                raise GeometryError(f"{where}: loop reverses onto itself at {segment.end}")

        if len(set(self.vertices)) != len(self.vertices):
            raise GeometryError(f"qubit {self.qubit_id}: loop visits a vertex twice")

        # Half-open edges tile the loop: every cell center belongs to exactly one
        owners = {}
        for index, segment in enumerate(self.segments):
            for cell in segment_cells(segment.begin, segment.end, segment.direction)[:-1]:
                if cell in owners:
                    raise GeometryError(
                        f"qubit {self.qubit_id}: loop crosses itself at {cell} "
                        f"(segments {owners[cell] + 1} and {index + 1})"
                    )
                owners[cell] = index

        pivots = self.pivot_count()
        if pivots % 2:
            raise GeometryError(f"qubit {self.qubit_id}: odd number of pivot vertices ({pivots})")


def normalize_segments(segments: List[Segment]) -> List[Segment]:
    """
    Merge consecutive collinear segments of the same type

    The chain is treated as cyclic, so a run spanning the end and the
    start of the list is merged too. Broken chains are returned untouched
    and reported by validation.
    """
    if len(segments) < 2 or not _is_chained(segments):
        return segments

    def can_merge(first: Segment, second: Segment) -> bool:
        try:
            return first.seg_type is second.seg_type and first.direction == second.direction
        except ValueError:
            return False

    merged: List[Segment] = []
    for segment in segments:
        if merged and can_merge(merged[-1], segment):
            merged[-1] = Segment(merged[-1].begin, segment.end, segment.seg_type)
        else:
            merged.append(segment)
    # Wrap-around run
    while len(merged) > 2 and can_merge(merged[-1], merged[0]):
        last = merged.pop()
        merged[0] = Segment(last.begin, merged[0].end, last.seg_type)
    return merged


def _is_chained(segments: List[Segment]) -> bool:
    return all(segments[i].end == segments[i + 1].begin for i in range(len(segments) - 1))
