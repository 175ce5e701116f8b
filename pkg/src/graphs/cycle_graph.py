"""
Cycle Graph
Rewritable Hamiltonian cycle over cell-center vertices
Vertices are integer ids in a doubly linked ring; each edge is keyed by its begin vertex
"""

from typing import Dict, Iterable, Iterator, List, Optional

from src.errors import GraphError
from src.geometry import SegmentType
from src.lattice import Coord, Direction, direction_between


class CycleGraph:
    """
    Directed cycle G = (K, V)

    Edge (k, ngh(k)) carries a SegmentType. Edges created by rewriting
    are DEFECT edges.
    """

    def __init__(self):
        """Create an empty graph; use from_coordinates to populate"""
        self._coord: Dict[int, Coord] = {}
        self._next: Dict[int, int] = {}
        self._prev: Dict[int, int] = {}
        self._edge_type: Dict[int, SegmentType] = {}
        self._next_id = 0
        self.head: Optional[int] = None  # Any live vertex, used as traversal anchor

    @classmethod
    def from_coordinates(cls, coords: Iterable, edge_types: Optional[Iterable[SegmentType]] = None):
        """
        Build a cycle visiting coords in order and closing back to the first

        Args:
            coords: Vertex coordinates in cycle order
            edge_types: Type of edge i -> i+1 (all DEFECT if omitted)

        Raises:
            GraphError: for fewer than two vertices or a non-axis-aligned edge
        """
        coords = [Coord(*c) for c in coords]
        types = list(edge_types) if edge_types is not None else [SegmentType.DEFECT] * len(coords)
        if len(coords) < 2:
            raise GraphError("a cycle needs at least two vertices")
        if len(types) != len(coords):
            raise GraphError(f"{len(coords)} vertices but {len(types)} edge types")

        graph = cls()
        previous = None
        for coord, edge_type in zip(coords, types):
            previous = graph._link_after(previous, coord, edge_type)
        for index, coord in enumerate(coords):
            following = coords[(index + 1) % len(coords)]
            graph._require_aligned(coord, following)
        return graph

    def copy(self) -> "CycleGraph":
        """Independent snapshot with the same vertex ids"""
        clone = CycleGraph()
        clone._coord = dict(self._coord)
        clone._next = dict(self._next)
        clone._prev = dict(self._prev)
        clone._edge_type = dict(self._edge_type)
        clone._next_id = self._next_id
        clone.head = self.head
        return clone

    # ==================== QUERIES ====================

    def __len__(self):
        return len(self._coord)

    def __contains__(self, k):
        return k in self._coord

    def vertices(self, start: Optional[int] = None) -> Iterator[int]:
        """Vertex ids in cycle order beginning at start (default: head)"""
        if not self._coord:
            return
        k = self.head if start is None else start
        for _ in range(len(self._coord)):
            yield k
            k = self._next[k]

    def coordinates(self, start: Optional[int] = None) -> List[Coord]:
        return [self._coord[k] for k in self.vertices(start)]

    def edge_types(self, start: Optional[int] = None) -> List[SegmentType]:
        return [self._edge_type[k] for k in self.vertices(start)]

    def coord(self, k: int) -> Coord:
        return self._coord[k]

    def edge_type(self, k: int) -> SegmentType:
        """Type of the edge leaving k"""
        return self._edge_type[k]

    def ngh(self, k: int, n: int = 1) -> int:
        """The n-th neighbour of k along the cycle (negative n walks backwards)"""
        step = self._next if n >= 0 else self._prev
        for _ in range(abs(n)):
            k = step[k]
        return k

    def dir(self, a: int, b: Optional[int] = None) -> Direction:
        """
        Lattice direction of edge (a, b); b defaults to ngh(a)

        Raises:
            GraphError: for a degenerate or diagonal edge
        """
        b = self._next[a] if b is None else b
        try:
            return direction_between(self._coord[a], self._coord[b])
        except ValueError as exc:
            raise GraphError(str(exc)) from exc

    def mirr(self, a: int) -> Coord:
        """Coordinate of a mirrored at the line through its predecessor and successor"""
        before = self._coord[self._prev[a]]
        after = self._coord[self._next[a]]
        return before.plus(after).minus(self._coord[a])

    @staticmethod
    def clst(a, b, c):
        """Whichever of b, c is closer to a (Manhattan); ties return b"""
        a = Coord(*a)
        return b if a.manhattan(b) <= a.manhattan(c) else c

    def vertex_at(self, coord) -> Optional[int]:
        """Id of the vertex at coord, or None"""
        for k, value in self._coord.items():
            if value == coord:
                return k
        return None

    def lexicographic_min(self) -> int:
        """Vertex with the smallest (w, h, t) coordinate"""
        return min(self._coord, key=lambda k: tuple(self._coord[k]))

    def is_planar(self) -> bool:
        """True when every vertex shares one coordinate component"""
        coords = list(self._coord.values())
        return any(len({c[axis] for c in coords}) == 1 for axis in range(3))

    def is_collinear_at(self, a: int) -> bool:
        """True when prev(a), a, next(a) lie on one axis line (straight or reversal)"""
        before, here, after = self._coord[self._prev[a]], self._coord[a], self._coord[self._next[a]]
        if before == here or here == after:
            return True
        try:
            return direction_between(before, here).is_parallel(direction_between(here, after))
        except ValueError:
            return False

    # ==================== MUTATIONS ====================

    def remove(self, a: int):
        """
        Remove vertex a and join its neighbours with a DEFECT edge

        Raises:
            GraphError: if a is unknown or the joining edge would not be axis-aligned
        """
        if a not in self._coord:
            raise GraphError(f"vertex {a} not in graph")
        if len(self._coord) <= 2:
            raise GraphError("cannot shrink a cycle below two vertices")
        before = self._coord[self._prev[a]]
        after = self._coord[self._next[a]]
        if before != after:
            self._require_aligned(before, after)
        self._unlink(a)

    def insert(self, a: int, coord, c: int) -> int:
        """
        Replace edge (a, c) by (a, b), (b, c) where b is a new vertex at coord

        Returns:
            Id of the inserted vertex

        Raises:
            GraphError: if (a, c) is not an edge or a new edge is not axis-aligned
        """
        if self._next.get(a) != c:
            raise GraphError(f"({a}, {c}) is not an edge")
        coord = Coord(*coord)
        self._require_aligned(self._coord[a], coord)
        self._require_aligned(coord, self._coord[c])
        return self._insert_after(a, coord)

    # ==================== UNCHECKED MUTATIONS ====================
    # Rewriting rules pass through transient diagonal states; callers restore alignment.

    def _unlink(self, a: int):
        before, after = self._prev[a], self._next[a]
        self._next[before] = after
        self._prev[after] = before
        self._edge_type[before] = SegmentType.DEFECT
        del self._coord[a], self._next[a], self._prev[a], self._edge_type[a]
        if self.head == a:
            self.head = after

    def _insert_after(self, a: int, coord) -> int:
        """Insert between a and ngh(a); both resulting edges are DEFECT"""
        self._edge_type[a] = SegmentType.DEFECT
        return self._link_after(a, Coord(*coord), SegmentType.DEFECT)

    def _link_after(self, a: Optional[int], coord: Coord, edge_type: SegmentType = SegmentType.DEFECT) -> int:
        k = self._next_id
        self._next_id += 1
        self._coord[k] = Coord(*coord)
        self._edge_type[k] = edge_type
        if a is None:
            if len(self._coord) > 1:
                raise GraphError("anchor vertex required in a non-empty graph")
            self._next[k] = self._prev[k] = k
            self.head = k
            return k
        after = self._next[a]
        self._next[a] = k
        self._prev[k] = a
        self._next[k] = after
        self._prev[after] = k
        return k

    @staticmethod
    def _require_aligned(begin: Coord, end: Coord):
        try:
            direction_between(begin, end)
        except ValueError as exc:
            raise GraphError(str(exc)) from exc

    # ==================== COMPARISON ====================

    def __eq__(self, other):
        """Equal coordinate sequences up to rotation of the start vertex"""
        if not isinstance(other, CycleGraph):
            return NotImplemented
        mine, theirs = self.coordinates(), other.coordinates()
        if len(mine) != len(theirs):
            return False
        if not mine:
            return True
        if mine[0] not in theirs:
            return False
        offset = theirs.index(mine[0])
        return mine == theirs[offset:] + theirs[:offset]

    __hash__ = None

    def __repr__(self):
        return f"CycleGraph({', '.join(str(c) for c in self.coordinates())})"
