"""
Graphs
Cycle-graph intermediate representation
"""

from .cycle_graph import CycleGraph
from .builder import build_cycle_graph

__all__ = ["CycleGraph", "build_cycle_graph"]
