"""
Cycle Graph Builder
Turns a validated logical-qubit geometry into its cycle graph
"""

from src.geometry import LogicalQubitGeometry
from src.logger import logger
from .cycle_graph import CycleGraph


def build_cycle_graph(geometry: LogicalQubitGeometry) -> CycleGraph:
    """
    One vertex per segment endpoint, one typed edge per segment

    Args:
        geometry: Normalized and validated logical qubit

    Returns:
        CycleGraph whose head is the first segment's begin
    """
    graph = CycleGraph.from_coordinates(
        [segment.begin for segment in geometry.segments],
        [segment.seg_type for segment in geometry.segments],
    )
    logger.debug(f"🔗 Qubit {geometry.qubit_id}: cycle graph with {len(graph)} vertices")
    return graph
