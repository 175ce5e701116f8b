"""
Lattice Configuration
Geometry constants of the 3D cluster lattice
"""


class LatticeConfig:
    """Cluster lattice settings"""

    # Cell centers of one sublattice are this many positions apart
    CELL_SPACING = 2

    # Axis names in coordinate order
    AXIS_NAMES = ("w", "h", "t")
