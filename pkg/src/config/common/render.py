"""
Render Configuration
"""


class RenderConfig:
    """Slice rendering settings"""

    # Pixels per lattice position
    CELL_PIXELS = 12
    MARGIN = 8

    # Qubit dot radius relative to CELL_PIXELS
    DOT_RATIO = 0.4
