"""
Color Palette Configuration
Centralized color definitions for rendered lattice slices
"""


class Colors:
    """Color palette - RGB tuples"""

    # Basic colors
    BLACK = (0, 0, 0)
    DARK_GRAY = (64, 64, 64)
    LIGHT_GRAY = (192, 192, 192)

    # Qubit set colors
    GREEN = (0, 200, 0)
    BLUE = (40, 110, 255)
    RED = (255, 0, 0)
    YELLOW = (255, 255, 0)
    ORANGE = (255, 165, 0)

    # Semantic colors
    BACKGROUND = DARK_GRAY
    PLAIN_QUBIT = LIGHT_GRAY
    CELL_CENTER = BLACK
    DEFECT = GREEN
    LOGIC_OPERATOR = ORANGE
    TUBE = BLUE
    SHEET = RED
    INJECTION = YELLOW
