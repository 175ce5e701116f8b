"""
Output Configuration
File names and text formats of emitted artifacts
"""


class OutputConfig:
    """Artifact settings"""

    INSTRUCTIONS_FILE = "instructions.txt"
    TRACKING_FILE = "tracking.txt"
    GEOMETRY_FILE = "geometry.txt"
    REPORT_FILE = "report.txt"

    # Tracking document set order
    TRACKING_SETS = ("D", "I", "O", "J", "X", "Z")

    # Rendered slices: slice_t<NN>.png
    RENDER_PATTERN = "slice_t{t:03d}.png"
