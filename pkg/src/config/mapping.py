"""
Mapping Configuration
Bounds and defaults for the tube/sheet mapping passes
"""


class MappingConfig:
    """Mapping algorithm settings"""

    # Sheet finding gives up after MAX_TRAVERSAL_FACTOR * |K0|^2 + TRAVERSAL_SLACK traversals
    MAX_TRAVERSAL_FACTOR = 8
    TRAVERSAL_SLACK = 8

    # Injection segments must be a multiple of this many positions long
    INJECTION_MODULUS = 4

    # Symbolic rotated-basis angle names: theta_<qubit>_<n>
    INJECTION_ANGLE_PREFIX = "theta"

    # Logical qubits mapped in parallel
    DEFAULT_WORKERS = 4
