"""
Configuration Module
Centralized mapper configuration
"""

# Common configs
from .common import Colors, RenderConfig

# Lattice config
from .lattice import LatticeConfig

# Mapping config
from .mapping import MappingConfig

# Output config
from .output import OutputConfig

__all__ = [
    # Common
    "Colors",
    "RenderConfig",
    # Lattice
    "LatticeConfig",
    # Mapping
    "MappingConfig",
    # Output
    "OutputConfig",
]
