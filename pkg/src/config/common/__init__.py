"""
Common Configuration
Shared settings used across the entire mapper
"""

from .render import RenderConfig
from .colors import Colors

__all__ = ["RenderConfig", "Colors"]
