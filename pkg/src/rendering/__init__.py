"""
Rendering
Off-screen images of mapped lattices
"""

from .lattice_renderer import LatticeRenderer

__all__ = ["LatticeRenderer"]
