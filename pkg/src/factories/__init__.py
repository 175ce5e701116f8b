"""
Factories
Factory classes for creating commands
"""

from .command_factory import CommandFactory

__all__ = ["CommandFactory"]
