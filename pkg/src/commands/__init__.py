"""
Commands
Command-line commands of the mapper
"""

from .run_config import RunConfig
from .base_command import BaseCommand, EXIT_OK, EXIT_INVALID, EXIT_VERIFY_FAILED
from .map_command import MapCommand
from .verify_command import VerifyCommand
from .stats_command import StatsCommand

__all__ = [
    "RunConfig",
    "BaseCommand",
    "EXIT_OK",
    "EXIT_INVALID",
    "EXIT_VERIFY_FAILED",
    "MapCommand",
    "VerifyCommand",
    "StatsCommand",
]
