"""
Command Registry
Register all commands with the factory
"""

from src.commands import MapCommand, StatsCommand, VerifyCommand
from src.factories import CommandFactory
from src.logger import logger


def register_all_commands():
    """Register every command-line command with the factory"""
    CommandFactory.register_command(MapCommand.name, MapCommand)
    CommandFactory.register_command(VerifyCommand.name, VerifyCommand)
    CommandFactory.register_command(StatsCommand.name, StatsCommand)

    logger.debug(f"Registered commands: {CommandFactory.get_available_commands()}")
