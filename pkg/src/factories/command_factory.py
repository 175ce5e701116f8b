"""
Command Factory
Creates command instances by name
"""

from typing import Dict, List, Type


class CommandFactory:
    """
    Registry-backed factory for command classes

    Example:
        CommandFactory.register_command("map", MapCommand)
        command = CommandFactory.create("map")
    """

    _command_classes: Dict[str, Type] = {}

    @classmethod
    def register_command(cls, name: str, command_class: Type):
        """
        Register a command class

        Args:
            name: Command name used on the command line
            command_class: BaseCommand subclass
        """
        cls._command_classes[name.lower()] = command_class

    @classmethod
    def create(cls, name: str):
        """
        Create a fresh command instance

        Raises:
            ValueError: for an unregistered command name
        """
        name = name.lower()
        if name not in cls._command_classes:
            raise ValueError(f"Unknown command: {name}. Available: {cls.get_available_commands()}")
        return cls._command_classes[name]()

    @classmethod
    def get_available_commands(cls) -> List[str]:
        return sorted(cls._command_classes)
