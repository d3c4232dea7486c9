"""Registry of the command-line subcommands."""

from typing import Dict, List, Optional

from quasif.commands import (
    BaseCommand,
    BoundsCommand,
    ClassifyCommand,
    ComplexCommand,
    ConstructCommand,
    EnumerateCommand,
    FixturesCommand,
    FVectorCommand,
    HilbertCommand,
    PerfectCommand,
    PrimesCommand,
)


class CommandRegistry:
    """Singleton registry holding one instance per subcommand, in help order."""

    def __init__(self):
        self._commands: Dict[str, BaseCommand] = {}
        self._initialize()

    def _initialize(self) -> None:
        for command in (
            ClassifyCommand(),
            FVectorCommand(),
            ComplexCommand(),
            PrimesCommand(),
            PerfectCommand(),
            BoundsCommand(),
            ConstructCommand(),
            EnumerateCommand(),
            HilbertCommand(),
            FixturesCommand(),
        ):
            self._commands[command.name] = command

    def list_commands(self) -> List[BaseCommand]:
        return list(self._commands.values())

    def get_command(self, name: str) -> Optional[BaseCommand]:
        """
        Get a subcommand by name.

        Args:
            name: subcommand name as typed on the command line

        Returns:
            The command instance or None if unknown
        """
        return self._commands.get(name)


_registry: Optional[CommandRegistry] = None


def get_registry() -> CommandRegistry:
    global _registry
    if _registry is None:
        _registry = CommandRegistry()
    return _registry


# Convenience functions that delegate to the singleton registry

def list_commands() -> List[BaseCommand]:
    """Get every registered subcommand."""
    return get_registry().list_commands()


def get_command(name: str) -> Optional[BaseCommand]:
    """Get a subcommand by name."""
    return get_registry().get_command(name)
