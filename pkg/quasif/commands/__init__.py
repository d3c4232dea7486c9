"""Subcommands of the quasif command line."""

from quasif.commands.base import BaseCommand, CommandRequest, CommandResult
from quasif.commands.construct import ConstructCommand, EnumerateCommand
from quasif.commands.fixtures import FixturesCommand
from quasif.commands.hilbert import HilbertCommand
from quasif.commands.ideals import ClassifyCommand, ComplexCommand, FVectorCommand, PrimesCommand
from quasif.commands.perfect import BoundsCommand, PerfectCommand

__all__ = [
    "BaseCommand",
    "CommandRequest",
    "CommandResult",
    "ClassifyCommand",
    "FVectorCommand",
    "ComplexCommand",
    "PrimesCommand",
    "PerfectCommand",
    "BoundsCommand",
    "ConstructCommand",
    "EnumerateCommand",
    "HilbertCommand",
    "FixturesCommand",
]
