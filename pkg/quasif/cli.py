# quasif/cli.py

"""Command-line entry point: argparse front end over the registered subcommands."""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from quasif.commands.base import CommandRequest
from quasif.config import get_settings
from quasif.errors import QuasiFError, UsageError
from quasif.fixtures import run_fixtures
from quasif.io import dump_json
from quasif.registry import get_command, list_commands

logger = logging.getLogger(__name__)

__all__ = ["RunOutcome", "build_parser", "main", "request_from_args", "run", "run_fixtures"]

LOG_FORMAT = "%(name)s:%(levelname)s:%(message)s"


@dataclass
class RunOutcome:
    exit_code: int
    output: str
    diagnostics: str = ""


def run(request: CommandRequest) -> RunOutcome:
    """
    Dispatch one request to its subcommand and render the result.

    Exit codes: 0 success, 1 domain error (diagnostic "ErrorName: message"),
    2 usage error.
    """
    command = get_command(request.command)
    if command is None:
        return RunOutcome(2, "", f"UsageError: unknown command {request.command!r}")
    try:
        result = command.execute(request)
    except UsageError as e:
        return RunOutcome(2, "", f"UsageError: {e}")
    except OSError as e:
        return RunOutcome(2, "", f"UsageError: cannot read {e.filename}: {e.strerror}")
    except QuasiFError as e:
        logger.debug("%s failed", request.command, exc_info=True)
        return RunOutcome(1, "", f"{e.name}: {e}")

    if request.format == "json":
        output = dump_json(result.payload) + "\n"
    else:
        output = "".join(line + "\n" for line in result.lines)
    return RunOutcome(result.exit_code, output, "\n".join(result.diagnostics))


def _add_output_arguments(parser: argparse.ArgumentParser, suppress: bool = False) -> None:
    parser.add_argument("--format", choices=["text", "json"],
                        default=argparse.SUPPRESS if suppress else "text")
    parser.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS if suppress else None,
                        help="write the result here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasif",
        description="Quasi f-ideals of square-free monomial ideals: types, complexes, "
                    "primes, constructions and Hilbert data.",
    )
    _add_output_arguments(parser)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in list_commands():
        p = sub.add_parser(command.name, help=command.help, description=command.help)
        command.add_arguments(p)
        # Output flags are accepted after the subcommand too.
        _add_output_arguments(p, suppress=True)
    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    values = dict(vars(args))
    values.pop("verbose", None)
    fields = {k: values.pop(k) for k in list(values) if k in CommandRequest.model_fields}
    try:
        return CommandRequest(**fields, options=values)
    except ValidationError as e:
        raise UsageError(e.errors()[0]["msg"])


def configure_logging(verbose: bool) -> None:
    settings = get_settings()
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level, logging.WARNING)
    logging.basicConfig(format=LOG_FORMAT, level=level, stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        configure_logging(args.verbose)
        request = request_from_args(args)
    except UsageError as e:
        print(f"UsageError: {e}", file=sys.stderr)
        return 2
    except QuasiFError as e:
        print(f"{e.name}: {e}", file=sys.stderr)
        return 1

    outcome = run(request)
    if outcome.output:
        if request.out:
            Path(request.out).write_text(outcome.output)
        else:
            sys.stdout.write(outcome.output)
    if outcome.diagnostics:
        print(outcome.diagnostics, file=sys.stderr)
    return outcome.exit_code
