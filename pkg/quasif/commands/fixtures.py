"""fixtures subcommand: recompute every worked example and compare."""

from quasif.commands.base import BaseCommand, CommandRequest, CommandResult
from quasif.errors import FixtureMismatch
from quasif.fixtures import run_fixtures


class FixturesCommand(BaseCommand):
    name = "fixtures"
    help = "recompute the worked examples and compare with their expected values"

    def execute(self, request: CommandRequest) -> CommandResult:
        outcomes = run_fixtures()
        lines = []
        for o in outcomes:
            lines.append(f"{'ok  ' if o.passed else 'FAIL'} {o.id} [{o.provenance}] {o.anchor}")
            lines += [f"       {m}" for m in o.mismatches]
        failed = [o.id for o in outcomes if not o.passed]
        payload = {"fixtures": [o.model_dump() for o in outcomes], "failed": failed}
        if not failed:
            return CommandResult(payload, lines)
        error = FixtureMismatch(f"{len(failed)} fixture(s) disagree: {', '.join(failed)}")
        return CommandResult(payload, lines, exit_code=1, diagnostics=[f"{error.name}: {error}"])
