"""construct and enumerate subcommands (degree-2 quasi f-ideals of type (0, b))."""

from typing import List

from quasif.commands.base import BaseCommand, CommandRequest, CommandResult
from quasif.construct_enumerate import construct_of_type, enumerate_quasi
from quasif.io import CensusFile


def int_list(text: str) -> List[int]:
    return [int(tok) for tok in text.replace("{", "").replace("}", "").split(",") if tok.strip()]


class ConstructCommand(BaseCommand):
    name = "construct"
    help = "build a degree-2 quasi f-ideal of type (0, b) as W_A ∪ D"

    def add_arguments(self, parser) -> None:
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--b", type=int, required=True)
        parser.add_argument("--A", type=int_list, help="partition block, e.g. 1,2,3,4")
        parser.add_argument("--D", help='extra generators, e.g. "x1x6,x2x7"')

    def execute(self, request: CommandRequest) -> CommandResult:
        D = self.parse_monomials(request.D, request.n) if request.D is not None else None
        result = construct_of_type(request.n, request.b, A=request.A, D=D)
        lines = [
            f"A: {sorted(result.spec.A)}",
            f"W_A ({len(result.w_a)}): " + ", ".join(str(m) for m in result.w_a),
            f"D ({len(result.d)}): " + ", ".join(str(m) for m in result.d),
            f"ideal ({len(result.ideal)} generators): {result.ideal}",
            f"type: {result.claimed_type} (verified)",
        ]
        return CommandResult(result.to_dict(), lines)


class EnumerateCommand(BaseCommand):
    name = "enumerate"
    help = "census of degree-2 quasi f-ideals of type (0, b), 4 <= n <= 7"

    def add_arguments(self, parser) -> None:
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--b", type=int, required=True)
        parser.add_argument("--mod-symmetry", action="store_true",
                            help="also group the ideals into orbits under variable permutations")
        parser.add_argument("--cap", type=int, default=None, help="longest ideal list to print")
        parser.add_argument("--workers", type=int, default=None, help="processes for the scan")

    def execute(self, request: CommandRequest) -> CommandResult:
        result = enumerate_quasi(
            request.n,
            request.b,
            up_to_symmetry=request.mod_symmetry,
            cap=request.option("cap"),
            workers=request.option("workers"),
        )
        payload = CensusFile(**result.to_dict()).model_dump(exclude_none=True)
        lines = [f"count: {result.count}"]
        if result.orbits is not None:
            lines.append(f"orbits: {len(result.orbits)}")
            lines += [f"  {ideal}  x{size}" for ideal, size in result.orbits]
        else:
            lines += [f"  {ideal}" for ideal in result.ideals]
        if result.truncated:
            lines.append(f"  ... {result.count - len(result.ideals)} more")
        return CommandResult(payload, lines)
