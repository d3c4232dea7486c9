"""perfect and bounds subcommands."""

from typing import Any, Dict, List

from quasif.commands.base import BaseCommand, CommandRequest, CommandResult
from quasif.errors import SearchTooLarge, UsageError
from quasif.perfect_sets import (
    ShadowSet,
    find_minimum_perfect_set,
    is_lower_perfect,
    is_perfect,
    is_upper_perfect,
    perfect_number_formula,
)
from quasif.quasi_classify import type_bounds


class PerfectCommand(BaseCommand):
    name = "perfect"
    help = "shadow verdicts for a monomial set, or the perfect number N(n, d)"

    def add_arguments(self, parser) -> None:
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--d", type=int, default=None, help="degree (default: from --check, else 2)")
        parser.add_argument("--check", help='monomials of one degree, e.g. "x1x2,x3x4"')
        parser.add_argument("--number", action="store_true", help="closed form and brute-force N(n, d)")

    def execute(self, request: CommandRequest) -> CommandResult:
        n = request.n
        if not request.option("check") and not request.option("number"):
            raise UsageError("perfect needs --check or --number")
        payload: Dict[str, Any] = {"n": n}
        lines: List[str] = []

        if request.option("check"):
            T = ShadowSet.of(n, self.parse_monomials(request.option("check"), n), request.d)
            upper = T.degree < n and is_upper_perfect(T)
            lower = T.degree >= 1 and is_lower_perfect(T)
            perfect = 1 <= T.degree < n and is_perfect(T)
            payload["check"] = {"degree": T.degree, "size": len(T),
                                "upper_perfect": upper, "lower_perfect": lower, "perfect": perfect}
            lines += [f"upper perfect: {upper}", f"lower perfect: {lower}", f"perfect: {perfect}"]

        if request.option("number"):
            d = 2 if request.d is None else request.d
            number: Dict[str, Any] = {"d": d, "formula": None, "bruteforce": None}
            if d == 2 and n >= 4:
                number["formula"] = perfect_number_formula(n)
                lines.append(f"N({n},2) formula: {number['formula']}")
            try:
                witness = find_minimum_perfect_set(n, d)
                number["bruteforce"] = len(witness)
                number["witness"] = [list(m.vars) for m in witness.monomials()]
                lines.append(f"N({n},{d}) search: {len(witness)}  " +
                             ", ".join(str(m) for m in witness.monomials()))
            except SearchTooLarge as e:
                lines.append(f"N({n},{d}) search skipped: {e}")
            payload["number"] = number
        return CommandResult(payload, lines)


class BoundsCommand(BaseCommand):
    name = "bounds"
    help = "range of b for degree-2 quasi f-ideals of type (0, b)"

    def add_arguments(self, parser) -> None:
        parser.add_argument("--n", type=int, required=True)

    def execute(self, request: CommandRequest) -> CommandResult:
        lo, hi = type_bounds(request.n)
        return CommandResult({"n": request.n, "b_min": lo, "b_max": hi}, [f"{lo} <= b <= {hi}"])
