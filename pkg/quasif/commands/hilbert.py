"""hilbert subcommand: Hilbert function table, series, and degree-2 closed forms."""

from math import comb
from typing import Any, Dict, List

from quasif.commands.base import BaseCommand, CommandRequest, CommandResult, add_input_arguments
from quasif.errors import NegativeDegree, QuasiFError
from quasif.hilbert import (
    RationalSeries,
    hilbert_function_from_fvector,
    hilbert_polynomial_deg2,
    hilbert_series_deg2,
    hilbert_series_from_fvector,
    hilbert_series_via_type,
)
from quasif.quasi_classify import QuasiType, characterize_by_height, classify


def _series_dict(series: RationalSeries) -> Dict[str, Any]:
    return {
        "terms": [list(t) for t in series.terms],
        "scale": series.scale,
        "numerator": list(series.numerator),
        "exponent": series.exponent,
    }


class HilbertCommand(BaseCommand):
    name = "hilbert"
    help = "Hilbert function and series of R/I from f(δ_N(I))"

    def add_arguments(self, parser) -> None:
        add_input_arguments(parser)
        parser.add_argument("--function", type=int, metavar="M", help="tabulate H(m) for 0 <= m <= M")
        parser.add_argument("--series", action="store_true", help="term-sum and normalised series")
        parser.add_argument("--closed-form", action="store_true",
                            help="degree-2 closed forms next to the f-vector values")

    def execute(self, request: CommandRequest) -> CommandResult:
        ideal = self.read_ideal(request)
        top = request.option("function")
        want_series = request.option("series", False)
        want_closed = request.option("closed_form", False)
        if top is None and not want_series and not want_closed:
            top, want_series = 5, True
        if top is not None and top < 0:
            raise NegativeDegree(f"--function needs M >= 0, got {top}")

        result = classify(ideal)
        fvec = result.nonface_fvector
        payload: Dict[str, Any] = {**ideal.to_dict(), "nonface_fvector": list(fvec)}
        lines: List[str] = [f"f(δ_N): {fvec}"]

        if top is not None:
            values = [hilbert_function_from_fvector(fvec, m) for m in range(top + 1)]
            payload["function"] = values
            lines += [f"H({m}) = {v}" for m, v in enumerate(values)]

        series = hilbert_series_from_fvector(fvec)
        if want_series:
            payload["series"] = _series_dict(series)
            lines += [f"series: {series.term_form()}", f"normalized: {series.normalized_form()}"]
            if result.is_quasi:
                via = hilbert_series_via_type(result.facet_fvector, result.type)
                payload["series_via_type_matches"] = via.equals(series)
                lines.append(f"via f(δ_F) + type {result.type}: {'agrees' if via.equals(series) else 'DIFFERS'}")

        if want_closed:
            lines += self._closed_form(ideal, fvec, series, top, payload)
        return CommandResult(payload, lines)

    def _closed_form(self, ideal, fvec, series: RationalSeries, top, payload: Dict[str, Any]) -> List[str]:
        try:
            applies = characterize_by_height(ideal).verdict
        except QuasiFError:
            applies = False
        if not applies:
            payload["closed_form"] = None
            return ["closed form: not a degree-2 quasi f-ideal"]

        n = ideal.n
        b = comb(n, 2) - 2 * len(ideal)
        poly = hilbert_polynomial_deg2(n, b)
        closed = hilbert_series_deg2(n, b)
        span = range(1, max(top or 0, 5) + 1)
        function_ok = all(poly.evaluate(m) == hilbert_function_from_fvector(fvec, m) for m in span)
        series_ok = closed.equals(series)
        payload["closed_form"] = {
            "type": list(QuasiType((0, b)).entries),
            "polynomial": [str(c) for c in poly.coefficients],
            "series": _series_dict(closed),
            "consistent": function_ok and series_ok,
        }
        return [
            f"closed form H(z) = {poly}   (m >= 1)",
            f"closed form series: {closed.normalized_form()}",
            f"consistent: {function_ok and series_ok}",
        ]
