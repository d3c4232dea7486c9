# quasif/commands/ideals.py

"""Subcommands that take one ideal (or complex): classify, fvector, complex, primes."""

from typing import Any, Dict, List

from quasif.commands.base import BaseCommand, CommandRequest, CommandResult, add_input_arguments, is_complex
from quasif.complexes import (
    dimension,
    f_vector,
    facet_complex,
    facet_ideal,
    nonface_ideal,
    stanley_reisner_complex,
)
from quasif.errors import UsageError
from quasif.io import ComplexFile
from quasif.quasi_classify import (
    CharacterizationReport,
    PrimeIdeal,
    characterize_by_height,
    characterize_by_shadow,
    classify,
    minimal_primes,
    verify_associated_prime,
)


def render_report(report: CharacterizationReport) -> List[str]:
    lines = [f"{report.criterion} criterion: {'holds' if report.verdict else 'fails'}"]
    for name, ok in report.conditions.items():
        lines.append(f"  [{'x' if ok else ' '}] {name}")
    for key, value in report.quantities.items():
        lines.append(f"  {key} = {value}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    if report.verdict != report.type_matches:
        lines.append("  WARNING: verdict disagrees with the computed type")
    return lines


class ClassifyCommand(BaseCommand):
    name = "classify"
    help = "quasi type and both f-vectors of an ideal"

    def add_arguments(self, parser) -> None:
        add_input_arguments(parser)
        parser.add_argument("--height-criterion", action="store_true",
                            help="report the height/parity/count characterisation (degree 2)")
        parser.add_argument("--shadow-criterion", action="store_true",
                            help="report the upper-perfect characterisation (degree 2)")

    def execute(self, request: CommandRequest) -> CommandResult:
        ideal = self.read_ideal(request)
        result = classify(ideal)
        quasi = result.is_quasi
        payload: Dict[str, Any] = {
            **ideal.to_dict(),
            "facet_fvector": list(result.facet_fvector),
            "nonface_fvector": list(result.nonface_fvector),
            "quasi": quasi,
            "type": list(result.type.entries) if quasi else None,
            "f_ideal": quasi and result.type.is_zero,
        }
        lines = [f"ideal: {ideal}"]
        if quasi:
            lines.append(f"type: {result.type}")
        else:
            lines.append(f"type: NotQuasi ({result.type.reason})")
        lines += [f"f(δ_F): {result.facet_fvector}", f"f(δ_N): {result.nonface_fvector}"]

        for flag, criterion in (("height_criterion", characterize_by_height),
                                ("shadow_criterion", characterize_by_shadow)):
            if request.option(flag):
                report = criterion(ideal)
                payload[flag] = report.to_dict()
                lines += render_report(report)
        return CommandResult(payload, lines)


class FVectorCommand(BaseCommand):
    name = "fvector"
    help = "f-vectors of an ideal's two complexes, or of a complex file"

    def add_arguments(self, parser) -> None:
        add_input_arguments(parser)

    def execute(self, request: CommandRequest) -> CommandResult:
        doc = self.read_ideal_or_complex(request)
        if is_complex(doc):
            fvec = f_vector(doc)
            payload = {**doc.to_dict(), "fvector": list(fvec), "dimension": dimension(doc)}
            return CommandResult(payload, [f"f: {fvec}", f"dim: {dimension(doc)}"])
        f_facet = f_vector(facet_complex(doc))
        f_nonface = f_vector(stanley_reisner_complex(doc))
        payload = {**doc.to_dict(), "facet_fvector": list(f_facet), "nonface_fvector": list(f_nonface)}
        return CommandResult(payload, [f"f(δ_F): {f_facet}", f"f(δ_N): {f_nonface}"])


class ComplexCommand(BaseCommand):
    name = "complex"
    help = "facets of δ_F / δ_N of an ideal, or the facet and non-face ideals of a complex"

    def add_arguments(self, parser) -> None:
        add_input_arguments(parser)
        parser.add_argument("--which", choices=["facet", "nonface", "both"], default="both")

    def execute(self, request: CommandRequest) -> CommandResult:
        doc = self.read_ideal_or_complex(request)
        which = request.option("which", "both")
        payload: Dict[str, Any] = {"n": doc.n}
        lines: List[str] = []

        if is_complex(doc):
            if which in ("facet", "both"):
                ideal = facet_ideal(doc)
                payload["facet_ideal"] = ideal.to_dict()["generators"]
                lines.append(f"I_F: {ideal}")
            if which in ("nonface", "both"):
                ideal = nonface_ideal(doc)
                payload["nonface_ideal"] = ideal.to_dict()["generators"]
                lines.append(f"I_N: {ideal}")
            return CommandResult(payload, lines)

        if which in ("facet", "both"):
            complex_ = facet_complex(doc)
            payload["facet"] = ComplexFile.from_complex(complex_).facets
            lines.append(f"δ_F: {complex_}")
        if which in ("nonface", "both"):
            complex_ = stanley_reisner_complex(doc)
            payload["nonface"] = ComplexFile.from_complex(complex_).facets
            payload["ghost_vertices"] = list(complex_.uncovered_vertices)
            lines.append(f"δ_N: {complex_}")
            if complex_.uncovered_vertices:
                lines.append(f"ghost vertices: {list(complex_.uncovered_vertices)}")
        return CommandResult(payload, lines)


def _parse_prime(text: str, n: int) -> PrimeIdeal:
    try:
        indices = [int(tok.strip().lstrip("x")) for tok in text.strip("()[] ").split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"cannot read prime {text!r}; use e.g. 2,3 or (x2,x3)")
    return PrimeIdeal(n, frozenset(indices))


class PrimesCommand(BaseCommand):
    name = "primes"
    help = "minimal primes (= associated primes) of an ideal"

    def add_arguments(self, parser) -> None:
        add_input_arguments(parser)
        parser.add_argument("--prime", help="decide one prime of height n-2 or n-1 from G(I), e.g. 2,3")

    def execute(self, request: CommandRequest) -> CommandResult:
        ideal = self.read_ideal(request)
        primes = minimal_primes(ideal)
        payload: Dict[str, Any] = {
            **ideal.to_dict(),
            "primes": [sorted(p.vars) for p in primes],
        }
        lines = [str(p) for p in primes]
        if request.option("prime"):
            prime = _parse_prime(request.option("prime"), ideal.n)
            associated = verify_associated_prime(ideal, prime)
            payload["query"] = {"prime": sorted(prime.vars), "associated": associated}
            lines.append(f"{prime} associated: {'yes' if associated else 'no'}")
        return CommandResult(payload, lines)
