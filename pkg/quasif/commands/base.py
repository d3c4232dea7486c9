"""Base command class and the request/result types shared by every subcommand."""

import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, model_validator

from quasif.complexes import SimplicialComplex
from quasif.core_ideal import Ideal, Monomial, parse_ideal_text, parse_monomial
from quasif.errors import UsageError
from quasif.io import load_ideal, read_document


class CommandRequest(BaseModel):
    """One parsed invocation. At most one of `input` (a path) and `gens` (inline text)."""

    command: str
    input: Optional[str] = None
    gens: Optional[str] = None
    n: Optional[int] = None
    b: Optional[int] = None
    d: Optional[int] = None
    A: Optional[List[int]] = None
    D: Optional[str] = None
    mod_symmetry: bool = False
    out: Optional[str] = None
    format: Literal["text", "json"] = "text"
    options: Dict[str, Any] = {}

    @model_validator(mode="after")
    def _one_input_source(self):
        if self.input is not None and self.gens is not None:
            raise ValueError("give either --input or --gens, not both")
        return self

    def option(self, key: str, default: Any = None) -> Any:
        return self.options.get(key, default)


@dataclass
class CommandResult:
    """Structured payload for --format json plus the lines printed for --format text."""

    payload: Dict[str, Any]
    lines: List[str]
    exit_code: int = 0
    diagnostics: List[str] = field(default_factory=list)


class BaseCommand(ABC):
    """Abstract base class for all subcommands."""

    name: str = ""
    help: str = ""

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Register subcommand-specific flags; the default adds none."""

    @abstractmethod
    def execute(self, request: CommandRequest) -> CommandResult:
        """Run the subcommand and return its result."""
        raise NotImplementedError

    def require(self, request: CommandRequest, *fields: str) -> None:
        missing = [f for f in fields if getattr(request, f) is None]
        if missing:
            flags = ", ".join(f"--{f}" for f in missing)
            raise UsageError(f"{self.name} needs {flags}")

    def read_ideal(self, request: CommandRequest) -> Ideal:
        """The ideal given by --input or by --gens (with --n)."""
        if request.input is not None:
            return load_ideal(request.input, request.n)
        if request.gens is None:
            raise UsageError(f"{self.name} needs --input or --gens")
        self.require(request, "n")
        return parse_ideal_text(request.gens, request.n)

    def read_ideal_or_complex(self, request: CommandRequest):
        if request.input is not None:
            return read_document(request.input, request.n)
        return self.read_ideal(request)

    @staticmethod
    def parse_monomials(text: str, n: int) -> List[Monomial]:
        return [parse_monomial(tok, n) for tok in (t.strip() for t in text.split(",")) if tok]

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name='{self.name}')"


def is_complex(doc) -> bool:
    return isinstance(doc, SimplicialComplex)


def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    """--input PATH | --gens TEXT, plus --n for text input."""
    parser.add_argument("--input", help="ideal or complex file (JSON, or monomial text with --n)")
    parser.add_argument("--gens", help='inline generators, e.g. "x1x2,x3x4"')
    parser.add_argument("--n", type=int, help="number of variables")
