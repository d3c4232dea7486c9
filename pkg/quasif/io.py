"""JSON and text file schemas for ideals, complexes and census listings."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from quasif.complexes import SimplicialComplex
from quasif.core_ideal import Ideal, ideal_from_indices, mask_of, parse_ideal_text
from quasif.errors import ParseError

logger = logging.getLogger(__name__)


class IdealFile(BaseModel):
    """{"n": 5, "generators": [[1,2,4], ...]}; other keys are ignored."""

    n: int = Field(ge=1, le=64)
    generators: List[List[int]]

    def to_ideal(self) -> Ideal:
        return ideal_from_indices(self.n, self.generators)

    @classmethod
    def from_ideal(cls, ideal: Ideal) -> "IdealFile":
        return cls(n=ideal.n, generators=[list(g.vars) for g in ideal.gens])


class ComplexFile(BaseModel):
    """{"n": 5, "facets": [[1,2],[3,4], ...]}"""

    n: int = Field(ge=1, le=64)
    facets: List[List[int]]

    def to_complex(self) -> SimplicialComplex:
        if not self.facets:
            raise ParseError("a complex file needs at least one facet")
        for facet in self.facets:
            bad = [v for v in facet if v < 1 or v > self.n]
            if bad:
                raise ParseError(f"facet {facet}: vertex {bad[0]} is outside 1..{self.n}")
        return SimplicialComplex(self.n, tuple(mask_of(f) for f in self.facets))

    @classmethod
    def from_complex(cls, complex_: SimplicialComplex) -> "ComplexFile":
        return cls(n=complex_.n, facets=[list(f) for f in complex_.facet_sets])


class CensusFile(BaseModel):
    """Output schema of a degree-2 census."""

    n: int
    b: int
    count: int
    truncated: bool
    ideals: List[List[List[int]]]
    orbits: Optional[List[Dict[str, Any]]] = None


def _validated(model, data: Dict[str, Any], path: str):
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise ParseError(f"{path}: {e.errors()[0]['loc']} {e.errors()[0]['msg']}")


def read_document(path: str, n: Optional[int] = None) -> Union[Ideal, SimplicialComplex]:
    """
    Read an ideal or a complex from disk.

    JSON files carrying "facets" become complexes, those carrying "generators"
    become ideals. Anything else is read as monomial text and needs n.

    Raises:
        ParseError: unreadable JSON, a schema violation, or text without n
    """
    raw = Path(path).read_text()
    if raw.lstrip().startswith("{"):
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})")
        if "facets" in data:
            return _validated(ComplexFile, data, path).to_complex()
        return _validated(IdealFile, data, path).to_ideal()
    if n is None:
        raise ParseError(f"{path}: text input needs the number of variables (--n)")
    logger.debug("reading %s as monomial text with n=%d", path, n)
    return parse_ideal_text(raw, n)


def load_ideal(path: str, n: Optional[int] = None) -> Ideal:
    doc = read_document(path, n)
    if isinstance(doc, SimplicialComplex):
        raise ParseError(f"{path} holds a complex, not an ideal")
    return doc


def dump_json(payload: Dict[str, Any]) -> str:
    """Stable rendering: sorted keys, two-space indent."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
