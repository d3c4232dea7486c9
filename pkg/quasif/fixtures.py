"""Worked examples of quasi f-ideals, kept as named fixtures with their expected values."""

import logging
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel

from quasif.construct_enumerate import PartitionSpec, construct_of_type, partition_set
from quasif.core_ideal import Monomial, ideal_from_indices
from quasif.errors import QuasiFError
from quasif.hilbert import hilbert_series_from_fvector
from quasif.quasi_classify import classify, is_f_ideal, type_bounds

logger = logging.getLogger(__name__)

Provenance = Literal["published", "derived"]


class FixtureExpectation(BaseModel):
    type: Optional[List[int]] = None
    facet_fvector: Optional[List[int]] = None
    nonface_fvector: Optional[List[int]] = None
    is_f_ideal: Optional[bool] = None
    generator_count: Optional[int] = None
    partition_size: Optional[int] = None
    bounds: Optional[Tuple[int, int]] = None
    series_terms: Optional[List[Tuple[int, int]]] = None


class WorkedExample(BaseModel):
    """
    One worked example.

    kind "classify" runs the ideal through classify(); "construct" builds
    W_A ∪ D for (n, b, A, D); "bounds" only checks type_bounds(n).
    """

    id: str
    kind: Literal["classify", "construct", "bounds"]
    provenance: Provenance
    anchor: str
    n: int
    generators: List[List[int]] = []
    b: Optional[int] = None
    A: Optional[List[int]] = None
    D: Optional[List[List[int]]] = None
    expected: FixtureExpectation


class FixtureOutcome(BaseModel):
    id: str
    provenance: Provenance
    anchor: str
    passed: bool
    mismatches: List[str]


_J = [[1, 2, 4], [1, 2, 5], [1, 4, 5], [2, 3, 5], [3, 4, 5]]

_SEVEN_VAR_CUBICS = [
    [1, 2, 6], [1, 2, 7], [1, 3, 4], [1, 3, 5], [1, 3, 6], [1, 3, 7],
    [1, 4, 5], [1, 4, 6], [1, 5, 7], [1, 6, 7], [2, 4, 5], [2, 4, 7],
    [2, 6, 7], [3, 4, 6], [3, 5, 7], [2, 5, 6], [5, 6, 7],
]


def get_fixtures() -> List[WorkedExample]:
    """
    Return every worked example with its expected values.

    Returns:
        List of WorkedExample objects, in a fixed order
    """
    return [
        WorkedExample(
            id="f-ideal-five-vars",
            kind="classify",
            provenance="published",
            anchor="I = <x1x2, x3x4, x1x3x5, x2x4x5> is an f-ideal with common f-vector (5, 8, 2)",
            n=5,
            generators=[[1, 2], [3, 4], [1, 3, 5], [2, 4, 5]],
            expected=FixtureExpectation(
                type=[0, 0, 0],
                facet_fvector=[5, 8, 2],
                nonface_fvector=[5, 8, 2],
                is_f_ideal=True,
                series_terms=[(1, 0), (5, 1), (8, 2), (2, 3)],
            ),
        ),
        WorkedExample(
            id="quasi-010-five-vars",
            kind="classify",
            provenance="published",
            anchor="J = <x1x2x4, x1x2x5, x1x4x5, x2x3x5, x3x4x5> is a quasi f-ideal of type (0, 1, 0)",
            n=5,
            generators=_J,
            expected=FixtureExpectation(type=[0, 1, 0], is_f_ideal=False),
        ),
        WorkedExample(
            id="quasi-010-corrected-fvectors",
            kind="classify",
            provenance="derived",
            anchor="J has five facets on each side, so the printed third coordinates 10 read as 5",
            n=5,
            generators=_J,
            expected=FixtureExpectation(
                type=[0, 1, 0],
                facet_fvector=[5, 9, 5],
                nonface_fvector=[5, 10, 5],
                series_terms=[(1, 0), (5, 1), (10, 2), (5, 3)],
            ),
        ),
        WorkedExample(
            id="quasi-011-seven-vars",
            kind="classify",
            provenance="published",
            anchor="17 cubic generators in 7 variables: f(δ_F) = (7, 20, 17), f(δ_N) = (7, 21, 18), type (0, 1, 1)",
            n=7,
            generators=_SEVEN_VAR_CUBICS,
            expected=FixtureExpectation(
                type=[0, 1, 1],
                facet_fvector=[7, 20, 17],
                nonface_fvector=[7, 21, 18],
                generator_count=17,
            ),
        ),
        WorkedExample(
            id="partition-construction-n8",
            kind="construct",
            provenance="published",
            anchor="A = {1,2,3,4}, |W_A| = 12, D = {x1x6, x2x7, x2x8, x3x7, x4x7} gives type (0, -6) with 17 generators",
            n=8,
            b=-6,
            A=[1, 2, 3, 4],
            D=[[1, 6], [2, 7], [2, 8], [3, 7], [4, 7]],
            expected=FixtureExpectation(type=[0, -6], generator_count=17, partition_size=12),
        ),
        WorkedExample(
            id="bounds-n8",
            kind="bounds",
            provenance="published",
            anchor="degree-2 quasi f-ideals in 8 variables have -26 <= b <= 4",
            n=8,
            expected=FixtureExpectation(bounds=(-26, 4)),
        ),
    ]


def get_fixture(fixture_id: str) -> Optional[WorkedExample]:
    for fixture in get_fixtures():
        if fixture.id == fixture_id:
            return fixture
    return None


def _compare(mismatches: List[str], label: str, expected, actual) -> None:
    if expected is not None and expected != actual:
        mismatches.append(f"{label}: expected {expected}, got {actual}")


def _recompute(fixture: WorkedExample, mismatches: List[str]) -> None:
    exp = fixture.expected
    if fixture.kind == "bounds":
        _compare(mismatches, "bounds", exp.bounds, type_bounds(fixture.n))

    elif fixture.kind == "construct":
        spec = PartitionSpec(fixture.n, frozenset(fixture.A or ()))
        D = [Monomial.of(*pair) for pair in fixture.D] if fixture.D is not None else None
        result = construct_of_type(fixture.n, fixture.b, A=fixture.A, D=D)
        _compare(mismatches, "type", exp.type, list(result.claimed_type.entries))
        _compare(mismatches, "generator_count", exp.generator_count, len(result.ideal))
        _compare(mismatches, "partition_size", exp.partition_size, len(partition_set(spec)))

    else:
        ideal = ideal_from_indices(fixture.n, fixture.generators)
        result = classify(ideal)
        qtype = list(result.type.entries) if result.is_quasi else None
        _compare(mismatches, "type", exp.type, qtype)
        _compare(mismatches, "facet_fvector", exp.facet_fvector, list(result.facet_fvector))
        _compare(mismatches, "nonface_fvector", exp.nonface_fvector, list(result.nonface_fvector))
        _compare(mismatches, "generator_count", exp.generator_count, len(ideal))
        if exp.is_f_ideal is not None:
            _compare(mismatches, "is_f_ideal", exp.is_f_ideal, is_f_ideal(ideal))
        if exp.series_terms is not None:
            terms = [tuple(t) for t in exp.series_terms]
            _compare(mismatches, "series_terms", terms,
                     list(hilbert_series_from_fvector(result.nonface_fvector).terms))


def check_fixture(fixture: WorkedExample) -> FixtureOutcome:
    """Recompute a fixture from scratch and list every field that disagrees."""
    mismatches: List[str] = []
    try:
        _recompute(fixture, mismatches)
    except QuasiFError as e:
        mismatches.append(f"{e.name}: {e}")

    if mismatches:
        logger.warning("fixture %s failed: %s", fixture.id, "; ".join(mismatches))
    return FixtureOutcome(
        id=fixture.id,
        provenance=fixture.provenance,
        anchor=fixture.anchor,
        passed=not mismatches,
        mismatches=mismatches,
    )


def run_fixtures() -> List[FixtureOutcome]:
    """Check every fixture; the caller decides what a failure means."""
    outcomes = [check_fixture(f) for f in get_fixtures()]
    logger.debug("fixtures: %d of %d passed", sum(o.passed for o in outcomes), len(outcomes))
    return outcomes
