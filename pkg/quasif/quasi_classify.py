"""Quasi types, f-ideal detection, the degree-2 characterisations and minimal primes."""

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Any, Dict, FrozenSet, Tuple, Union

from quasif.complexes import (
    SimplicialComplex,
    f_vector,
    facet_complex,
    facet_ideal,
    height,
    minimal_transversals,
    stanley_reisner_complex,
)
from quasif.core_ideal import (
    FVector,
    Ideal,
    full_mask,
    has_full_support,
    indices_of,
    is_equigenerated,
    mask_key,
    mask_of,
    support,
)
from quasif.errors import (
    NotEquigenerated,
    NotQuasiDeg2,
    OutOfRange,
    UncoveredVertices,
    UnsupportedN,
    WrongHeight,
    ZeroIdeal,
)
from quasif.perfect_sets import ShadowSet, is_upper_perfect, perfect_number_formula

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuasiType:
    entries: Tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class NotQuasi:
    """The two complexes have different dimensions, so no type exists."""

    facet_fvector: FVector
    nonface_fvector: FVector

    @property
    def reason(self) -> str:
        return (
            f"dim δ_F = {self.facet_fvector.dimension} but dim δ_N = {self.nonface_fvector.dimension}"
        )

    def __str__(self) -> str:
        return "NotQuasi"


@dataclass(frozen=True)
class TypeResult:
    """Outcome of quasi_type together with the two f-vectors it compares."""

    ideal: Ideal
    facet_fvector: FVector
    nonface_fvector: FVector
    type: Union[QuasiType, NotQuasi]

    @property
    def is_quasi(self) -> bool:
        return isinstance(self.type, QuasiType)


@dataclass(frozen=True)
class PrimeIdeal:
    """The monomial prime (x_i : i in vars)."""

    n: int
    vars: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "vars", frozenset(self.vars))
        if not self.vars:
            raise OutOfRange("a monomial prime needs at least one variable")
        if min(self.vars) < 1 or max(self.vars) > self.n:
            raise OutOfRange(f"prime variables must lie in 1..{self.n}")

    @property
    def height(self) -> int:
        return len(self.vars)

    @property
    def mask(self) -> int:
        return mask_of(self.vars)

    def __str__(self) -> str:
        return "(" + ",".join(f"x{i}" for i in sorted(self.vars)) + ")"


@dataclass(frozen=True)
class CharacterizationReport:
    criterion: str
    conditions: Dict[str, bool]
    quantities: Dict[str, Any]
    type_matches: bool
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> bool:
        return all(self.conditions.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "criterion": self.criterion,
            "conditions": dict(self.conditions),
            "quantities": dict(self.quantities),
            "verdict": self.verdict,
            "type_matches": self.type_matches,
            "notes": list(self.notes),
        }


def _require_classifiable(ideal: Ideal) -> None:
    if ideal.is_zero:
        raise ZeroIdeal()
    if not has_full_support(ideal):
        missing = set(range(1, ideal.n + 1)) - support(ideal)
        raise UncoveredVertices(missing, f"ideal support is not full; missing variables {sorted(missing)}")


def classify(ideal: Ideal) -> TypeResult:
    """Both f-vectors of I and the resulting quasi type (or NotQuasi)."""
    _require_classifiable(ideal)
    f_facet = f_vector(facet_complex(ideal))
    f_nonface = f_vector(stanley_reisner_complex(ideal))
    if len(f_facet) == len(f_nonface):
        result: Union[QuasiType, NotQuasi] = QuasiType(f_nonface - f_facet)
    else:
        result = NotQuasi(f_facet, f_nonface)
    logger.debug("classify %s: f_F=%s f_N=%s -> %s", ideal, f_facet, f_nonface, result)
    return TypeResult(ideal, f_facet, f_nonface, result)


def quasi_type(ideal: Ideal) -> Union[QuasiType, NotQuasi]:
    """
    f(δ_N(I)) - f(δ_F(I)) when both complexes have the same dimension.

    Raises:
        ZeroIdeal: no generators
        UncoveredVertices: support of I is not all of {1..n}
    """
    return classify(ideal).type


def is_f_ideal(ideal: Ideal) -> bool:
    t = quasi_type(ideal)
    return isinstance(t, QuasiType) and t.is_zero


def complex_quasi_type(complex_: SimplicialComplex) -> Union[QuasiType, NotQuasi]:
    """Quasi type of a simplicial complex, read through its facet ideal."""
    return quasi_type(facet_ideal(complex_))


def is_f_complex(complex_: SimplicialComplex) -> bool:
    return is_f_ideal(facet_ideal(complex_))


def is_f_graph(complex_: SimplicialComplex) -> bool:
    return max(f.bit_count() for f in complex_.facets) == 2 and is_f_complex(complex_)


def _degree2_b(ideal: Ideal) -> int:
    if ideal.is_zero:
        raise ZeroIdeal()
    if not is_equigenerated(ideal, 2):
        degrees = sorted({g.degree for g in ideal.gens})
        raise NotEquigenerated(f"expected only degree-2 generators, found degrees {degrees}")
    _require_classifiable(ideal)
    return comb(ideal.n, 2) - 2 * len(ideal)


def _type_matches(ideal: Ideal, b: int) -> bool:
    return quasi_type(ideal) == QuasiType((0, b))


def characterize_by_height(ideal: Ideal) -> CharacterizationReport:
    """
    Height criterion for degree-2 quasi f-ideals: ht(I) = n - 2, C(n,2) and b of
    equal parity, and |G(I)| = (C(n,2) - b) / 2, with b = C(n,2) - 2|G(I)|.
    """
    b = _degree2_b(ideal)
    n = ideal.n
    c = comb(n, 2)
    ht = height(ideal)
    conditions = {
        "height_is_n_minus_2": ht == n - 2,
        "parity_matches": c % 2 == b % 2,
        "generator_count": 2 * len(ideal) == c - b,
    }
    quantities = {
        "n": n,
        "b": b,
        "height": ht,
        "generators": len(ideal),
        "binomial_parity": "even" if c % 2 == 0 else "odd",
        "b_parity": "even" if b % 2 == 0 else "odd",
    }
    report = CharacterizationReport(
        criterion="height",
        conditions=conditions,
        quantities=quantities,
        type_matches=_type_matches(ideal, b),
        notes=("full support is enforced although the height criterion does not state it",),
    )
    if report.verdict != report.type_matches:
        logger.warning("height criterion disagrees with quasi_type on %s", ideal)
    return report


def characterize_by_shadow(ideal: Ideal) -> CharacterizationReport:
    """
    Shadow criterion: parity of C(n,2) and b, G(I) upper perfect with
    |G(I)| = (C(n,2) - b) / 2, under the side condition |b| < C(n,2).
    """
    b = _degree2_b(ideal)
    n = ideal.n
    c = comb(n, 2)
    upper = n > 2 and is_upper_perfect(ShadowSet(n, 2, frozenset(ideal.masks)))
    conditions = {
        "parity_matches": c % 2 == b % 2,
        "upper_perfect": upper,
        "generator_count": 2 * len(ideal) == c - b,
        "abs_b_below_binomial": abs(b) < c,
    }
    quantities = {
        "n": n,
        "b": b,
        "generators": len(ideal),
        "binomial_parity": "even" if c % 2 == 0 else "odd",
        "b_parity": "even" if b % 2 == 0 else "odd",
    }
    notes = ()
    if not conditions["abs_b_below_binomial"]:
        notes = (f"|b| = {abs(b)} is not below C(n,2) = {c}; the criterion does not apply",)
    report = CharacterizationReport(
        criterion="shadow",
        conditions=conditions,
        quantities=quantities,
        type_matches=_type_matches(ideal, b),
        notes=notes,
    )
    if report.verdict != report.type_matches:
        logger.warning("shadow criterion disagrees with quasi_type on %s", ideal)
    return report


def type_bounds(n: int) -> Tuple[int, int]:
    """-C(n,2) + 2 <= b <= C(n,2) - 2 N(n,2) for degree-2 quasi f-ideals."""
    if n < 4:
        raise UnsupportedN(f"type bounds need n >= 4, got {n}")
    c = comb(n, 2)
    return -c + 2, c - 2 * perfect_number_formula(n)


def is_admissible_type(n: int, b: int) -> bool:
    lo, hi = type_bounds(n)
    return lo <= b <= hi and (b - comb(n, 2)) % 2 == 0


def minimal_primes(ideal: Ideal) -> Tuple[PrimeIdeal, ...]:
    """Minimal primes (= Ass(R/I)): complements of the facets of δ_N(I)."""
    if ideal.is_zero:
        raise ZeroIdeal()
    transversals = minimal_transversals(ideal.n, ideal.masks)
    return tuple(
        PrimeIdeal(ideal.n, frozenset(indices_of(t)))
        for t in sorted(transversals, key=mask_key)
    )


def verify_associated_prime(ideal: Ideal, prime: PrimeIdeal) -> bool:
    """
    Decide whether a prime of height n-2 or n-1 is associated to a degree-2
    quasi f-ideal, from G(I) alone:

    - height n-2: the one pair of variables outside the prime is not a generator;
    - height n-1: the one variable outside the prime forms a generator with
      every other variable.

    Raises:
        NotQuasiDeg2: I is not a quasi f-ideal of degree 2
        WrongHeight: the prime's height is neither n-2 nor n-1
    """
    n = ideal.n
    if prime.n != n:
        raise OutOfRange(f"prime lives in {prime.n} variables, ideal in {n}")
    try:
        quasi = characterize_by_height(ideal).verdict
    except (NotEquigenerated, UncoveredVertices, ZeroIdeal) as e:
        raise NotQuasiDeg2(f"{ideal} is not a degree-2 quasi f-ideal: {e}")
    if not quasi:
        raise NotQuasiDeg2(f"{ideal} is not a degree-2 quasi f-ideal")
    if prime.height not in (n - 2, n - 1):
        raise WrongHeight(f"height {prime.height} is neither {n - 2} nor {n - 1}")

    outside = full_mask(n) & ~prime.mask
    gens = set(ideal.masks)
    if prime.height == n - 2:
        return outside not in gens
    return all(outside | (1 << j) in gens for j in range(n) if not outside >> j & 1)
