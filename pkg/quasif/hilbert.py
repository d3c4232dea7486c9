"""Hilbert functions and series of R/I read off the f-vector of the non-face complex."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy as sp

from quasif.config import get_settings
from quasif.core_ideal import FVector, Ideal
from quasif.errors import InadmissibleType, InternalVerificationFailure, NegativeDegree, TooLarge
from quasif.quasi_classify import NotQuasi, QuasiType, is_admissible_type

logger = logging.getLogger(__name__)

z = sp.Symbol("z")


def binomial(a: int, b: int) -> int:
    """C(a, b) with the convention C(a, b) = 0 whenever b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> List[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _one_minus_z_power(k: int) -> List[int]:
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


def _trim(p: Sequence[int]) -> Tuple[int, ...]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


@dataclass(frozen=True)
class RationalSeries:
    """
    A Hilbert series in two exact forms.

    terms: pairs (c_i, i) standing for c_i z^i / (1-z)^i, all over `scale`.
    numerator, exponent: the single fraction P(z) / (scale * (1-z)^exponent).
    """

    terms: Tuple[Tuple[int, int], ...]
    numerator: Tuple[int, ...]
    exponent: int
    scale: int = 1

    @classmethod
    def from_terms(cls, terms: Sequence[Tuple[int, int]], scale: int = 1) -> "RationalSeries":
        e = max(power for _, power in terms)
        numerator = [0] * (e + 1)
        for c, power in terms:
            piece = _poly_mul([0] * power + [c], _one_minus_z_power(e - power))
            for i, a in enumerate(piece):
                numerator[i] += a
        return cls(tuple(terms), _trim(numerator), e, scale)

    def expand(self, order: int) -> List[int]:
        """Power-series coefficients of z^0..z^order, using 1/(1-z)^k = Σ C(m+k-1, k-1) z^m."""
        e = self.exponent
        coeffs = []
        for m in range(order + 1):
            total = 0
            for i, p in enumerate(self.numerator):
                if i > m or not p:
                    continue
                total += p * (binomial(m - i + e - 1, e - 1) if e else int(m == i))
            if total % self.scale:
                raise ValueError(f"coefficient of z^{m} is not an integer")
            coeffs.append(total // self.scale)
        return coeffs

    def equals(self, other: "RationalSeries") -> bool:
        """Equality as rational functions, by integer cross-multiplication."""
        left = _poly_mul(_poly_mul(self.numerator, [other.scale]), _one_minus_z_power(other.exponent))
        right = _poly_mul(_poly_mul(other.numerator, [self.scale]), _one_minus_z_power(self.exponent))
        return _trim(left) == _trim(right)

    def to_sympy(self) -> sp.Expr:
        p = sum(c * z**i for i, c in enumerate(self.numerator))
        return p / (self.scale * (1 - z) ** self.exponent)

    def term_form(self) -> str:
        parts = []
        for c, power in self.terms:
            if power == 0:
                parts.append(str(c))
            else:
                zpow = "z" if power == 1 else f"z^{power}"
                den = "(1-z)" if power == 1 else f"(1-z)^{power}"
                parts.append(f"{c}{zpow}/{den}")
        body = " + ".join(parts)
        return body if self.scale == 1 else f"({body}) / {self.scale}"

    def normalized_form(self) -> str:
        poly = " + ".join(
            str(c) if i == 0 else (f"{c}z" if i == 1 else f"{c}z^{i}")
            for i, c in enumerate(self.numerator)
            if c or i == 0
        ).replace("+ -", "- ")
        scale = "" if self.scale == 1 else f"{self.scale}"
        return f"({poly}) / {scale}(1-z)^{self.exponent}"

    def __str__(self) -> str:
        return self.normalized_form()


@dataclass(frozen=True)
class HilbertPolynomial:
    """
    Exact Hilbert polynomial, valid for degrees m >= 1.

    coefficients: ascending powers of z; fvector: the sum Σ C(z-1, i) f_i it
    came from, when known.
    """

    coefficients: Tuple[Fraction, ...]
    fvector: Optional[FVector] = None

    def evaluate(self, m: int) -> int:
        if m < 1:
            raise NegativeDegree("the Hilbert polynomial is only used for degrees m >= 1")
        value = sum(c * m**i for i, c in enumerate(self.coefficients))
        if value.denominator != 1:
            raise ValueError(f"H({m}) = {value} is not an integer")
        return int(value)

    def to_sympy(self) -> sp.Expr:
        return sum(sp.Rational(c.numerator, c.denominator) * z**i for i, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        return str(sp.expand(self.to_sympy()))


def hilbert_function_from_fvector(fvec: FVector, m: int) -> int:
    """H(R/I, m) = Σ_i C(m-1, i) f_i for m >= 1, and 1 for m = 0."""
    if m < 0:
        raise NegativeDegree(f"degree must be nonnegative, got {m}")
    if m == 0:
        return 1
    return sum(binomial(m - 1, i) * f for i, f in enumerate(fvec))


def hilbert_series_from_fvector(fvec: FVector) -> RationalSeries:
    """Σ_{i=-1}^{d} f_i z^{i+1} / (1-z)^{i+1}, with f_{-1} = 1."""
    terms = [(1, 0)] + [(f, i + 1) for i, f in enumerate(fvec)]
    return RationalSeries.from_terms(terms)


def hilbert_polynomial_from_fvector(fvec: FVector) -> HilbertPolynomial:
    expr = sp.expand(sp.expand_func(sum(sp.binomial(z - 1, i) * f for i, f in enumerate(fvec))))
    poly = sp.Poly(expr, z) if expr != 0 else sp.Poly(0, z)
    coeffs = [sp.Rational(c) for c in reversed(poly.all_coeffs())]
    return HilbertPolynomial(tuple(Fraction(int(c.p), int(c.q)) for c in coeffs), fvec)


def _require_admissible(n: int, b: int) -> None:
    if n < 4 or not is_admissible_type(n, b):
        raise InadmissibleType(f"(0, {b}) is not an admissible degree-2 type for n = {n}")


def hilbert_polynomial_deg2(n: int, b: int) -> HilbertPolynomial:
    """((n^2 - n + 2b) z - n^2 + 5n - 2b) / 4 for a degree-2 quasi f-ideal of type (0, b)."""
    _require_admissible(n, b)
    slope = Fraction(n * n - n + 2 * b, 4)
    intercept = Fraction(-n * n + 5 * n - 2 * b, 4)
    return HilbertPolynomial((intercept, slope), FVector((n, (comb(n, 2) + b) // 2)))


def hilbert_series_deg2(n: int, b: int) -> RationalSeries:
    """(4 + 4(n-2) z + (n^2 - 5n + 4 + 2b) z^2) / (4 (1-z)^2)."""
    _require_admissible(n, b)
    terms = ((4, 0), (4 * n, 1), (n * n - n + 2 * b, 2))
    series = RationalSeries.from_terms(terms, scale=4)
    expected = (4, 4 * (n - 2), n * n - 5 * n + 4 + 2 * b)
    if series.numerator != _trim(expected):
        raise InternalVerificationFailure(f"series numerator {series.numerator} differs from {expected}")
    return series


def hilbert_series_via_type(
    facet_fvector: FVector, qtype: Union[QuasiType, NotQuasi]
) -> RationalSeries:
    """Series of R/I written as f(δ_F(I)) + type, without touching δ_N(I)."""
    if isinstance(qtype, NotQuasi):
        raise InadmissibleType("a NotQuasi ideal has no type to add to f(δ_F)")
    if len(qtype) != len(facet_fvector):
        raise ValueError("type and f-vector lengths differ")
    shifted = FVector(tuple(f + a for f, a in zip(facet_fvector, qtype.entries)))
    return hilbert_series_from_fvector(shifted)


def count_standard_monomials(ideal: Ideal, m: int) -> int:
    """
    Number of degree-m monomials of k[x_1..x_n] outside I: those whose support
    contains no generator. Counted by direct enumeration.

    Raises:
        NegativeDegree: m < 0
        TooLarge: more than the configured number of monomials to scan
    """
    if m < 0:
        raise NegativeDegree(f"degree must be nonnegative, got {m}")
    total = binomial(ideal.n + m - 1, m)
    limit = get_settings().monomial_limit
    if total > limit:
        raise TooLarge(f"{total} monomials of degree {m} exceed the limit {limit}")
    standard: Dict[int, bool] = {}
    count = 0
    for exponents in combinations_with_replacement(range(ideal.n), m):
        supp = 0
        for i in exponents:
            supp |= 1 << i
        ok = standard.get(supp)
        if ok is None:
            ok = not any(g & supp == g for g in ideal.masks)
            standard[supp] = ok
        count += ok
    logger.debug("standard monomials of degree %d for %s: %d of %d", m, ideal, count, total)
    return count
