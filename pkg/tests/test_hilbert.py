from fractions import Fraction
from math import comb

import pytest
import sympy as sp

from conftest import all_degree2_ideals, random_ideals
from quasif.complexes import f_vector, stanley_reisner_complex
from quasif.config import reset_settings
from quasif.construct_enumerate import enumerate_quasi
from quasif.core_ideal import FVector, ideal_from_indices
from quasif.errors import InadmissibleType, InternalVerificationFailure, NegativeDegree, TooLarge
from quasif.hilbert import (
    RationalSeries,
    binomial,
    count_standard_monomials,
    hilbert_function_from_fvector,
    hilbert_polynomial_deg2,
    hilbert_polynomial_from_fvector,
    hilbert_series_deg2,
    hilbert_series_from_fvector,
    hilbert_series_via_type,
)
from quasif.quasi_classify import NotQuasi, classify, is_admissible_type, type_bounds


def admissible_pairs(max_n):
    for n in range(4, max_n + 1):
        lo, hi = type_bounds(n)
        for b in range(lo, hi + 1):
            if is_admissible_type(n, b):
                yield n, b


def test_binomial_conventions():
    assert binomial(5, 2) == 10
    assert binomial(2, 3) == 0
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1


@pytest.mark.parametrize("fvec,m,expected", [
    ((5, 8, 2), 2, 13),
    ((4, 4), 3, 12),
    ((5, 8, 2), 0, 1),
    ((), 3, 0),
    ((), 0, 1),
])
def test_hilbert_function(fvec, m, expected):
    assert hilbert_function_from_fvector(FVector(fvec), m) == expected


def test_hilbert_function_negative_degree():
    with pytest.raises(NegativeDegree):
        hilbert_function_from_fvector(FVector((3,)), -1)


def test_series_of_the_f_ideal():
    series = hilbert_series_from_fvector(FVector((5, 8, 2)))
    assert series.terms == ((1, 0), (5, 1), (8, 2), (2, 3))
    assert series.exponent == 3
    assert series.numerator == (1, 2, 1, -2)
    assert series.term_form() == "1 + 5z/(1-z) + 8z^2/(1-z)^2 + 2z^3/(1-z)^3"
    assert series.normalized_form() == "(1 + 2z + 1z^2 - 2z^3) / (1-z)^3"


def test_series_of_corrected_quasi_fvector():
    series = hilbert_series_from_fvector(FVector((5, 10, 5)))
    assert series.terms == ((1, 0), (5, 1), (10, 2), (5, 3))
    assert series.expand(3) == [1, 5, 15, 30]


def test_series_of_points():
    series = hilbert_series_from_fvector(FVector((4,)))
    assert series.terms == ((1, 0), (4, 1))
    assert series.numerator == (1, 3)
    assert series.expand(3) == [1, 4, 4, 4]


@pytest.mark.parametrize("fvec", [(5, 8, 2), (5, 10, 5), (7, 21, 18), (4, 4), (6,), (), (3, 3, 1)])
def test_series_expansion_matches_the_function(fvec):
    fvec = FVector(fvec)
    series = hilbert_series_from_fvector(fvec)
    assert series.expand(12) == [hilbert_function_from_fvector(fvec, m) for m in range(13)]


def test_series_sympy_form():
    series = hilbert_series_from_fvector(FVector((5, 8, 2)))
    z = sp.Symbol("z")
    by_terms = 1 + 5 * z / (1 - z) + 8 * z**2 / (1 - z) ** 2 + 2 * z**3 / (1 - z) ** 3
    assert sp.simplify(series.to_sympy() - by_terms) == 0


def test_polynomial_from_fvector():
    assert hilbert_polynomial_from_fvector(FVector((4, 4))).coefficients == (Fraction(0), Fraction(4))
    poly = hilbert_polynomial_from_fvector(FVector((5, 8, 2)))
    assert poly.coefficients == (Fraction(-1), Fraction(5), Fraction(1))
    assert [poly.evaluate(m) for m in range(1, 6)] == [
        hilbert_function_from_fvector(FVector((5, 8, 2)), m) for m in range(1, 6)
    ]
    with pytest.raises(NegativeDegree):
        poly.evaluate(0)


def test_degree2_polynomial():
    assert hilbert_polynomial_deg2(8, -6).coefficients == (Fraction(-3), Fraction(11))
    assert hilbert_polynomial_deg2(4, 2).coefficients == (Fraction(0), Fraction(4))
    assert str(hilbert_polynomial_deg2(8, -6)) == "11*z - 3"
    with pytest.raises(InadmissibleType):
        hilbert_polynomial_deg2(8, 3)


def test_degree2_polynomial_at_one_is_n():
    for n, b in admissible_pairs(10):
        assert hilbert_polynomial_deg2(n, b).evaluate(1) == n


def test_degree2_closed_forms_are_integral():
    for n, b in admissible_pairs(12):
        assert (n * n - n + 2 * b) % 4 == 0
        assert (-n * n + 5 * n - 2 * b) % 4 == 0


def test_degree2_series():
    series = hilbert_series_deg2(4, 2)
    assert (series.numerator, series.scale, series.exponent) == ((4, 8, 4), 4, 2)
    assert series.expand(5) == [1, 4, 8, 12, 16, 20]
    assert hilbert_series_deg2(8, -6).numerator == (4, 24, 16)
    with pytest.raises(InadmissibleType):
        hilbert_series_deg2(8, 6)


def test_degree2_series_equals_fvector_series():
    for n, b in admissible_pairs(10):
        closed = hilbert_series_deg2(n, b)
        from_f = hilbert_series_from_fvector(FVector((n, (comb(n, 2) + b) // 2)))
        assert closed.equals(from_f)
        assert not closed.equals(hilbert_series_from_fvector(FVector((n, (comb(n, 2) + b) // 2 + 1))))


def test_degree2_series_sympy_cross_check():
    closed = hilbert_series_deg2(8, -6)
    from_f = hilbert_series_from_fvector(FVector((8, 11)))
    assert sp.simplify(closed.to_sympy() - from_f.to_sympy()) == 0


def test_series_via_type(ideal_j):
    result = classify(ideal_j)
    via = hilbert_series_via_type(result.facet_fvector, result.type)
    assert via.terms == ((1, 0), (5, 1), (10, 2), (5, 3))
    assert via.equals(hilbert_series_from_fvector(result.nonface_fvector))
    with pytest.raises(InadmissibleType):
        hilbert_series_via_type(FVector((3, 1)), NotQuasi(FVector((3, 1)), FVector((2,))))


def test_count_standard_monomials(intro_ideal):
    assert count_standard_monomials(intro_ideal, 2) == 13
    assert count_standard_monomials(ideal_from_indices(4, [[1, 2], [3, 4]]), 2) == 8
    assert count_standard_monomials(intro_ideal, 0) == 1
    with pytest.raises(NegativeDegree):
        count_standard_monomials(intro_ideal, -2)


def test_count_standard_monomials_limit(monkeypatch, intro_ideal):
    monkeypatch.setenv("QUASIF_MONOMIAL_LIMIT", "10")
    reset_settings()
    with pytest.raises(TooLarge):
        count_standard_monomials(intro_ideal, 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_oracle_agreement_degree_two(n):
    for ideal in all_degree2_ideals(n, full_support=False):
        fvec = f_vector(stanley_reisner_complex(ideal))
        for m in range(6):
            assert hilbert_function_from_fvector(fvec, m) == count_standard_monomials(ideal, m)


@pytest.mark.slow
def test_oracle_agreement_mixed_degrees():
    for ideal in random_ideals(1000, range(1, 6), seed=2024):
        fvec = f_vector(stanley_reisner_complex(ideal))
        for m in range(6):
            assert hilbert_function_from_fvector(fvec, m) == count_standard_monomials(ideal, m)


@pytest.mark.parametrize("n", [4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_closed_form_matches_census(n):
    lo, hi = type_bounds(n)
    for b in range(lo, hi + 1):
        result = enumerate_quasi(n, b)
        if not result.count:
            continue
        poly = hilbert_polynomial_deg2(n, b)
        series = hilbert_series_deg2(n, b)
        for ideal in result.ideals:
            assert [poly.evaluate(m) for m in range(1, 6)] == [
                count_standard_monomials(ideal, m) for m in range(1, 6)
            ]
            assert series.equals(hilbert_series_from_fvector(f_vector(stanley_reisner_complex(ideal))))


def test_degree2_series_numerator_closed_form():
    for n, b in admissible_pairs(12):
        expected = (4, 4 * (n - 2), n * n - 5 * n + 4 + 2 * b)
        while len(expected) > 1 and expected[-1] == 0:
            expected = expected[:-1]
        assert hilbert_series_deg2(n, b).numerator == expected


def test_degree2_series_self_check(monkeypatch):
    monkeypatch.setattr(RationalSeries, "from_terms",
                        classmethod(lambda cls, terms, scale=1: cls(tuple(terms), (1,), 0, scale)))
    with pytest.raises(InternalVerificationFailure):
        hilbert_series_deg2(4, 2)
