"""Quasi f-ideals: facet and non-face complexes of square-free monomial ideals and their f-vectors."""

from quasif.complexes import SimplicialComplex, f_vector, facet_complex, stanley_reisner_complex
from quasif.core_ideal import FVector, Ideal, Monomial, minimalize, parse_monomial
from quasif.quasi_classify import NotQuasi, QuasiType, is_f_ideal, quasi_type

__version__ = "0.1.0"

__all__ = [
    "FVector",
    "Ideal",
    "Monomial",
    "NotQuasi",
    "QuasiType",
    "SimplicialComplex",
    "f_vector",
    "facet_complex",
    "is_f_ideal",
    "minimalize",
    "parse_monomial",
    "quasi_type",
    "stanley_reisner_complex",
]
