"""Simplicial complexes attached to square-free monomial ideals, and their f-vectors."""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from quasif.core_ideal import (
    FVector,
    Ideal,
    Monomial,
    full_mask,
    indices_of,
    mask_key,
    mask_of,
    minimal_masks,
)
from quasif.errors import OutOfRange, TooLarge, UncoveredVertices, ZeroIdeal

logger = logging.getLogger(__name__)

# Facets are expanded into all their faces; 2^24 subsets per facet at most.
MAX_FACET_SIZE = 24
BRUTEFORCE_MAX_N = 20


@dataclass(frozen=True)
class SimplicialComplex:
    """
    A simplicial complex on {1..n} given by its facets (bitmasks).

    Every vertex must lie in some facet. The only exception is a non-face
    complex whose ideal has degree-1 generators: such a complex is built with
    allow_uncovered=True and reports the missing ("ghost") vertices.
    """

    n: int
    facets: Tuple[int, ...]
    allow_uncovered: bool = False

    def __post_init__(self):
        if not 1 <= self.n <= 64:
            raise OutOfRange(f"n must lie in 1..64, got {self.n}")
        if self.facets and any(f & ~full_mask(self.n) for f in self.facets):
            raise OutOfRange(f"a facet uses a vertex outside 1..{self.n}")
        object.__setattr__(self, "facets", tuple(_maximal_masks(self.facets)))
        if not self.facets:
            raise OutOfRange("a simplicial complex needs at least one facet")
        missing = self.uncovered_vertices
        if missing and not self.allow_uncovered:
            raise UncoveredVertices(missing)

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Sequence[int]]) -> "SimplicialComplex":
        return cls(n, tuple(mask_of(f) for f in facets))

    @property
    def uncovered_vertices(self) -> Tuple[int, ...]:
        covered = 0
        for f in self.facets:
            covered |= f
        return indices_of(full_mask(self.n) & ~covered)

    @property
    def facet_sets(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(indices_of(f) for f in self.facets)

    def contains(self, face: Iterable[int]) -> bool:
        m = mask_of(face)
        return any(m & f == m for f in self.facets)

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facet_sets]}

    def __str__(self) -> str:
        return "<" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facet_sets) + ">"


def _maximal_masks(masks: Iterable[int]) -> List[int]:
    ordered = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: List[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return sorted(kept, key=mask_key)


def _lowest_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def minimal_transversals(n: int, edges: Iterable[int]) -> List[int]:
    """
    All minimal hitting sets of a hypergraph on {1..n}, as bitmasks.

    Edges are processed smallest first; each step keeps the transversals that
    already hit the new edge and branches the others on the edge's vertices,
    discarding any candidate that contains a kept transversal. An empty edge
    cannot be hit, so the result is then empty.
    """
    edge_list = minimal_masks(edges)
    if not edge_list:
        return [0]
    if edge_list[0] == 0:
        return []
    transversals = [0]
    for e in edge_list:
        hitting = [t for t in transversals if t & e]
        missing = [t for t in transversals if not t & e]
        grown = set(hitting)
        for t in missing:
            for v in _lowest_bits(e):
                cand = t | v
                if not any(h & cand == h for h in hitting):
                    grown.add(cand)
        transversals = minimal_masks(grown)
    logger.debug("minimal transversals: %d edges, %d transversals", len(edge_list), len(transversals))
    return sorted(transversals, key=mask_key)


def _nonface_facet_masks(ideal: Ideal) -> List[int]:
    whole = full_mask(ideal.n)
    return _maximal_masks(whole & ~t for t in minimal_transversals(ideal.n, ideal.masks))


def stanley_reisner_facets_bruteforce(ideal: Ideal) -> Tuple[int, ...]:
    """Maximal subsets of {1..n} containing no generator support, by scanning all 2^n sets."""
    if ideal.is_zero:
        raise ZeroIdeal()
    if ideal.n > BRUTEFORCE_MAX_N:
        raise TooLarge(f"brute-force scan is limited to n <= {BRUTEFORCE_MAX_N}")
    faces = [
        s for s in range(1 << ideal.n)
        if not any(g & s == g for g in ideal.masks)
    ]
    return tuple(_maximal_masks(faces))


def facet_complex(ideal: Ideal) -> SimplicialComplex:
    """
    δ_F(I): one facet per minimal generator.

    Raises:
        ZeroIdeal: no generators
        UncoveredVertices: some x_i divides no generator
    """
    if ideal.is_zero:
        raise ZeroIdeal()
    return SimplicialComplex(ideal.n, ideal.masks)


def stanley_reisner_complex(ideal: Ideal) -> SimplicialComplex:
    """δ_N(I): facets are the complements of the minimal transversals of G(I)."""
    if ideal.is_zero:
        raise ZeroIdeal()
    complex_ = SimplicialComplex(ideal.n, tuple(_nonface_facet_masks(ideal)), allow_uncovered=True)
    if complex_.uncovered_vertices:
        logger.warning(
            "non-face complex of %s has ghost vertices %s (degree-1 generators)",
            ideal,
            complex_.uncovered_vertices,
        )
    return complex_


def f_vector(complex_: SimplicialComplex) -> FVector:
    """Count the faces of every dimension by expanding each facet's power set."""
    widest = max(f.bit_count() for f in complex_.facets)
    if widest > MAX_FACET_SIZE:
        raise TooLarge(f"facet of size {widest} exceeds face expansion limit {MAX_FACET_SIZE}")
    faces = set()
    for facet in complex_.facets:
        sub = facet
        while sub:
            faces.add(sub)
            sub = (sub - 1) & facet
    counts = [0] * widest
    for face in faces:
        counts[face.bit_count() - 1] += 1
    return FVector(tuple(counts))


def dimension(complex_: SimplicialComplex) -> int:
    return max(f.bit_count() for f in complex_.facets) - 1


def height(ideal: Ideal) -> int:
    """ht(I) = n - dim δ_N(I) - 1, the least size of a transversal of G(I)."""
    if ideal.is_zero:
        raise ZeroIdeal()
    return min(t.bit_count() for t in minimal_transversals(ideal.n, ideal.masks))


def facet_ideal(complex_: SimplicialComplex) -> Ideal:
    return Ideal(complex_.n, tuple(Monomial(f) for f in complex_.facets if f))


def nonface_ideal(complex_: SimplicialComplex) -> Ideal:
    """
    I_N(Δ): generated by the minimal non-faces.

    A set is a non-face exactly when it meets the complement of every facet,
    so the minimal non-faces are the minimal transversals of those complements.
    """
    whole = full_mask(complex_.n)
    complements = [whole & ~f for f in complex_.facets]
    gens = [t for t in minimal_transversals(complex_.n, complements) if t]
    return Ideal(complex_.n, tuple(Monomial(m) for m in gens))
