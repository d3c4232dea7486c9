"""Partition constructions of degree-2 quasi f-ideals and their exhaustive census."""

import heapq
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from quasif.config import get_settings
from quasif.core_ideal import Ideal, Monomial, full_mask, mask_key, mask_of, minimalize, sm_universe_masks
from quasif.errors import (
    InadmissibleType,
    InternalVerificationFailure,
    InvalidA,
    InvalidD,
    SearchTooLarge,
    UncoveredVertices,
    UnsupportedN,
)
from quasif.quasi_classify import QuasiType, is_admissible_type, quasi_type

logger = logging.getLogger(__name__)

ENUMERATION_MAX_N = 7


@dataclass(frozen=True)
class PartitionSpec:
    n: int
    A: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        if not self.A or len(self.A) >= self.n:
            raise InvalidA(f"A must be a nonempty proper subset of 1..{self.n}, got {sorted(self.A)}")
        if min(self.A) < 1 or max(self.A) > self.n:
            raise InvalidA(f"A must be a subset of 1..{self.n}, got {sorted(self.A)}")


@dataclass(frozen=True)
class ConstructionResult:
    ideal: Ideal
    claimed_type: QuasiType
    w_a: Tuple[Monomial, ...]
    d: Tuple[Monomial, ...]
    spec: PartitionSpec

    def to_dict(self) -> dict:
        return {
            **self.ideal.to_dict(),
            "A": sorted(self.spec.A),
            "type": list(self.claimed_type.entries),
            "W_A": [list(m.vars) for m in self.w_a],
            "D": [list(m.vars) for m in self.d],
        }


def partition_set(spec: PartitionSpec) -> Tuple[Monomial, ...]:
    """W_A: every pair x_i x_j with both indices in A or both outside A."""
    inside = mask_of(spec.A)
    pairs = [
        m for m in sm_universe_masks(spec.n, 2)
        if m & inside in (0, m)
    ]
    return tuple(Monomial(m) for m in pairs)


def partition_type(n: int, a: int) -> int:
    """b of the partition ideal for |A| = a: (n - (n - 2a)^2) / 2."""
    return (n - (n - 2 * a) ** 2) // 2


def partition_ideal(spec: PartitionSpec) -> ConstructionResult:
    """
    The ideal generated by W_A, with its type checked against the closed form.

    Raises:
        UncoveredVertices: |A| is 1 or n - 1, so one variable divides no generator
    """
    w_a = partition_set(spec)
    if len(spec.A) in (1, spec.n - 1):
        lonely = spec.A if len(spec.A) == 1 else set(range(1, spec.n + 1)) - spec.A
        raise UncoveredVertices(lonely, f"A of size {len(spec.A)} leaves x{min(lonely)} outside every generator")
    ideal = minimalize(w_a, spec.n)
    claimed = QuasiType((0, partition_type(spec.n, len(spec.A))))
    actual = quasi_type(ideal)
    if actual != claimed:
        raise InternalVerificationFailure(f"W_A for A={sorted(spec.A)} has type {actual}, expected {claimed}")
    return ConstructionResult(ideal, claimed, w_a, (), spec)


def default_partition(n: int) -> PartitionSpec:
    """A = {1..2t} for n = 4t, 4t+1 and A = {1..2t+1} for n = 4t+2, 4t+3."""
    t = n // 4
    size = 2 * t if n % 4 in (0, 1) else 2 * t + 1
    return PartitionSpec(n, frozenset(range(1, size + 1)))


def construct_of_type(
    n: int,
    b: int,
    A: Optional[Iterable[int]] = None,
    D: Optional[Sequence[Monomial]] = None,
) -> ConstructionResult:
    """
    Build a degree-2 quasi f-ideal of type (0, b) as G(I) = W_A ∪ D.

    Args:
        n: number of variables
        b: second type coordinate; must be admissible for n
        A: partition block; defaults to default_partition(n)
        D: extra generators outside W_A; defaults to the lexicographically
            smallest ones of the required size

    Returns:
        ConstructionResult whose type has been recomputed from scratch

    Raises:
        InadmissibleType: (0, b) is outside the bounds or has the wrong parity,
            or the chosen A leaves no room for |G(I)| = (C(n,2) - b) / 2
        InvalidD: an explicit D of the wrong size or overlapping W_A
        InternalVerificationFailure: the built ideal does not have type (0, b)
    """
    if n < 4:
        raise UnsupportedN(f"degree-2 constructions need n >= 4, got {n}")
    if not is_admissible_type(n, b):
        raise InadmissibleType(f"(0, {b}) is not an admissible type for n = {n}")
    spec = default_partition(n) if A is None else PartitionSpec(n, frozenset(A))
    w_a = partition_set(spec)
    target = (comb(n, 2) - b) // 2
    need = target - len(w_a)
    if need < 0:
        raise InadmissibleType(
            f"|G(I)| = {target} for type (0, {b}) is below |W_A| = {len(w_a)} for A = {sorted(spec.A)}"
        )
    taken = {m.mask for m in w_a}
    if D is None:
        rest = [m for m in sm_universe_masks(n, 2) if m not in taken]
        d = tuple(Monomial(m) for m in rest[:need])
    else:
        d = tuple(sorted(set(D)))
        if any(m.degree != 2 or m.mask & ~full_mask(n) for m in d):
            raise InvalidD("D must consist of degree-2 monomials in x1..x%d" % n)
        if any(m.mask in taken for m in d):
            raise InvalidD("D must not meet W_A")
        if len(d) != need:
            raise InvalidD(f"type (0, {b}) needs |D| = {need}, got {len(d)}")
    logger.debug("construct n=%d b=%d A=%s |W_A|=%d D=%s", n, b, sorted(spec.A), len(w_a), [str(m) for m in d])

    ideal = minimalize(w_a + d, n)
    claimed = QuasiType((0, b))
    actual = quasi_type(ideal)
    if actual != claimed:
        raise InternalVerificationFailure(f"W_A ∪ D has type {actual}, expected {claimed}")
    return ConstructionResult(ideal, claimed, w_a, d, spec)


def generator_graph(ideal: Ideal) -> nx.Graph:
    """Graph on 1..n whose edges are the degree-2 generators."""
    g = nx.Graph()
    g.add_nodes_from(range(1, ideal.n + 1))
    g.add_edges_from(gen.vars for gen in ideal.gens if gen.degree == 2)
    return g


@dataclass(frozen=True)
class _Kernel:
    """Lookup tables over the C(n,2) pairs, indexed by position in Sm(R)_2."""

    n: int
    pairs: Tuple[int, ...]
    triangles: Tuple[int, ...]

    @classmethod
    def build(cls, n: int) -> "_Kernel":
        pairs = sm_universe_masks(n, 2)
        position = {m: i for i, m in enumerate(pairs)}
        triangles = []
        for t in sm_universe_masks(n, 3):
            bits = 0
            for p in combinations([1 << i for i in range(n) if t >> i & 1], 2):
                bits |= 1 << position[p[0] | p[1]]
            triangles.append(bits)
        return cls(n, pairs, tuple(triangles))

    def accepts(self, edges: int, chosen: Sequence[int]) -> bool:
        # δ_N has a 2-face iff some triple contains no generator.
        for tri in self.triangles:
            if not edges & tri:
                return False
        covered = 0
        for i in chosen:
            covered |= self.pairs[i]
        return covered == full_mask(self.n)


def _generator_count(n: int, b: int) -> Optional[int]:
    c = comb(n, 2)
    if (c - b) % 2:
        return None
    r = (c - b) // 2
    # r = C(n,2) leaves δ_N without edges.
    if not 1 <= r < c:
        return None
    return r


def _scan_prefix(n: int, r: int, first: int) -> List[int]:
    kernel = _Kernel.build(n)
    c = len(kernel.pairs)
    hits = []
    for rest in combinations(range(first + 1, c), r - 1):
        chosen = (first,) + rest
        edges = 0
        for i in chosen:
            edges |= 1 << i
        if kernel.accepts(edges, chosen):
            hits.append(edges)
    return hits


def iter_quasi_masks(n: int, b: int) -> Iterator[int]:
    """
    Stream every degree-2 quasi f-ideal of type (0, b) on n variables, each
    encoded as a bitmask over the positions of its generators in Sm(R)_2.

    A full-support degree-2 ideal with r < C(n,2) generators has 1-dimensional
    facet complex and f_1(δ_N) - f_1(δ_F) = C(n,2) - 2r; it is quasi exactly
    when δ_N has no 2-face.
    """
    r = _generator_count(n, b)
    if r is None:
        return
    c = comb(n, 2)
    for first in range(c - r + 1):
        yield from _scan_prefix(n, r, first)


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    b: int
    count: int
    ideals: Tuple[Ideal, ...]
    truncated: bool
    orbits: Optional[Tuple[Tuple[Ideal, int], ...]] = None

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "b": self.b,
            "count": self.count,
            "truncated": self.truncated,
            "ideals": [[list(g.vars) for g in i.gens] for i in self.ideals],
        }
        if self.orbits is not None:
            out["orbits"] = [
                {"generators": [list(g.vars) for g in i.gens], "size": size}
                for i, size in self.orbits
            ]
        return out


def _ideal_of(n: int, pairs: Tuple[int, ...], edges: int) -> Ideal:
    return Ideal(n, tuple(Monomial(pairs[i]) for i in range(len(pairs)) if edges >> i & 1))


def _pair_permutations(n: int, pairs: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    position = {m: i for i, m in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        table = []
        for m in pairs:
            i, j = (k for k in range(n) if m >> k & 1)
            table.append(position[(1 << perm[i]) | (1 << perm[j])])
        tables.append(tuple(table))
    return tables


def _apply(table: Tuple[int, ...], edges: int) -> int:
    out = 0
    i = 0
    while edges:
        if edges & 1:
            out |= 1 << table[i]
        edges >>= 1
        i += 1
    return out


def _orbits(n: int, pairs: Tuple[int, ...], hits: Iterable[int]) -> List[Tuple[int, int]]:
    """(canonical mask, orbit size) per orbit; the canonical mask is the least image."""
    tables = _pair_permutations(n, pairs)
    seen = set()
    orbits = []
    for edges in hits:
        if edges in seen:
            continue
        images = {_apply(t, edges) for t in tables}
        seen |= images
        orbits.append((min(images), len(images)))
    return sorted(orbits)


def _collect(n: int, b: int, workers: int) -> List[int]:
    r = _generator_count(n, b)
    if r is None:
        return []
    disable = not get_settings().progress
    if workers <= 1:
        hits = list(tqdm(iter_quasi_masks(n, b), desc=f"census n={n} b={b}", unit="ideal", disable=disable))
        return sorted(hits)
    prefixes = range(comb(n, 2) - r + 1)
    hits = []
    with ProcessPoolExecutor(max_workers=workers) as pool, \
            tqdm(total=len(prefixes), desc=f"census n={n} b={b}", disable=disable) as progress:
        for part in pool.map(_scan_prefix, [n] * len(prefixes), [r] * len(prefixes), prefixes):
            hits.extend(part)
            progress.update(1)
    return sorted(hits)


def _rank(pairs: Tuple[int, ...], edges: int) -> List[Tuple[int, Tuple[int, ...]]]:
    """Sort key of the ideal behind `edges`, without building it."""
    return sorted(mask_key(pairs[i]) for i in range(len(pairs)) if edges >> i & 1)


def enumerate_quasi(
    n: int,
    b: int,
    up_to_symmetry: bool = False,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> EnumerationResult:
    """
    All degree-2 quasi f-ideals of type (0, b) on n variables.

    Args:
        n: 4 <= n <= 7
        b: second type coordinate; inadmissible values give an empty census
        up_to_symmetry: also report one representative per orbit of the
            vertex permutations, with orbit sizes
        cap: longest ideal list to keep (default from settings); the count is exact
        workers: process count for the scan (default from settings)

    Raises:
        UnsupportedN: n < 4
        SearchTooLarge: n > 7
    """
    if n < 4:
        raise UnsupportedN(f"the census needs n >= 4, got {n}")
    if n > ENUMERATION_MAX_N:
        raise SearchTooLarge(f"2^C({n},2) subsets exceed the census limit n <= {ENUMERATION_MAX_N}")
    settings = get_settings()
    cap = settings.enum_cap if cap is None else cap
    workers = settings.workers if workers is None else workers

    pairs = sm_universe_masks(n, 2)
    hits = _collect(n, b, workers)
    truncated = len(hits) > cap
    if truncated:
        logger.warning("census n=%d b=%d has %d ideals; listing the first %d", n, b, len(hits), cap)
    listed = heapq.nsmallest(cap, hits, key=lambda e: _rank(pairs, e))
    ideals = [_ideal_of(n, pairs, e) for e in listed]

    orbits = None
    if up_to_symmetry:
        orbits = tuple((_ideal_of(n, pairs, canon), size) for canon, size in _orbits(n, pairs, hits))
    logger.debug("census n=%d b=%d: %d ideals", n, b, len(hits))
    return EnumerationResult(n, b, len(hits), tuple(ideals), truncated, orbits)
