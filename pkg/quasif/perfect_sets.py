"""Upper and lower shadows, perfect sets and perfect numbers N(n, d)."""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from tqdm import tqdm

from quasif.config import get_settings
from quasif.core_ideal import Monomial, full_mask, mask_key, sm_universe_masks
from quasif.errors import (
    DegreeOutOfRange,
    DegreeOverflow,
    DegreeUnderflow,
    SearchTooLarge,
    UnsupportedN,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShadowSet:
    """A set T of square-free monomials, all of one degree, in n variables."""

    n: int
    degree: int
    members: FrozenSet[int]

    def __post_init__(self):
        if not 0 <= self.degree <= self.n:
            raise DegreeOutOfRange(f"degree {self.degree} is outside 0..{self.n}")
        object.__setattr__(self, "members", frozenset(self.members))
        bound = full_mask(self.n)
        for m in self.members:
            if m.bit_count() != self.degree or m & ~bound:
                raise DegreeOutOfRange(
                    f"{Monomial(m)} is not a degree-{self.degree} monomial in x1..x{self.n}"
                )

    @classmethod
    def of(cls, n: int, monomials: Iterable[Monomial], degree: Optional[int] = None) -> "ShadowSet":
        masks = [m.mask for m in monomials]
        if degree is None:
            if not masks:
                raise DegreeOutOfRange("an empty set needs an explicit degree")
            degree = masks[0].bit_count()
        return cls(n, degree, frozenset(masks))

    def monomials(self) -> Tuple[Monomial, ...]:
        return tuple(Monomial(m) for m in sorted(self.members, key=mask_key))

    def __len__(self) -> int:
        return len(self.members)


def _upper_masks(mask: int, n: int) -> List[int]:
    return [mask | (1 << i) for i in range(n) if not mask >> i & 1]


def _lower_masks(mask: int) -> List[int]:
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        out.append(mask ^ low)
        rest ^= low
    return out


def upper_shadow(T: ShadowSet) -> ShadowSet:
    """⊔(T): every g * x_i with x_i not dividing g."""
    if T.degree >= T.n:
        raise DegreeOverflow(f"no degree-{T.degree + 1} monomials exist in {T.n} variables")
    members = {u for g in T.members for u in _upper_masks(g, T.n)}
    return ShadowSet(T.n, T.degree + 1, frozenset(members))


def lower_shadow(T: ShadowSet) -> ShadowSet:
    """⊓(T): every g / x_i with x_i dividing g."""
    if T.degree < 1:
        raise DegreeUnderflow("degree-0 monomials have no lower shadow")
    members = {h for g in T.members for h in _lower_masks(g)}
    return ShadowSet(T.n, T.degree - 1, frozenset(members))


def is_upper_perfect(T: ShadowSet) -> bool:
    return len(upper_shadow(T)) == comb(T.n, T.degree + 1)


def is_lower_perfect(T: ShadowSet) -> bool:
    return len(lower_shadow(T)) == comb(T.n, T.degree - 1)


def is_perfect(T: ShadowSet) -> bool:
    if T.degree < 1:
        raise DegreeUnderflow("perfect sets need degree >= 1")
    return is_upper_perfect(T) and is_lower_perfect(T)


def perfect_number_formula(n: int) -> int:
    """N(n, 2): t^2 - t for n = 2t, t^2 for n = 2t + 1 (n >= 4)."""
    if n < 4:
        raise UnsupportedN(f"the closed form for N(n, 2) needs n >= 4, got {n}")
    t = n // 2
    return t * t - t if n % 2 == 0 else t * t


def _shadow_bits(universe: Tuple[int, ...], layer: Tuple[int, ...], neighbours) -> List[int]:
    position: Dict[int, int] = {m: i for i, m in enumerate(layer)}
    bits = []
    for m in universe:
        b = 0
        for u in neighbours(m):
            b |= 1 << position[u]
        bits.append(b)
    return bits


def find_minimum_perfect_set(n: int, d: int) -> ShadowSet:
    """
    Smallest perfect subset of Sm(R)_d, by increasing-cardinality search.

    The symmetric group permutes Sm(R)_d transitively and preserves
    perfectness, so the first monomial of the layer can be fixed in every
    candidate. Cardinalities below the counting bound (each member covers
    n - d upper and d lower neighbours) are skipped.

    Raises:
        DegreeOutOfRange: unless 1 <= d < n
        SearchTooLarge: C(n, d) above the configured search limit
    """
    if not 1 <= d < n:
        raise DegreeOutOfRange(f"perfect sets need 1 <= d < n, got n={n}, d={d}")
    limit = get_settings().search_limit
    size = comb(n, d)
    if size > limit:
        raise SearchTooLarge(f"C({n},{d}) = {size} exceeds the search limit {limit}")

    universe = sm_universe_masks(n, d)
    upper = _shadow_bits(universe, sm_universe_masks(n, d + 1), lambda m: _upper_masks(m, n))
    lower = _shadow_bits(universe, sm_universe_masks(n, d - 1), _lower_masks)
    full_upper = (1 << comb(n, d + 1)) - 1
    full_lower = (1 << comb(n, d - 1)) - 1

    start = max(
        1,
        -(-comb(n, d + 1) // (n - d)),
        -(-comb(n, d - 1) // d),
    )
    logger.debug("perfect search n=%d d=%d over %d monomials from k=%d", n, d, size, start)

    def extend(chosen: List[int], first: int, k: int, up: int, low: int) -> bool:
        if len(chosen) == k:
            return up == full_upper and low == full_lower
        for i in range(first, size - (k - len(chosen)) + 1):
            chosen.append(i)
            if extend(chosen, i + 1, k, up | upper[i], low | lower[i]):
                return True
            chosen.pop()
        return False

    sizes = range(start, size + 1)
    for k in tqdm(sizes, desc=f"N({n},{d})", disable=not get_settings().progress):
        chosen = [0]
        if extend(chosen, 1, k, upper[0], lower[0]):
            logger.debug("perfect set of size %d found", k)
            return ShadowSet(n, d, frozenset(universe[i] for i in chosen))
    raise AssertionError("Sm(R)_d itself is perfect for 1 <= d < n")


def perfect_number_bruteforce(n: int, d: int) -> int:
    return len(find_minimum_perfect_set(n, d))
