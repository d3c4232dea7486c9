"""Square-free monomials, monomial ideals, f-vectors and the layers Sm(R)_d."""

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from quasif.errors import (
    DegreeOutOfRange,
    NotSquareFree,
    OutOfRange,
    ParseError,
    UnitIdeal,
)

logger = logging.getLogger(__name__)

# One machine word per monomial.
MAX_VARIABLES = 64

_COMPACT_RE = re.compile(r"^(?:x\d+)+$")
_PRODUCT_RE = re.compile(r"^x\d+(?:\s*\*\s*x\d+)*$")
_LIST_RE = re.compile(r"^\[\s*\d+(?:\s*,\s*\d+)*\s*\]$")


def indices_of(mask: int) -> Tuple[int, ...]:
    """1-based variable indices set in a bitmask, increasing."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Degree first, then lexicographic on the index sequence."""
    return (mask.bit_count(), indices_of(mask))


@dataclass(frozen=True)
class Monomial:
    """A square-free monomial x_{i1}...x_{ik}, stored as a bitmask over x_1..x_64."""

    mask: int

    @classmethod
    def of(cls, *indices: int) -> "Monomial":
        if len(set(indices)) != len(indices):
            raise NotSquareFree(f"repeated variable in {indices}")
        if any(i < 1 or i > MAX_VARIABLES for i in indices):
            raise OutOfRange(f"variable index outside 1..{MAX_VARIABLES} in {indices}")
        return cls(mask_of(indices))

    @property
    def vars(self) -> Tuple[int, ...]:
        return indices_of(self.mask)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def divides(self, other: "Monomial") -> bool:
        return self.mask & other.mask == self.mask

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return mask_key(self.mask)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.mask:
            return "1"
        return "".join(f"x{i}" for i in self.vars)


@dataclass(frozen=True)
class Ideal:
    """
    A square-free monomial ideal of k[x_1..x_n] given by its minimal generators G(I).

    Build arbitrary generator sets through minimalize(); the constructor only
    accepts sets that already form a divisibility antichain.
    """

    n: int
    gens: Tuple[Monomial, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VARIABLES:
            raise OutOfRange(f"n must lie in 1..{MAX_VARIABLES}, got {self.n}")
        bound = full_mask(self.n)
        for g in self.gens:
            if not g.mask:
                raise UnitIdeal("the constant monomial 1 cannot be a generator")
            if g.mask & ~bound:
                raise OutOfRange(f"generator {g} uses a variable outside x1..x{self.n}")
        masks = [g.mask for g in self.gens]
        if len(set(masks)) != len(masks):
            raise ParseError("duplicate generators")
        for a, b in combinations(masks, 2):
            if a & b in (a, b):
                raise ParseError(
                    f"generators {Monomial(a)} and {Monomial(b)} are comparable; use minimalize()"
                )
        object.__setattr__(self, "gens", tuple(sorted(self.gens)))

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(g.mask for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.gens), default=0)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.gens) + ">"

    def to_dict(self) -> dict:
        return {"n": self.n, "generators": [list(g.vars) for g in self.gens]}


@dataclass(frozen=True)
class FVector:
    """
    (f_0, ..., f_d) of a simplicial complex; f_{-1} = 1 is implicit.

    The empty vector only arises for the complex {∅} (every variable lies in the ideal).
    """

    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if any(e < 0 for e in self.entries):
            raise ValueError(f"f-vector entries must be nonnegative: {self.entries}")

    @property
    def dimension(self) -> int:
        return len(self.entries) - 1

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __sub__(self, other: "FVector") -> Tuple[int, ...]:
        if len(self) != len(other):
            raise ValueError(f"cannot subtract f-vectors of lengths {len(self)} and {len(other)}")
        return tuple(a - b for a, b in zip(self.entries, other.entries))

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def _parse_indices(text: str) -> List[int]:
    t = text.strip()
    if _LIST_RE.match(t):
        return [int(tok) for tok in t.strip("[] ").split(",")]
    if _COMPACT_RE.match(t) or _PRODUCT_RE.match(t):
        return [int(tok) for tok in re.findall(r"x(\d+)", t)]
    raise ParseError(f"cannot read {text!r} as a monomial (use x1x2, x1*x2 or [1,2])")


def parse_monomial(text: str, n: int) -> Monomial:
    """
    Read a square-free monomial in compact ("x1x2x5"), product ("x1*x2*x5")
    or index-list ("[1,2,5]") form.

    Raises:
        ParseError: malformed token
        OutOfRange: an index outside 1..n
        NotSquareFree: a repeated variable
    """
    indices = _parse_indices(text)
    bad = sorted(i for i in indices if i < 1 or i > n)
    if bad:
        raise OutOfRange(f"{text!r}: index {bad[0]} is outside 1..{n}")
    if len(set(indices)) != len(indices):
        raise NotSquareFree(f"{text!r} repeats a variable")
    return Monomial(mask_of(indices))


def minimal_masks(masks: Iterable[int]) -> List[int]:
    """Drop every mask that strictly contains another; result sorted by mask_key."""
    ordered = sorted(set(masks), key=lambda m: m.bit_count())
    kept: List[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return sorted(kept, key=mask_key)


def minimalize(gens: Iterable[Monomial], n: int) -> Ideal:
    """
    Reduce a generating set to G(I).

    Args:
        gens: any square-free monomials in x_1..x_n (empty gives the zero ideal)
        n: number of variables

    Returns:
        The Ideal whose generators form a divisibility antichain
    """
    kept = minimal_masks(g.mask for g in gens)
    return Ideal(n, tuple(Monomial(m) for m in kept))


def ideal_from_masks(n: int, masks: Iterable[int]) -> Ideal:
    return minimalize((Monomial(m) for m in masks), n)


def ideal_from_indices(n: int, generators: Iterable[Sequence[int]]) -> Ideal:
    """Build from index lists such as [[1, 2], [3, 4]]; validates every index."""
    monomials = []
    for gen in generators:
        gen = list(gen)
        if not gen:
            raise UnitIdeal("the constant monomial 1 cannot be a generator")
        bad = [i for i in gen if i < 1 or i > n]
        if bad:
            raise OutOfRange(f"generator {gen}: index {bad[0]} is outside 1..{n}")
        if len(set(gen)) != len(gen):
            raise NotSquareFree(f"generator {gen} repeats a variable")
        monomials.append(Monomial(mask_of(gen)))
    return minimalize(monomials, n)


def parse_ideal_text(text: str, n: int) -> Ideal:
    """One monomial per line or comma-separated; '#' starts a comment."""
    tokens: List[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            tokens.append(line)
        else:
            tokens.extend(tok for tok in (t.strip() for t in line.split(",")) if tok)
    return minimalize((parse_monomial(tok, n) for tok in tokens), n)


def support(ideal: Ideal) -> frozenset:
    mask = 0
    for m in ideal.masks:
        mask |= m
    return frozenset(indices_of(mask))


def has_full_support(ideal: Ideal) -> bool:
    covered = 0
    for m in ideal.masks:
        covered |= m
    return covered == full_mask(ideal.n)


def is_equigenerated(ideal: Ideal, d: int) -> bool:
    return all(g.degree == d for g in ideal.gens)


def sm_universe_masks(n: int, d: int) -> Tuple[int, ...]:
    if not 0 <= d <= n:
        raise DegreeOutOfRange(f"degree {d} is outside 0..{n}")
    return tuple(mask_of(c) for c in combinations(range(1, n + 1), d))


def sm_universe(n: int, d: int) -> Tuple[Monomial, ...]:
    """All C(n, d) square-free monomials of degree d, in lexicographic order."""
    return tuple(Monomial(m) for m in sm_universe_masks(n, d))
