import random

import pytest

from quasif.config import reset_settings
from quasif.core_ideal import Ideal, Monomial, has_full_support, ideal_from_indices, ideal_from_masks, sm_universe_masks

QUASIF_VARS = (
    "QUASIF_LOG_LEVEL",
    "QUASIF_WORKERS",
    "QUASIF_ENUM_CAP",
    "QUASIF_SEARCH_LIMIT",
    "QUASIF_MONOMIAL_LIMIT",
    "QUASIF_PROGRESS",
)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    for var in QUASIF_VARS:
        monkeypatch.delenv(var, raising=False)
    reset_settings()
    yield
    reset_settings()


def all_degree2_ideals(n, full_support=True):
    """Every nonzero ideal generated by degree-2 square-free monomials in n variables."""
    pairs = sm_universe_masks(n, 2)
    for bits in range(1, 1 << len(pairs)):
        ideal = Ideal(n, tuple(Monomial(pairs[i]) for i in range(len(pairs)) if bits >> i & 1))
        if not full_support or has_full_support(ideal):
            yield ideal


def random_ideals(count, n_range, seed):
    """Seeded mixed-degree square-free ideals, each with at least one generator."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice(n_range)
        k = rng.randint(1, 2 * n)
        masks = [rng.randint(1, (1 << n) - 1) for _ in range(k)]
        out.append(ideal_from_masks(n, masks))
    return out


@pytest.fixture
def intro_ideal():
    return ideal_from_indices(5, [[1, 2], [3, 4], [1, 3, 5], [2, 4, 5]])


@pytest.fixture
def ideal_j():
    return ideal_from_indices(5, [[1, 2, 4], [1, 2, 5], [1, 4, 5], [2, 3, 5], [3, 4, 5]])


@pytest.fixture
def seven_var_cubics():
    return ideal_from_indices(7, [
        [1, 2, 6], [1, 2, 7], [1, 3, 4], [1, 3, 5], [1, 3, 6], [1, 3, 7],
        [1, 4, 5], [1, 4, 6], [1, 5, 7], [1, 6, 7], [2, 4, 5], [2, 4, 7],
        [2, 6, 7], [3, 4, 6], [3, 5, 7], [2, 5, 6], [5, 6, 7],
    ])


@pytest.fixture
def partition_n8_ideal():
    within = [[i, j] for i in range(1, 5) for j in range(i + 1, 5)]
    within += [[i, j] for i in range(5, 9) for j in range(i + 1, 9)]
    extra = [[1, 6], [2, 7], [2, 8], [3, 7], [4, 7]]
    return ideal_from_indices(8, within + extra)


@pytest.fixture
def path_ideal():
    """<x1x2, x3x4, x1x3>: a degree-2 f-ideal in four variables."""
    return ideal_from_indices(4, [[1, 2], [3, 4], [1, 3]])
