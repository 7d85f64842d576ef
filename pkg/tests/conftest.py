import random

import pytest

from unequal_lrc.code_core import LinearCode
from unequal_lrc.galois import GaloisField, field_of_order


def planted_code(rng: random.Random, q: int, max_n: int = 12) -> LinearCode:
    """Random systematic code whose information symbols sit in local groups.

    Each group gets one parity with random nonzero coefficients; a few global
    parities with random coefficients are appended.  Every coordinate is
    recoverable and no column is zero.
    """
    F = field_of_order(q)
    k = rng.randint(2, 6)
    info = list(range(k))
    rng.shuffle(info)
    groups = []
    while info:
        size = rng.randint(1, min(4, len(info)))
        groups.append(sorted(info[:size]))
        info = info[size:]
    room = max_n - k - len(groups)
    if room < 0:
        groups = [sorted(sum(groups, []))]
        room = max_n - k - 1
    n_global = rng.randint(0, min(room, 3))
    cols = [tuple(1 if r == j else 0 for r in range(k)) for j in range(k)]
    for g in groups:
        cols.append(tuple(rng.randrange(1, F.order) if r in g else 0 for r in range(k)))
    for _ in range(n_global):
        col = tuple(rng.randrange(F.order) for _ in range(k))
        if not any(col):
            col = (1,) + col[1:]
        cols.append(col)
    return LinearCode(F, tuple(cols), tuple(range(k)))


def planted_codes(count: int, seed: int, qs=(2, 4, 8)) -> list[LinearCode]:
    rng = random.Random(seed)
    return [planted_code(rng, rng.choice(qs)) for _ in range(count)]


@pytest.fixture(scope="session")
def gf4() -> GaloisField:
    return field_of_order(4)


@pytest.fixture(scope="session")
def gf256_tower() -> GaloisField:
    return field_of_order(4, 4)
