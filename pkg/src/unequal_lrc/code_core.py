"""Linear codes as column sets, with exact brute-force oracles.

A code of length n and dimension k over a field is given by n column vectors
of length k; symbol i of the codeword for message u is dot(u, columns[i]).
Everything here is exhaustive and exact: when an instance is too large for
the configured budget an :class:`OracleBudgetExceeded` is raised instead of
returning an approximation.

Budgets default to 10**8 rank computations and 2**24 dual codewords and can
be overridden with the ``UNEQUAL_LRC_RANK_BUDGET`` and
``UNEQUAL_LRC_DUAL_BUDGET`` environment variables.
"""

from __future__ import annotations

import functools
import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from unequal_lrc import _linalg
from unequal_lrc.galois import GaloisField

DEFAULT_RANK_BUDGET = 10**8
DEFAULT_DUAL_BUDGET = 1 << 24


class CodeError(ValueError):
    """Malformed code, message or codeword."""


class OracleBudgetExceeded(RuntimeError):
    """An exhaustive oracle would exceed its work budget."""


class UnrecoverableCoordinate(ValueError):
    """No dual codeword touches the coordinate, so its locality is undefined."""

    def __init__(self, coordinate: int) -> None:
        super().__init__(f"coordinate {coordinate} cannot be recovered from the others")
        self.coordinate = coordinate


def rank_budget() -> int:
    return int(os.environ.get("UNEQUAL_LRC_RANK_BUDGET", DEFAULT_RANK_BUDGET))


def dual_budget() -> int:
    return int(os.environ.get("UNEQUAL_LRC_DUAL_BUDGET", DEFAULT_DUAL_BUDGET))


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: GaloisField
    columns: tuple[tuple[int, ...], ...]
    systematic_positions: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if not cols:
            raise CodeError("a code needs at least one coordinate")
        k = len(cols[0])
        if k < 1 or any(len(c) != k for c in cols):
            raise CodeError("columns must all have the same positive length k")
        if k > len(cols):
            raise CodeError(f"dimension {k} exceeds length {len(cols)}")
        for c in cols:
            for x in c:
                self.field._check(x)
        if _linalg.rank(self.field, cols) != k:
            raise CodeError("columns do not have full rank k")
        if self.systematic_positions is not None:
            pos = tuple(self.systematic_positions)
            object.__setattr__(self, "systematic_positions", pos)
            if len(pos) != k or len(set(pos)) != k:
                raise CodeError("systematic_positions must list k distinct coordinates")
            for j, i in enumerate(pos):
                if not 0 <= i < len(cols):
                    raise CodeError(f"systematic position {i} out of range")
                if cols[i] != tuple(1 if r == j else 0 for r in range(k)):
                    raise CodeError(f"column {i} is not unit vector e_{j}")

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def k(self) -> int:
        return len(self.columns[0])

    @property
    def generator_rows(self) -> list[list[int]]:
        """The k x n generator matrix."""
        return _linalg.transpose(self.columns)

    def rank_of(self, coords: Iterable[int]) -> int:
        return _linalg.rank(self.field, [self.columns[i] for i in coords])

    def to_dict(self) -> dict:
        d = {
            "field": self.field.to_dict(),
            "n": self.n,
            "k": self.k,
            "columns": [list(c) for c in self.columns],
        }
        if self.systematic_positions is not None:
            d["systematic_positions"] = list(self.systematic_positions)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "LinearCode":
        code = cls(
            GaloisField.from_dict(d["field"]),
            tuple(tuple(c) for c in d["columns"]),
            tuple(d["systematic_positions"]) if d.get("systematic_positions") is not None else None,
        )
        if d.get("n", code.n) != code.n or d.get("k", code.k) != code.k:
            raise CodeError("n/k in file disagree with the column data")
        return code

    @functools.cached_property
    def _localities(self) -> dict:
        return _all_localities(self)


@dataclass(frozen=True)
class ErasurePattern:
    erased: frozenset[int]
    n: int

    def __init__(self, erased: Iterable[int], n: int) -> None:
        er = list(erased)
        if len(set(er)) != len(er):
            raise CodeError("duplicate erased coordinate")
        if any(not 0 <= i < n for i in er):
            raise CodeError("erased coordinate out of range")
        object.__setattr__(self, "erased", frozenset(er))
        object.__setattr__(self, "n", n)

    def survivors(self) -> list[int]:
        return [i for i in range(self.n) if i not in self.erased]

    def __len__(self) -> int:
        return len(self.erased)


@dataclass(frozen=True)
class _Profile:
    counts: tuple[int, ...]

    def __init__(self, counts: Iterable[int]) -> None:
        c = tuple(int(x) for x in counts)
        if any(x < 0 for x in c):
            raise ValueError("profile counts must be non-negative")
        object.__setattr__(self, "counts", c)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def max_locality(self) -> int:
        """Largest j with a nonzero count (0 for an all-zero profile)."""
        for j in range(len(self.counts), 0, -1):
            if self.counts[j - 1]:
                return j
        return 0

    def count(self, j: int) -> int:
        """Count at locality j (1-based), zero beyond the stored length."""
        return self.counts[j - 1] if 1 <= j <= len(self.counts) else 0

    def trimmed(self):
        return type(self)(self.counts[: self.max_locality])

    def padded(self, r: int):
        if r < len(self.counts):
            raise ValueError("cannot pad to a shorter length")
        return type(self)(self.counts + (0,) * (r - len(self.counts)))

    def __iter__(self):
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.counts)) + "}"

    @classmethod
    def parse(cls, text: str):
        text = text.strip().strip("{}[]")
        return cls(int(x) for x in text.split(",") if x.strip())


class InfoLocalityProfile(_Profile):
    """k_j information symbols of locality j, j = 1..r.

    Trailing zero classes are allowed so fixed-length vectors (as in the
    profile optimizer) can be represented; use ``trimmed()`` for the
    canonical form with k_r >= 1.
    """


class AllSymbolLocalityProfile(_Profile):
    """n_j code symbols of locality j, j = 1..ra."""


@dataclass(frozen=True)
class Locality:
    coordinate: int
    locality: int
    repair_group: tuple[int, ...]


# ------------------------------------------------------------------ encoding


def encode(code: LinearCode, message: Sequence[int]) -> list[int]:
    if len(message) != code.k:
        raise CodeError(f"message length {len(message)} != k = {code.k}")
    for x in message:
        code.field._check(x)
    return [_linalg.dot(code.field, message, c) for c in code.columns]


def dual_basis(code: LinearCode) -> list[list[int]]:
    """Basis of the dual code: every h with G h^T = 0."""
    return _linalg.nullspace(code.field, code.generator_rows, code.n)


# ---------------------------------------------------------- minimum distance


def min_distance(code: LinearCode, budget: int | None = None) -> int:
    """Minimum distance via Fact-1 support ranks.

    Smallest t such that deleting some t coordinates leaves rank < k.  The
    cost depends only on n and k, not on the field size.
    """
    budget = rank_budget() if budget is None else budget
    n, k = code.n, code.k
    F = code.field
    cols = code.columns
    spent = 0
    for t in range(1, n - k + 2):
        spent += math.comb(n, t)
        if spent > budget:
            raise OracleBudgetExceeded(f"min_distance needs more than {budget} rank computations")
        for T in itertools.combinations(range(n), t):
            drop = set(T)
            if _linalg.rank(F, [cols[i] for i in range(n) if i not in drop]) < k:
                return t
    raise AssertionError("Singleton bound violated")  # pragma: no cover


def min_distance_by_enumeration(code: LinearCode, budget: int | None = None) -> int:
    """Minimum Hamming weight over all nonzero codewords (cross-check oracle)."""
    budget = dual_budget() if budget is None else budget
    F = code.field
    size = F.order ** (code.k - 1)
    if size > budget:
        raise OracleBudgetExceeded(f"{size} messages exceed the enumeration budget {budget}")
    best = code.n
    for u in _projective_vectors(F.order, code.k):
        w = sum(1 for c in code.columns if _linalg.dot(F, u, c))
        best = min(best, w)
    return best


def _projective_vectors(q: int, length: int) -> Iterable[list[int]]:
    """Nonzero vectors whose leading nonzero entry is 1."""
    for lead in range(length):
        for tail in itertools.product(range(q), repeat=length - lead - 1):
            yield [0] * lead + [1] + list(tail)


# --------------------------------------------------------------- locality


def _in_span(F: GaloisField, rows: list[tuple[int, ...]], v: tuple[int, ...]) -> bool:
    r = _linalg.rank(F, rows)
    return r == len(rows) and _linalg.rank(F, rows + [v]) == r


def _subset_search_cost(n: int, k: int) -> int:
    return n * sum(math.comb(n - 1, r) for r in range(k + 1))


def _locality_by_subsets(code: LinearCode, i: int) -> Locality:
    F, cols = code.field, code.columns
    others = [j for j in range(code.n) if j != i]
    target = cols[i]
    if not any(target):
        return Locality(i, 0, ())
    for r in range(1, code.k + 1):
        for S in itertools.combinations(others, r):
            if _in_span(F, [cols[j] for j in S], target):
                return Locality(i, r, S)
    raise UnrecoverableCoordinate(i)


def _localities_by_dual(code: LinearCode) -> dict[int, Locality | None]:
    F = code.field
    H = dual_basis(code)
    best: dict[int, tuple[int, tuple[int, ...]]] = {}
    for coeffs in _projective_vectors(F.order, len(H)):
        word = [0] * code.n
        for c, h in zip(coeffs, H):
            if c:
                word = [F.add(x, F.mul(c, y)) for x, y in zip(word, h)]
        supp = tuple(j for j, x in enumerate(word) if x)
        for i in supp:
            cand = (len(supp) - 1, tuple(j for j in supp if j != i))
            if i not in best or cand < best[i]:
                best[i] = cand
    return {i: (Locality(i, *best[i]) if i in best else None) for i in range(code.n)}


def _all_localities(code: LinearCode) -> dict[int, Locality | None]:
    n, k = code.n, code.k
    dual_cost = code.field.order ** max(n - k - 1, 0)
    subset_cost = _subset_search_cost(n, k)
    if n == k:
        return {i: None for i in range(n)}
    if dual_cost <= subset_cost and dual_cost <= dual_budget():
        return _localities_by_dual(code)
    if subset_cost > rank_budget():
        raise OracleBudgetExceeded(
            f"locality needs {subset_cost} rank computations or {dual_cost} dual codewords"
        )
    out: dict[int, Locality | None] = {}
    for i in range(n):
        try:
            out[i] = _locality_by_subsets(code, i)
        except UnrecoverableCoordinate:
            out[i] = None
    return out


def coordinate_locality(code: LinearCode, i: int) -> Locality:
    """Locality of coordinate i and a minimum repair group.

    Among minimum-size repair groups the lexicographically smallest is
    returned.  Computed either by enumerating dual codewords or by searching
    coordinate subsets in increasing size, whichever is cheaper; both give
    the same answer.
    """
    if not 0 <= i < code.n:
        raise CodeError(f"coordinate {i} out of range")
    loc = code._localities[i]
    if loc is None:
        raise UnrecoverableCoordinate(i)
    return loc


def localities(code: LinearCode) -> list[Locality]:
    return [coordinate_locality(code, i) for i in range(code.n)]


def _locality_classes(code: LinearCode) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {}
    for loc in localities(code):
        if loc.locality == 0:
            raise CodeError(f"coordinate {loc.coordinate} is identically zero")
        classes.setdefault(loc.locality, []).append(loc.coordinate)
    return classes


def all_symbol_profile(code: LinearCode) -> AllSymbolLocalityProfile:
    classes = _locality_classes(code)
    ra = max(classes)
    return AllSymbolLocalityProfile(len(classes.get(j, ())) for j in range(1, ra + 1))


def info_profile(code: LinearCode) -> InfoLocalityProfile:
    """Information locality profile from rank increments of locality classes."""
    classes = _locality_classes(code)
    counts = []
    collected: list[int] = []
    prev = 0
    for j in range(1, max(classes) + 1):
        collected += classes.get(j, [])
        rk = code.rank_of(collected)
        counts.append(rk - prev)
        prev = rk
        if rk == code.k:
            break
    return InfoLocalityProfile(counts).trimmed()


# ----------------------------------------------------------------- decoding


def erasure_decode(
    code: LinearCode, received: Sequence[int | None], pattern: ErasurePattern
) -> list[int] | None:
    """Message reproducing every surviving symbol, or None if not unique."""
    if len(received) != code.n or pattern.n != code.n:
        raise CodeError("received word and pattern must have length n")
    surv = pattern.survivors()
    if code.rank_of(surv) < code.k:
        return None
    A = [code.columns[i] for i in surv]
    b = [received[i] for i in surv]
    if any(x is None for x in b):
        raise CodeError("surviving symbol missing")
    u = _linalg.solve(code.field, A, b)
    return u


def repair_coefficients(code: LinearCode, i: int) -> tuple[tuple[int, ...], list[int]]:
    """Repair group of i and the coefficients lambda with c_i = sum lambda_l c_l."""
    loc = coordinate_locality(code, i)
    group = loc.repair_group
    if not group:
        return group, []
    A = _linalg.transpose([code.columns[j] for j in group])
    lam = _linalg.solve(code.field, A, list(code.columns[i]))
    assert lam is not None
    return group, lam


def local_repair(code: LinearCode, codeword: Sequence[int], i: int) -> int:
    """Recompute symbol i from its repair group only."""
    if len(codeword) != code.n:
        raise CodeError("codeword must have length n")
    group, lam = repair_coefficients(code, i)
    F = code.field
    acc = 0
    for j, c in zip(group, lam):
        acc = F.add(acc, F.mul(c, codeword[j]))
    return acc
