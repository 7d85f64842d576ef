"""Singleton-type distance bounds for codes with unequal locality."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

from unequal_lrc.code_core import (
    AllSymbolLocalityProfile,
    InfoLocalityProfile,
    LinearCode,
    coordinate_locality,
)


class BoundError(ValueError):
    """Bound parameters violate the bound's hypotheses."""


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundReport:
    kind: str
    n: int
    k: int
    profile: tuple[int, ...]
    bound: int
    per_locality_terms: tuple[int, ...]
    intermediates: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["profile"] = list(self.profile)
        d["per_locality_terms"] = list(self.per_locality_terms)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def trace(self) -> str:
        """Human-readable derivation of the bound."""
        lines = [f"{self.kind} bound for n={self.n}, k={self.k}, profile={{{','.join(map(str, self.profile))}}}"]
        if self.kind == "gopalan":
            r = self.intermediates["r"]
            lines.append(f"  d <= n - k - ceil(k/r) + 2 = {self.n} - {self.k} - {self.per_locality_terms[0]} + 2")
            lines.append(f"     (r = {r})")
        elif self.kind == "info":
            terms = " + ".join(
                f"ceil({kj}/{j})" for j, kj in enumerate(self.profile, start=1)
            )
            lines.append(f"  sum_j ceil(k_j/j) = {terms} = {sum(self.per_locality_terms)}")
            lines.append(f"  d <= n - k + 2 - {sum(self.per_locality_terms)}")
        else:
            im = self.intermediates
            lines.append(f"  k'_j = n_j - ceil(n_j/(j+1)) = {im['k_prime']}")
            lines.append(f"  r' = {im['r_prime']}, r = {im['r']}")
            lines.append(
                f"  sum_(j<r) ceil(n_j/(j+1)) = {sum(self.per_locality_terms[:-1])}, "
                f"ceil((k - {im['k_prime_sum_below_r']})/r) = {self.per_locality_terms[-1]}"
            )
            lines.append(f"  d <= n - k + 2 - {sum(self.per_locality_terms)}")
        lines.append(f"  bound = {self.bound}")
        return "\n".join(lines)


def gopalan_bound(n: int, k: int, r: int) -> int:
    """d <= n - k - ceil(k/r) + 2 for information locality r."""
    if not 1 <= r <= k <= n:
        raise BoundError(f"need 1 <= r <= k <= n, got n={n}, k={k}, r={r}")
    return n - k - ceil_div(k, r) + 2


def gopalan_report(n: int, k: int, r: int) -> BoundReport:
    b = gopalan_bound(n, k, r)
    return BoundReport("gopalan", n, k, (0,) * (r - 1) + (k,), b, (ceil_div(k, r),), {"r": r})


def _as_counts(profile) -> tuple[int, ...]:
    counts = tuple(profile.counts if hasattr(profile, "counts") else profile)
    if any(c < 0 for c in counts):
        raise BoundError("profile counts must be non-negative")
    return counts


def unequal_info_bound(n: int, k: int, profile: InfoLocalityProfile | Sequence[int]) -> BoundReport:
    """d <= n - k - sum_j ceil(k_j / j) + 2."""
    counts = _as_counts(profile)
    r = len(counts)
    while r and counts[r - 1] == 0:
        r -= 1
    counts = counts[:r]
    if r == 0:
        raise BoundError("profile has no nonzero class")
    if sum(counts) != k:
        raise BoundError(f"profile sums to {sum(counts)}, expected k = {k}")
    if k > n:
        raise BoundError(f"k = {k} exceeds n = {n}")
    terms = tuple(ceil_div(kj, j) for j, kj in enumerate(counts, start=1))
    return BoundReport("info", n, k, counts, n - k + 2 - sum(terms), terms, {"r": r})


def unequal_all_symbol_bound(
    n: int, k: int, profile: AllSymbolLocalityProfile | Sequence[int]
) -> BoundReport:
    """Bound from the all-symbol locality profile {n_1, ..., n_ra}.

    With k'_j = n_j - ceil(n_j/(j+1)), r' the largest i whose prefix sum of
    k'_j stays below k (0 if none does) and r the smallest j > r' with
    n_j >= 2:

        d <= n - k + 2 - sum_{j<r} ceil(n_j/(j+1)) - ceil((k - sum_{j<r} k'_j)/r)
    """
    counts = _as_counts(profile)
    ra = len(counts)
    while ra and counts[ra - 1] == 0:
        ra -= 1
    counts = counts[:ra]
    if ra == 0:
        raise BoundError("profile has no nonzero class")
    if sum(counts) != n:
        raise BoundError(f"profile sums to {sum(counts)}, expected n = {n}")
    if not ra < k:
        raise BoundError(f"maximum locality {ra} must be below k = {k}")
    k_prime = tuple(nj - ceil_div(nj, j + 1) for j, nj in enumerate(counts, start=1))
    r_prime = 0
    acc = 0
    for i in range(1, ra + 1):
        acc += k_prime[i - 1]
        if acc < k:
            r_prime = i
    candidates = [j for j in range(r_prime + 1, ra + 1) if counts[j - 1] >= 2]
    if not candidates:
        raise BoundError(
            f"r = min{{r'+1 <= j <= ra : n_j >= 2}} is undefined (r' = {r_prime}, ra = {ra})"
        )
    r = candidates[0]
    kp_below = sum(k_prime[: r - 1])
    terms = tuple(ceil_div(counts[j - 1], j + 1) for j in range(1, r)) + (ceil_div(k - kp_below, r),)
    bound = n - k + 2 - sum(terms)
    return BoundReport(
        "all-symbol",
        n,
        k,
        counts,
        bound,
        terms,
        {"k_prime": list(k_prime), "r_prime": r_prime, "r": r, "k_prime_sum_below_r": kp_below},
    )


# --------------------------------------------------------------- witness set


@dataclass(frozen=True)
class WitnessStep:
    picked: int
    locality: int
    added: tuple[int, ...]
    s: int
    t: int
    full: bool


@dataclass(frozen=True)
class WitnessSet:
    coordinates: frozenset[int]
    rank: int
    iteration_log: tuple[WitnessStep, ...]

    def __len__(self) -> int:
        return len(self.coordinates)


def witness_set(code: LinearCode) -> WitnessSet:
    """Greedy rank-(k-1) set built from smallest-locality repair groups.

    Each round picks the unused coordinate of smallest locality (lowest index
    on ties) and adds it with its repair group.  If that would make the set
    full rank, only the members needed to reach rank k-1 are added, in index
    order.
    """
    k = code.k
    locs = {i: coordinate_locality(code, i) for i in range(code.n)}
    order = sorted(range(code.n), key=lambda i: (locs[i].locality, i))
    S: list[int] = []
    in_S: set[int] = set()
    rank = 0
    log = []
    while rank <= k - 2:
        i = next(j for j in order if j not in in_S)
        gamma = sorted({i, *locs[i].repair_group})
        new = [j for j in gamma if j not in in_S]
        new_rank = code.rank_of(S + new)
        full = new_rank < k
        if full:
            added = new
        else:
            added = []
            new_rank = rank
            for j in new:
                added.append(j)
                new_rank = code.rank_of(S + added)
                if new_rank == k - 1:
                    break
        S += added
        in_S.update(added)
        log.append(WitnessStep(i, locs[i].locality, tuple(added), len(added), new_rank - rank, full))
        rank = new_rank
    return WitnessSet(frozenset(S), rank, tuple(log))
