"""Choosing an information locality profile for a locality requirement.

A requirement {k~_1, ..., k~_r} asks that at least k~_1 + ... + k~_i
information symbols have locality at most i, for every i.  Among profiles
meeting it (with the same total), the one minimizing sum_j ceil(k_j/j) has
the largest distance bound; :func:`greedy_optimal_profile` finds it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Sequence

from unequal_lrc.bounds import ceil_div
from unequal_lrc.code_core import InfoLocalityProfile


class ProfileError(ValueError):
    pass


@dataclass(frozen=True)
class LocalityRequirement:
    counts: tuple[int, ...]

    def __init__(self, counts: Sequence[int]) -> None:
        c = tuple(int(x) for x in counts)
        if not c:
            raise ProfileError("empty requirement")
        k = sum(c)
        if any(not 0 <= x <= k for x in c):
            raise ProfileError("requirement counts must lie in [0, k]")
        object.__setattr__(self, "counts", c)

    @property
    def k(self) -> int:
        return sum(self.counts)

    @property
    def r(self) -> int:
        return len(self.counts)

    @classmethod
    def parse(cls, text: str) -> "LocalityRequirement":
        return cls([int(x) for x in text.strip().strip("{}[]").split(",") if x.strip()])

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.counts)) + "}"


def _counts(profile) -> tuple[int, ...]:
    return tuple(profile.counts if hasattr(profile, "counts") else profile)


def respects(profile: InfoLocalityProfile | Sequence[int], req: LocalityRequirement) -> bool:
    """Prefix-sum dominance over the requirement, with equal totals."""
    k = _counts(profile)
    r = max(len(k), req.r)
    k = k + (0,) * (r - len(k))
    kt = req.counts + (0,) * (r - req.r)
    if sum(k) != sum(kt):
        return False
    return all(a >= b for a, b in zip(accumulate(k), accumulate(kt)))


def objective(profile: InfoLocalityProfile | Sequence[int]) -> int:
    """sum_j ceil(k_j / j), the quantity subtracted in the distance bound."""
    return sum(ceil_div(kj, j) for j, kj in enumerate(_counts(profile), start=1))


@dataclass(frozen=True)
class GreedyStep:
    j: int
    b: int
    g: int
    k_star: int
    carry_in: int


@dataclass(frozen=True)
class GreedyTrace:
    steps: tuple[GreedyStep, ...]

    def residue(self, j: int) -> int:
        """g_j; g_{r+1} = 0."""
        for s in self.steps:
            if s.j == j:
                return s.g
        return 0


def greedy_optimal_profile(req: LocalityRequirement) -> tuple[InfoLocalityProfile, GreedyTrace]:
    """Walk from the largest locality down, keeping the largest multiple of j.

    At locality j the requirement plus the residue carried from j+1 is split
    as j*b_j + g_j with 0 <= g_j < j; k*_j = j*b_j and g_j moves down.
    """
    r = req.r
    k_star = [0] * r
    steps = []
    carry = 0
    for j in range(r, 0, -1):
        total = req.counts[j - 1] + carry
        b, g = divmod(total, j)
        k_star[j - 1] = j * b
        steps.append(GreedyStep(j, b, g, j * b, carry))
        carry = g
    assert carry == 0  # locality 1 absorbs everything
    return InfoLocalityProfile(k_star), GreedyTrace(tuple(steps))


# ------------------------------------------------------------ exhaustive oracle

EXHAUSTIVE_MAX_K = 14
EXHAUSTIVE_MAX_R = 6


def respecting_profiles(req: LocalityRequirement) -> Iterator[tuple[int, ...]]:
    """Every non-negative length-r vector that respects ``req``, lexicographically.

    Depth-first over coordinates, pruning any prefix whose sum falls below the
    requirement's prefix sum.
    """
    r, k = req.r, req.k
    need = list(accumulate(req.counts))

    def rec(prefix: list[int], s: int) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if i == r - 1:
            last = k - s
            if last >= 0 and s + last >= need[i]:
                yield tuple(prefix) + (last,)
            return
        for v in range(0, k - s + 1):
            if s + v >= need[i]:
                prefix.append(v)
                yield from rec(prefix, s + v)
                prefix.pop()

    yield from rec([], 0)


def _check_budget(req: LocalityRequirement) -> None:
    if req.k > EXHAUSTIVE_MAX_K or req.r > EXHAUSTIVE_MAX_R:
        raise ProfileError(
            f"exhaustive search limited to k <= {EXHAUSTIVE_MAX_K}, r <= {EXHAUSTIVE_MAX_R}"
        )


def exhaustive_optimal_objective(req: LocalityRequirement) -> int:
    _check_budget(req)
    return min(objective(p) for p in respecting_profiles(req))


def exhaustive_optimal_profiles(req: LocalityRequirement) -> list[tuple[int, ...]]:
    _check_budget(req)
    profiles = list(respecting_profiles(req))
    best = min(objective(p) for p in profiles)
    return [p for p in profiles if objective(p) == best]


# --------------------------------------------------------------- canonicalize


@dataclass(frozen=True)
class TransformStep:
    kind: str  # "residue-shift" or "move-right"
    source: int
    target: int
    amount: int
    before: tuple[int, ...]
    after: tuple[int, ...]
    objective_before: int
    objective_after: int


def _residue_shift(k: list[int], j: int, log: list[TransformStep]) -> None:
    g = k[j - 1] % j
    if g == 0:
        return
    before = tuple(k)
    k[j - 1] -= g
    k[g - 1] += g
    log.append(TransformStep("residue-shift", j, g, g, before, tuple(k), objective(before), objective(k)))


def normalize_divisibility(
    profile: InfoLocalityProfile | Sequence[int], log: list[TransformStep] | None = None
) -> tuple[int, ...]:
    """Shift residues until j divides k_j for every j, largest j first.

    Moving k_j mod j symbols from locality j to locality (k_j mod j) keeps
    the objective and any requirement the profile respects.
    """
    k = list(_counts(profile))
    log = [] if log is None else log
    while True:
        bad = [j for j in range(1, len(k) + 1) if k[j - 1] % j]
        if not bad:
            return tuple(k)
        _residue_shift(k, max(bad), log)


def canonicalize(
    profile: InfoLocalityProfile | Sequence[int], req: LocalityRequirement
) -> tuple[InfoLocalityProfile, list[TransformStep]]:
    """Transform an optimal profile into the greedy one, logging every step.

    First shifts residues k_j mod j down to locality (k_j mod j), largest j
    first, until j | k_j everywhere.  Then repeatedly fixes the largest
    locality where the profile differs from the greedy output by moving
    mass up from the largest locality holding a surplus, shifting any new
    residue down again.
    """
    k = list(_counts(profile))
    if len(k) > req.r:
        if any(k[req.r :]):
            raise ProfileError("profile uses localities beyond the requirement")
        k = k[: req.r]
    k += [0] * (req.r - len(k))
    if not respects(k, req):
        raise ProfileError(f"profile {k} does not respect requirement {req}")
    k_star, _ = greedy_optimal_profile(req)
    ks = list(k_star.counts)
    gap = objective(k) - objective(ks)
    if gap:
        raise ProfileError(f"profile {k} is not optimal: objective exceeds the optimum by {gap}")

    log: list[TransformStep] = []
    k = list(normalize_divisibility(k, log))

    while any(a != b for a, b in zip(k, ks)):
        jm = max(j for j in range(1, req.r + 1) if k[j - 1] != ks[j - 1])
        while k[jm - 1] < ks[jm - 1]:
            jp = max(j for j in range(1, req.r + 1) if k[j - 1] > ks[j - 1])
            dm = ks[jm - 1] - k[jm - 1]
            dp = k[jp - 1] - ks[jp - 1]
            step = min(dm, dp)
            before = tuple(k)
            k[jm - 1] += step
            k[jp - 1] -= step
            log.append(TransformStep("move-right", jp, jm, step, before, tuple(k), objective(before), objective(k)))
            if dm < dp:
                _residue_shift(k, jp, log)
    return InfoLocalityProfile(k), log
