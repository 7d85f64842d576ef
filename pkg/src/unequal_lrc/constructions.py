"""Distance-optimal codes with unequal locality.

* :func:`systematic_mds` -- Reed-Solomon base code in systematic form.
* :func:`pyramid_unequal` -- parity splitting with one locality class per
  group of information symbols.
* :func:`gabidulin_lrc` -- Gabidulin precode followed by single-parity local
  groups of size j + 1 for every locality class j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from unequal_lrc import _linalg
from unequal_lrc.bounds import ceil_div
from unequal_lrc.code_core import (
    AllSymbolLocalityProfile,
    ErasurePattern,
    InfoLocalityProfile,
    LinearCode,
)
from unequal_lrc.galois import FieldError, GaloisField, field_of_order, is_prime


class ConstructionError(ValueError):
    """Construction parameters outside the supported range."""


def smallest_prime_power_at_least(n: int) -> int:
    q = max(n, 2)
    while True:
        for p in range(2, q + 1):
            if q % p == 0:
                break
        rest = q
        while rest % p == 0:
            rest //= p
        if rest == 1 and is_prime(p):
            return q
        q += 1


def _as_field(q: int | GaloisField) -> GaloisField:
    if isinstance(q, GaloisField):
        return q
    try:
        return field_of_order(q)
    except FieldError as exc:
        raise ConstructionError(str(exc)) from None


def systematic_mds(k: int, d: int, q: int | GaloisField) -> LinearCode:
    """Systematic (k+d-1, k, d) Reed-Solomon code.

    Evaluates at the first k+d-1 field elements in index order and
    row-reduces so the first k coordinates are the identity.
    """
    F = _as_field(q)
    if k < 1 or d < 1:
        raise ConstructionError("need k >= 1 and d >= 1")
    n = k + d - 1
    if F.order < n:
        raise ConstructionError(f"GF({F.order}) too small for a length-{n} Reed-Solomon code")
    vand = [[F.pow(x, i) for x in range(n)] for i in range(k)]
    left_inv = _linalg.inverse(F, [row[:k] for row in vand])
    G = _linalg.matmul(F, left_inv, vand)
    return LinearCode(F, tuple(zip(*G)), tuple(range(k)))


# -------------------------------------------------------------- Pyramid codes


@dataclass(frozen=True)
class ParityGroup:
    coordinate: int
    locality_class: int
    info_coordinates: tuple[int, ...]


@dataclass(frozen=True)
class PyramidCode:
    code: LinearCode
    requested_profile: InfoLocalityProfile
    groups: tuple[ParityGroup, ...]
    global_parities: tuple[int, ...]
    d_design: int

    @property
    def intended_profile(self) -> InfoLocalityProfile:
        """Information profile implied by the realized local groups.

        An information symbol in a group of s symbols is repaired from s
        others, so a short final group (when j does not divide k_j) lowers
        the locality of its members below j.  The bound value is unchanged
        because each group contributes exactly one ceiling term either way.
        """
        counts: dict[int, int] = {}
        for g in self.groups:
            s = len(g.info_coordinates)
            counts[s] = counts.get(s, 0) + s
        top = max(counts)
        return InfoLocalityProfile(counts.get(j, 0) for j in range(1, top + 1))

    def descriptor(self) -> dict:
        return {
            "kind": "pyramid",
            "profile": list(self.requested_profile.counts),
            "d": self.d_design,
            "q": self.code.field.order,
            "groups": [
                {"parity": g.coordinate, "locality": g.locality_class, "info": list(g.info_coordinates)}
                for g in self.groups
            ],
            "global_parities": list(self.global_parities),
        }


def pyramid_unequal(
    profile: InfoLocalityProfile | Sequence[int], d: int, q: int | GaloisField | None = None
) -> PyramidCode:
    """Pyramid code whose information symbols follow ``profile``.

    Information coordinates are handed out in index order, lowest locality
    class first; each class is cut into ceil(k_j/j) groups of at most j
    symbols and gets one local parity per group, namely the first MDS parity
    restricted to that group.  The remaining d-2 MDS parities are appended
    unchanged.
    """
    prof = profile if isinstance(profile, InfoLocalityProfile) else InfoLocalityProfile(profile)
    prof = prof.trimmed()
    k = prof.total
    if k < 1:
        raise ConstructionError("profile must contain at least one information symbol")
    if d < 2:
        raise ConstructionError("parity splitting needs d >= 2")
    if q is None:
        q = smallest_prime_power_at_least(k + d - 1)
    base = systematic_mds(k, d, q)
    F = base.field
    p0 = base.columns[k]
    tail = base.columns[k + 1 :]

    columns: list[tuple[int, ...]] = list(base.columns[:k])
    groups: list[ParityGroup] = []
    next_info = 0
    for j, kj in enumerate(prof.counts, start=1):
        members = list(range(next_info, next_info + kj))
        next_info += kj
        for start in range(0, kj, j):
            block = tuple(members[start : start + j])
            columns.append(tuple(x if r in block else 0 for r, x in enumerate(p0)))
            groups.append(ParityGroup(len(columns) - 1, j, block))
    global_start = len(columns)
    columns.extend(tail)
    code = LinearCode(F, tuple(columns), tuple(range(k)))
    expected_n = k + d - 2 + sum(ceil_div(kj, j) for j, kj in enumerate(prof.counts, start=1))
    assert code.n == expected_n
    return PyramidCode(code, prof, tuple(groups), tuple(range(global_start, code.n)), d)


# ---------------------------------------------------- Gabidulin-precoded LRCs


@dataclass(frozen=True)
class LocalGroup:
    locality: int
    coordinates: tuple[int, ...]
    points: tuple[int, ...]

    @property
    def parity(self) -> int:
        return self.coordinates[-1]


@dataclass(frozen=True)
class GabidulinLRC:
    code: LinearCode
    local_groups: tuple[LocalGroup, ...]
    N: int
    evaluation_points: tuple[int, ...]
    intended_profile: AllSymbolLocalityProfile
    effective_points: tuple[int, ...]

    @property
    def field(self) -> GaloisField:
        return self.code.field

    def group_of(self, i: int) -> LocalGroup:
        for g in self.local_groups:
            if i in g.coordinates:
                return g
        raise IndexError(i)

    def descriptor(self) -> dict:
        F = self.field
        return {
            "kind": "gabidulin",
            "nprofile": list(self.intended_profile.counts),
            "k": self.code.k,
            "q": F.q,
            "m": F.m,
            "N": self.N,
            "evaluation_points": list(self.evaluation_points),
            "local_groups": [
                {"locality": g.locality, "coordinates": list(g.coordinates)} for g in self.local_groups
            ],
        }


def gabidulin_lrc(
    k: int, nprofile: AllSymbolLocalityProfile | Sequence[int], q: int, m: int | None = None
) -> GabidulinLRC:
    """LRC with all-symbol locality profile ``nprofile`` over GF(q^m).

    The message holds the coefficients of a linearized polynomial f of
    q-degree < k.  f is evaluated at the first N polynomial-basis elements
    of GF(q^m); those N symbols are cut into groups of j per locality class
    j, and each group gets the parity sum of its members, which equals f
    evaluated at the sum of the group's points.  ``m`` defaults to N.
    """
    prof = nprofile if isinstance(nprofile, AllSymbolLocalityProfile) else AllSymbolLocalityProfile(nprofile)
    prof = prof.trimmed()
    ra = prof.max_locality
    if ra == 0:
        raise ConstructionError("empty locality profile")
    for j, nj in enumerate(prof.counts, start=1):
        if nj % (j + 1):
            raise ConstructionError(
                f"(j+1) must divide n_j: n_{j} = {nj} is not a multiple of {j + 1}"
            )
    N = sum(nj * j // (j + 1) for j, nj in enumerate(prof.counts, start=1))
    if not 1 <= k <= N:
        raise ConstructionError(f"need 1 <= k <= N = {N}, got k = {k}")
    if ra > k:
        raise ConstructionError(f"maximum locality {ra} exceeds k = {k}")
    if q < ra + 1:
        raise ConstructionError(f"need q >= ra + 1 = {ra + 1}, got q = {q}")
    if m is None:
        m = N
    if m < N:
        raise ConstructionError(f"need m >= N = {N}, got m = {m}")
    base = _as_field(q)
    from unequal_lrc.galois import field_new

    F = field_new(base.p, base.w, m)

    points = tuple(F.basis_element(i) for i in range(N))
    columns: list[tuple[int, ...]] = []
    effective: list[int] = []
    groups: list[LocalGroup] = []
    nxt = 0
    for j, nj in enumerate(prof.counts, start=1):
        for _ in range(nj // (j + 1)):
            pts = points[nxt : nxt + j]
            nxt += j
            parity_point = 0
            for g in pts:
                parity_point = F.add(parity_point, g)
            start = len(columns)
            for h in pts + (parity_point,):
                columns.append(_gabidulin_column(F, h, k))
                effective.append(h)
            groups.append(LocalGroup(j, tuple(range(start, len(columns))), pts))
    code = LinearCode(F, tuple(columns))
    return GabidulinLRC(code, tuple(groups), N, points, prof, tuple(effective))


def _gabidulin_column(F: GaloisField, h: int, k: int) -> tuple[int, ...]:
    col = []
    v = h
    for _ in range(k):
        col.append(v)
        v = F.frobenius(v, 1)
    return tuple(col)


def lrc_erasure_decode(
    lrc: GabidulinLRC, received: Sequence[int | None], pattern: ErasurePattern
) -> list[int] | None:
    """Two-stage erasure decoding through the outer Gabidulin code.

    Every surviving symbol is f evaluated at a known point (a basis element
    or a group sum).  The first k surviving points that are independent over
    GF(q) give a Moore system whose solution is the message.  Returns None
    when the survivors span fewer than k dimensions over GF(q).
    """
    from unequal_lrc.galois import moore_solve

    F = lrc.field
    k = lrc.code.k
    chosen_pts: list[int] = []
    chosen_vals: list[int] = []
    for i in pattern.survivors():
        if len(chosen_pts) == k:
            break
        h = lrc.effective_points[i]
        if F.subfield_rank(chosen_pts + [h]) == len(chosen_pts) + 1:
            chosen_pts.append(h)
            chosen_vals.append(received[i])
    if len(chosen_pts) < k:
        return None
    return list(moore_solve(F, chosen_pts, chosen_vals).coefficients)


def repair_group_of(construction: PyramidCode | GabidulinLRC, i: int) -> tuple[int, ...]:
    """Designed repair group of coordinate i (not the oracle's witness)."""
    if isinstance(construction, GabidulinLRC):
        g = construction.group_of(i)
        return tuple(c for c in g.coordinates if c != i)
    for g in construction.groups:
        if i == g.coordinate:
            return g.info_coordinates
        if i in g.info_coordinates:
            return tuple(c for c in g.info_coordinates if c != i) + (g.coordinate,)
    raise ConstructionError(f"coordinate {i} is a global parity with no designed local group")
