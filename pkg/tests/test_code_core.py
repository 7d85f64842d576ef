import itertools
import random

import pytest

from conftest import planted_codes
from unequal_lrc import _linalg
from unequal_lrc.code_core import (
    AllSymbolLocalityProfile,
    CodeError,
    ErasurePattern,
    InfoLocalityProfile,
    LinearCode,
    OracleBudgetExceeded,
    UnrecoverableCoordinate,
    _locality_by_subsets,
    _localities_by_dual,
    all_symbol_profile,
    coordinate_locality,
    dual_basis,
    encode,
    erasure_decode,
    info_profile,
    local_repair,
    min_distance,
    min_distance_by_enumeration,
)
from unequal_lrc.constructions import pyramid_unequal, systematic_mds
from unequal_lrc.galois import field_new, field_of_order

GF2 = field_new(2)


def repetition(n):
    return LinearCode(GF2, tuple((1,) for _ in range(n)))


def single_parity(k, q=2):
    F = field_of_order(q)
    cols = [tuple(1 if r == j else 0 for r in range(k)) for j in range(k)]
    cols.append(tuple(1 for _ in range(k)))
    return LinearCode(F, tuple(cols), tuple(range(k)))


def test_code_validation():
    with pytest.raises(CodeError):
        LinearCode(GF2, ((1, 0), (1, 0)))  # rank 1 < k = 2
    with pytest.raises(CodeError):
        LinearCode(GF2, ((1, 0), (0, 1)), systematic_positions=(1, 0))
    with pytest.raises(CodeError):
        LinearCode(GF2, ((1,), (1, 0)))
    code = LinearCode(GF2, ((1, 0), (0, 1), (1, 1)), (0, 1))
    assert (code.n, code.k) == (3, 2)


def test_code_json_round_trip():
    code = systematic_mds(3, 3, 8)
    again = LinearCode.from_dict(code.to_dict())
    assert again.columns == code.columns and again.field == code.field
    assert again.systematic_positions == (0, 1, 2)


# ------------------------------------------------------------------ encode


def test_encode_zero_and_unit_messages():
    code = systematic_mds(3, 3, 8)
    assert encode(code, [0, 0, 0]) == [0] * code.n
    for j in range(3):
        e = [1 if r == j else 0 for r in range(3)]
        cw = encode(code, e)
        assert [cw[i] for i in code.systematic_positions] == e


def test_encode_is_linear():
    code = systematic_mds(3, 3, 8)
    F = code.field
    rng = random.Random(1)
    for _ in range(50):
        u = [rng.randrange(8) for _ in range(3)]
        v = [rng.randrange(8) for _ in range(3)]
        c = rng.randrange(8)
        w = [F.add(a, F.mul(c, b)) for a, b in zip(u, v)]
        assert encode(code, w) == [F.add(a, F.mul(c, b)) for a, b in zip(encode(code, u), encode(code, v))]


def test_encode_rejects_wrong_length():
    with pytest.raises(CodeError):
        encode(repetition(3), [1, 0])


# ------------------------------------------------------------ min distance


@pytest.mark.parametrize("n", [1, 2, 5])
def test_repetition_distance(n):
    assert min_distance(repetition(n)) == n


def test_mds_distance_matches_enumeration():
    code = systematic_mds(3, 3, 8)
    assert min_distance(code) == 3
    assert min_distance_by_enumeration(code) == 3


def test_zero_column_never_contributes_weight():
    code = LinearCode(GF2, ((1, 0), (0, 1), (0, 0), (1, 1)))
    assert min_distance(code) == min_distance_by_enumeration(code) == 2
    assert coordinate_locality(code, 2).locality == 0


def test_support_rank_matches_enumeration_on_random_codes():
    for code in planted_codes(40, seed=7):
        if code.field.order ** code.k <= 1 << 20:
            assert min_distance(code) == min_distance_by_enumeration(code)


def test_min_distance_budget():
    with pytest.raises(OracleBudgetExceeded):
        min_distance(systematic_mds(3, 4, 8), budget=3)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("UNEQUAL_LRC_RANK_BUDGET", "2")
    with pytest.raises(OracleBudgetExceeded):
        min_distance(systematic_mds(3, 4, 8))


# --------------------------------------------------------------- dual basis


def test_dual_of_single_parity_code():
    H = dual_basis(single_parity(4, q=4))
    assert len(H) == 1 and all(H[0])


def test_dual_of_full_code_is_empty():
    code = LinearCode(GF2, ((1, 0), (0, 1)))
    assert dual_basis(code) == []


def test_dual_annihilates_codewords():
    rng = random.Random(2)
    for code in planted_codes(10, seed=3):
        H = dual_basis(code)
        assert len(H) == code.n - code.k
        assert _linalg.rank(code.field, H) == len(H)
        for _ in range(100):
            cw = encode(code, [rng.randrange(code.field.order) for _ in range(code.k)])
            assert all(_linalg.dot(code.field, h, cw) == 0 for h in H)


# ----------------------------------------------------------------- locality


def test_single_parity_locality_is_k():
    code = single_parity(4)
    for i in range(code.n):
        assert coordinate_locality(code, i).locality == 4
    assert all_symbol_profile(code) == AllSymbolLocalityProfile([0, 0, 0, 5])
    assert info_profile(code) == InfoLocalityProfile([0, 0, 0, 4])


def test_repetition_locality_is_one():
    code = repetition(3)
    assert [coordinate_locality(code, i).locality for i in range(3)] == [1, 1, 1]
    assert all_symbol_profile(code) == AllSymbolLocalityProfile([3])
    assert info_profile(code) == InfoLocalityProfile([1])


def test_unrecoverable_coordinate():
    code = LinearCode(GF2, ((1, 0), (0, 1), (0, 1)))
    assert min_distance(code) == 1
    with pytest.raises(UnrecoverableCoordinate):
        coordinate_locality(code, 0)
    with pytest.raises(UnrecoverableCoordinate):
        all_symbol_profile(code)


def test_locality_methods_agree():
    """Dual-codeword enumeration and subset search give identical witnesses."""
    for code in planted_codes(30, seed=11, qs=(2, 4)):
        by_dual = _localities_by_dual(code)
        for i in range(code.n):
            assert by_dual[i] == _locality_by_subsets(code, i)


def test_witness_group_repairs_symbol():
    for code in planted_codes(20, seed=13):
        for i in range(code.n):
            loc = coordinate_locality(code, i)
            assert len(loc.repair_group) == loc.locality
            assert i not in loc.repair_group
            cols = [code.columns[j] for j in loc.repair_group]
            assert _linalg.rank(code.field, cols + [code.columns[i]]) == _linalg.rank(code.field, cols)


def test_locality_at_most_k_when_distance_above_two():
    for code in planted_codes(40, seed=17):
        if min_distance(code) > 2:
            assert all(coordinate_locality(code, i).locality <= code.k for i in range(code.n))


def test_profiles_sum_to_n_and_k():
    for code in planted_codes(40, seed=19):
        assert all_symbol_profile(code).total == code.n
        assert info_profile(code).total == code.k
        assert info_profile(code).counts[-1] >= 1


# ----------------------------------------------------------------- decoding


def test_decode_with_no_erasures():
    code = systematic_mds(3, 3, 8)
    msg = [5, 0, 7]
    assert erasure_decode(code, encode(code, msg), ErasurePattern([], code.n)) == msg


@pytest.mark.parametrize("k,d,q", [(3, 3, 8), (2, 4, 5), (4, 2, 5)])
def test_mds_decodes_every_d_minus_1_pattern(k, d, q):
    code = systematic_mds(k, d, q)
    rng = random.Random(k * d)
    msg = [rng.randrange(q) for _ in range(k)]
    cw = encode(code, msg)
    for e in range(d):
        for E in itertools.combinations(range(code.n), e):
            rec = [None if i in E else x for i, x in enumerate(cw)]
            assert erasure_decode(code, rec, ErasurePattern(E, code.n)) == msg


def test_mds_fails_on_some_d_pattern():
    code = systematic_mds(3, 3, 8)
    cw = encode(code, [1, 2, 3])
    failures = [
        E
        for E in itertools.combinations(range(code.n), 3)
        if erasure_decode(code, [None if i in E else x for i, x in enumerate(cw)], ErasurePattern(E, code.n))
        is None
    ]
    assert failures


def test_decoding_succeeds_below_distance_on_random_codes():
    rng = random.Random(23)
    for code in planted_codes(15, seed=29):
        if code.n > 16:
            continue
        d = min_distance(code)
        msg = [rng.randrange(code.field.order) for _ in range(code.k)]
        cw = encode(code, msg)
        for E in itertools.combinations(range(code.n), d - 1):
            rec = [None if i in E else x for i, x in enumerate(cw)]
            assert erasure_decode(code, rec, ErasurePattern(E, code.n)) == msg


def test_erasure_pattern_validation():
    with pytest.raises(CodeError):
        ErasurePattern([1, 1], 4)
    with pytest.raises(CodeError):
        ErasurePattern([4], 4)


# --------------------------------------------------------------- local repair


def test_local_repair_repetition():
    code = repetition(4)
    assert local_repair(code, [1, 1, 1, 1], 2) == 1
    assert len(coordinate_locality(code, 2).repair_group) == 1


def test_local_repair_pyramid_locality_two():
    pc = pyramid_unequal([0, 4, 3, 4], 2, 16)
    code = pc.code
    rng = random.Random(31)
    targets = [i for i in range(code.n) if coordinate_locality(code, i).locality == 2]
    assert targets
    for _ in range(100):
        cw = encode(code, [rng.randrange(16) for _ in range(code.k)])
        for i in targets:
            assert local_repair(code, cw, i) == cw[i]


def test_encoded_pyramid_satisfies_local_parities():
    pc = pyramid_unequal([0, 4, 3, 4], 2, 16)
    code = pc.code
    rng = random.Random(37)
    p0 = systematic_mds(code.k, 2, 16).columns[code.k]
    F = code.field
    for _ in range(50):
        msg = [rng.randrange(16) for _ in range(code.k)]
        cw = encode(code, msg)
        for g in pc.groups:
            expect = 0
            for i in g.info_coordinates:
                expect = F.add(expect, F.mul(p0[i], cw[i]))
            assert cw[g.coordinate] == expect
