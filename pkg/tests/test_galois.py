import itertools
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unequal_lrc.galois import (
    FieldError,
    GaloisField,
    LinearizedPolynomial,
    SingularSystemError,
    eval_linearized,
    field_new,
    field_of_order,
    moore_solve,
)


def _poly_mul(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _factorizable(F, poly):
    """True if poly is a product of two monic factors of positive degree (enumeration)."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for lo in itertools.product(range(F.order), repeat=d):
            for hi in itertools.product(range(F.order), repeat=deg - d):
                if _poly_mul(F, list(lo) + [1], list(hi) + [1]) == list(poly):
                    return True
    return False


def test_prime_fields():
    F = field_new(2, 1, 1)
    assert F.order == 2 and F.mul(1, 1) == 1 and F.add(1, 1) == 0
    F5 = field_new(5, 1, 1)
    assert F5.inv(2) == 3
    assert F5(2).inverse() == F5(3)


def test_rejects_bad_parameters():
    with pytest.raises(FieldError):
        field_new(4, 1, 1)
    with pytest.raises(FieldError):
        field_new(2, 1, 33)
    with pytest.raises(FieldError):
        GaloisField(2, 2, 1, base_modulus=(1, 0, 1))  # x^2 + 1 = (x+1)^2
    with pytest.raises(FieldError):
        field_of_order(6)


def test_gf4_x_times_x():
    F = field_new(2, 2, 1)
    assert F.base_modulus == (1, 1, 1)
    # (x)(x) = x^2 = x + 1 modulo x^2 + x + 1; index of x is 2, of x+1 is 3
    assert F.mul(2, 2) == 3


def _carryless_mod_mul(a, b, modulus):
    prod = 0
    while b:
        if b & 1:
            prod ^= a
        a <<= 1
        b >>= 1
    db = modulus.bit_length()
    while prod.bit_length() >= db:
        prod ^= modulus << (prod.bit_length() - db)
    return prod


@pytest.mark.parametrize("w", [2, 3, 4, 8])
def test_binary_field_matches_carryless_oracle(w):
    F = field_new(2, w, 1)
    modulus = sum(c << i for i, c in enumerate(F.base_modulus))
    rng = random.Random(w)
    for _ in range(500):
        a, b = rng.randrange(F.order), rng.randrange(F.order)
        assert F.mul(a, b) == _carryless_mod_mul(a, b, modulus)


@pytest.mark.parametrize("p,w,m", [(2, 2, 4), (2, 2, 3), (2, 3, 2), (3, 2, 2), (2, 4, 1), (5, 2, 1)])
def test_moduli_irreducible_and_smallest(p, w, m):
    F = field_new(p, w, m)
    prime = field_new(p)
    assert not _factorizable(prime, F.base_modulus) or w == 1
    if m > 1:
        assert not _factorizable(F.subfield, F.ext_modulus)
    # every lexicographically earlier monic candidate of the same degree factors
    coef_field, mod, deg = (F.subfield, F.ext_modulus, m) if m > 1 else (prime, F.base_modulus, w)
    if deg > 1:
        target = tuple(mod[:-1])
        for cand in itertools.product(range(coef_field.order), repeat=deg):
            if cand == target:
                break
            assert _factorizable(coef_field, list(cand) + [1])


def test_gf256_tower_modulus(gf256_tower):
    F = gf256_tower
    assert (F.p, F.w, F.m, F.order) == (2, 2, 4, 256)
    assert F.base_modulus == (1, 1, 1)
    assert len(F.ext_modulus) == 5 and F.ext_modulus[-1] == 1


def test_field_json_round_trip(gf256_tower):
    d = json.loads(gf256_tower.to_json())
    assert d == {
        "p": 2,
        "w": 2,
        "m": 4,
        "base_modulus": [1, 1, 1],
        "ext_modulus": list(gf256_tower.ext_modulus),
    }
    assert GaloisField.from_json(gf256_tower.to_json()) == gf256_tower


def test_element_errors(gf4):
    with pytest.raises(ZeroDivisionError):
        gf4(0).inverse()
    with pytest.raises(FieldError):
        gf4(1) + field_new(2, 3, 1)(1)
    with pytest.raises(FieldError):
        gf4(4)


def test_negation_and_subtraction():
    for F in (field_new(5), field_new(3, 2, 1), field_new(3, 1, 2), field_new(2, 2, 2)):
        for a in F.elements():
            assert F.add(a, F.neg(a)) == 0
            assert F.sub(a, a) == 0


def test_table_and_polynomial_paths_agree(gf256_tower):
    F = gf256_tower
    for a in range(F.order):
        for b in range(0, F.order, 7):
            assert F.mul(a, b) == (F._mul_slow(a, b) if a and b else 0)


def test_large_field_without_tables():
    F = field_new(2, 1, 17)
    assert F._log is None
    rng = random.Random(0)
    for _ in range(200):
        a, b, c = (rng.randrange(1, F.order) for _ in range(3))
        assert F.mul(a, F.inv(a)) == 1
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@settings(max_examples=200, deadline=None)
@given(a=st.integers(0, 80), b=st.integers(0, 80), c=st.integers(0, 80))
def test_gf81_axioms(a, b, c):
    F = field_new(3, 2, 2)
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1


# ------------------------------------------------------------------ frobenius


def test_frobenius_examples(gf256_tower):
    F = gf256_tower
    for a in F.elements():
        assert F.frobenius(a, 0) == a
        assert F.frobenius(a, F.m) == a
    for c in range(F.q):
        assert F.frobenius(c, 1) == c


def test_frobenius_is_automorphism(gf256_tower):
    F = gf256_tower
    rng = random.Random(3)
    for _ in range(500):
        a, b = rng.randrange(F.order), rng.randrange(F.order)
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(a) == F.pow(a, F.q)


# ------------------------------------------------------------ vector space


def test_to_vector_examples(gf256_tower):
    F = gf256_tower
    assert F.to_vector(0) == [0] * F.m
    for i in range(F.m):
        e = [0] * F.m
        e[i] = 1
        assert F.to_vector(F.basis_element(i)) == e
    for a in F.elements():
        assert F.from_vector(F.to_vector(a)) == a


def test_to_vector_is_subfield_linear(gf256_tower):
    F = gf256_tower
    K = F.subfield
    rng = random.Random(5)
    for _ in range(500):
        a, b = rng.randrange(F.order), rng.randrange(F.order)
        c = rng.randrange(F.q)
        lhs = F.to_vector(F.add(a, F.mul(c, b)))
        rhs = [K.add(x, K.mul(c, y)) for x, y in zip(F.to_vector(a), F.to_vector(b))]
        assert lhs == rhs


# -------------------------------------------------------- linearized polys


def test_linearized_identity_and_zero(gf256_tower):
    F = gf256_tower
    ident = LinearizedPolynomial(F, (1, 0, 0))
    for x in range(0, F.order, 5):
        assert eval_linearized(ident, x) == x
    f = LinearizedPolynomial(F, (17, 200, 3))
    assert f(0) == 0
    assert f.q_degree == 2


def test_linearized_direct_evaluation(gf256_tower):
    # sum a_i x^(q^i) using plain powers as the reference
    F = gf256_tower
    f = LinearizedPolynomial(F, (7, 0, 91, 250))
    for x in range(F.order):
        expected = 0
        for i, a in enumerate(f.coefficients):
            expected = F.add(expected, F.mul(a, F.pow(x, F.q**i)))
        assert f(x) == expected


def test_moore_solve_single_point(gf256_tower):
    F = gf256_tower
    g, v = 37, 201
    f = moore_solve(F, [g], [v])
    assert f.coefficients == (F.mul(v, F.inv(g)),)


def test_moore_solve_rejects_dependent_points(gf256_tower):
    F = gf256_tower
    g = 77
    with pytest.raises(SingularSystemError):
        moore_solve(F, [g, F.mul(3, g)], [1, 2])
    with pytest.raises(SingularSystemError):
        moore_solve(F, [0], [5])


def test_moore_solve_round_trip_random_points(gf256_tower):
    F = gf256_tower
    rng = random.Random(11)
    for K in range(1, F.m + 1):
        for _ in range(20):
            pts = [rng.randrange(1, F.order) for _ in range(K)]
            if not F.independent_over_subfield(pts):
                continue
            f = LinearizedPolynomial(F, tuple(rng.randrange(F.order) for _ in range(K)))
            assert moore_solve(F, pts, [f(x) for x in pts]) == f


@pytest.mark.parametrize("p,w,m", [(2, 1, 20), (2, 20, 1), (2, 1, 8)])
def test_binary_bit_packed_path_matches_generic(p, w, m):
    import copy

    F = field_new(p, w, m)
    generic = copy.copy(F)
    generic._binmod = None
    rng = random.Random(w * m)
    for _ in range(200):
        a, b = rng.randrange(1, F.order), rng.randrange(1, F.order)
        assert F._mul_slow(a, b) == generic._mul_slow(a, b)
        assert F.inv(a) == generic._pow_slow(a, F.order - 2)
