"""Finite fields GF(p^w) and their extensions GF(q^m), q = p^w.

Elements are canonical integer indices.  An element of GF(q^m) is the
polynomial sum_i c_i y^i with c_i in GF(q); its index is sum_i c_i q^i,
where each c_i is itself the index of a GF(q) element, i.e. the base-p
digits of a polynomial over GF(p).  Consequently the index of any element
is just its coordinate vector over GF(p) read as a base-p number, and
addition is digit-wise modulo p (XOR when p = 2).

Moduli are the lexicographically smallest monic irreducible polynomials,
coefficients compared low degree first, so ``field_new`` is deterministic.
Fields with at most 2**16 elements use log/antilog tables built from the
smallest primitive element; larger fields fall back to polynomial
arithmetic.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from unequal_lrc import _linalg

TABLE_LIMIT = 1 << 16
SIZE_LIMIT = 1 << 32


class FieldError(ValueError):
    """Invalid field parameters or an undefined field operation."""


class SingularSystemError(FieldError):
    """Moore system with GF(q)-dependent evaluation points."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over a coefficient field, coefficient lists low degree first ---


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(F: "GaloisField", a: Sequence[int], b: Sequence[int]) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = F.inv(b[-1])
    db = len(b) - 1
    while len(a) - 1 >= db:
        coef = F.mul(a[-1], inv_lead)
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(coef, bi))
        _poly_trim(a)
    return a


def _monic_polys(F: "GaloisField", degree: int, start: int = 0) -> Iterable[list[int]]:
    """Monic polynomials of a given degree, lexicographic, low coefficient first."""
    c = F.order
    for idx in range(start, c**degree):
        coeffs = [0] * degree
        for i in range(degree - 1, -1, -1):
            coeffs[i] = idx % c
            idx //= c
        yield coeffs + [1]


def is_irreducible(F: "GaloisField", poly: Sequence[int]) -> bool:
    """Irreducibility of ``poly`` over the field ``F``.

    Degree <= 3: root check.  Otherwise trial division by every monic
    polynomial of degree <= deg/2.
    """
    poly = _poly_trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if F.order == 2:
        return _is_irreducible_gf2(sum(1 << i for i, c in enumerate(poly) if c))
    if deg <= 3:
        for x in range(F.order):
            acc = 0
            for coef in reversed(poly):
                acc = F.add(F.mul(acc, x), coef)
            if acc == 0:
                return False
        return True
    for d in range(1, deg // 2 + 1):
        for divisor in _monic_polys(F, d):
            if not _poly_mod(F, poly, divisor):
                return False
    return True


def _is_irreducible_gf2(poly: int) -> bool:
    """Same test with polynomials over GF(2) packed into integers."""
    deg = poly.bit_length() - 1
    if deg <= 3:
        return all(_gf2_mod(poly, 0b10 | r) for r in (0, 1))
    for d in range(1, deg // 2 + 1):
        for divisor in range(1 << d, 1 << (d + 1)):
            if not _gf2_mod(poly, divisor):
                return False
    return True


def _gf2_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def smallest_irreducible(F: "GaloisField", degree: int) -> tuple[int, ...]:
    # constant term 0 means divisible by x; those lead the order, skip them
    start = F.order ** (degree - 1) if degree > 1 else 0
    for cand in _monic_polys(F, degree, start):
        if is_irreducible(F, cand):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {degree}")  # unreachable


def _clmul_mod(a: int, b: int, modulus: int, degree: int) -> int:
    """Carry-less product of two GF(2) polynomials, reduced modulo ``modulus``."""
    prod = 0
    while b:
        if b & 1:
            prod ^= a
        a <<= 1
        b >>= 1
    top = prod.bit_length() - 1
    while top >= degree:
        prod ^= modulus << (top - degree)
        top = prod.bit_length() - 1
    return prod


def _binary_inverse(a: int, modulus: int) -> int:
    """Inverse of a nonzero GF(2) polynomial modulo an irreducible one (extended Euclid)."""
    r0, r1 = modulus, a
    s0, s1 = 0, 1
    while r1 != 1:
        shift = r0.bit_length() - r1.bit_length()
        if shift < 0:
            r0, r1, s0, s1 = r1, r0, s1, s0
            continue
        r0 ^= r1 << shift
        s0 ^= s1 << shift
        if r0.bit_length() < r1.bit_length():
            r0, r1, s0, s1 = r1, r0, s1, s0
    return s1


class GaloisField:
    """GF(q^m) with q = p^w, built as a tower over GF(p).

    Holds the arithmetic on raw integer indices.  ``field(v)`` wraps an index
    as a :class:`FieldElement` for operator-style use.
    """

    def __init__(
        self,
        p: int,
        w: int = 1,
        m: int = 1,
        base_modulus: Sequence[int] | None = None,
        ext_modulus: Sequence[int] | None = None,
    ) -> None:
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if w < 1 or m < 1:
            raise FieldError("degrees w and m must be >= 1")
        if p ** (w * m) > SIZE_LIMIT:
            raise FieldError(f"field size {p}^{w * m} exceeds 2^32")
        self.p = p
        self.w = w
        self.m = m
        self.q = p**w
        self.order = self.q**m
        self.characteristic = p

        self._prime = self if (w == 1 and m == 1) else GaloisField(p)
        if w == 1:
            base_modulus = (0, 1) if base_modulus is None else tuple(base_modulus)
            if tuple(base_modulus) != (0, 1):
                raise FieldError("base modulus of a prime base field must be x")
        elif base_modulus is None:
            base_modulus = smallest_irreducible(self._prime, w)
        else:
            base_modulus = tuple(base_modulus)
            self._check_modulus(self._prime, base_modulus, w, "base")
        self.base_modulus: tuple[int, ...] = tuple(base_modulus)

        if m == 1:
            self.subfield = self
        else:
            self.subfield = GaloisField(p, w, 1, self.base_modulus)
        if m == 1:
            ext_modulus = (0, 1) if ext_modulus is None else tuple(ext_modulus)
            if tuple(ext_modulus) != (0, 1):
                raise FieldError("extension modulus of a degree-1 extension must be y")
        elif ext_modulus is None:
            ext_modulus = smallest_irreducible(self.subfield, m)
        else:
            ext_modulus = tuple(ext_modulus)
            self._check_modulus(self.subfield, ext_modulus, m, "extension")
        self.ext_modulus: tuple[int, ...] = tuple(ext_modulus)

        # one tower step: coefficient field C, defining modulus of degree e
        if m > 1:
            self._coef, self._mod, self._e = self.subfield, self.ext_modulus, m
        elif w > 1:
            self._coef, self._mod, self._e = self._prime, self.base_modulus, w
        else:
            self._coef, self._mod, self._e = None, None, 1
        self._digits = w * m
        # single-step binary fields: an index is the bit vector of its polynomial
        self._binmod: int | None = None
        if self._coef is not None and self._coef.order == 2:
            self._binmod = sum(c << i for i, c in enumerate(self._mod))

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.primitive_element: int | None = None
        if 2 < self.order <= TABLE_LIMIT and self._coef is not None:
            self._build_tables()

    @staticmethod
    def _check_modulus(F: "GaloisField", mod: tuple[int, ...], degree: int, what: str) -> None:
        if len(mod) != degree + 1 or mod[-1] != 1:
            raise FieldError(f"{what} modulus must be monic of degree {degree}")
        if any(not 0 <= c < F.order for c in mod):
            raise FieldError(f"{what} modulus has coefficients outside GF({F.order})")
        if not is_irreducible(F, mod):
            raise FieldError(f"{what} modulus {list(mod)} is reducible")

    # ----------------------------------------------------------------- tables

    def _build_tables(self) -> None:
        n = self.order - 1
        factors = _prime_factors(n)
        for g in range(2, self.order):
            if all(self._pow_slow(g, n // f) != 1 for f in factors):
                break
        self.primitive_element = g
        exp = [0] * (2 * n)
        log = [0] * self.order
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = self._mul_slow(v, g)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log

    def _split(self, a: int) -> list[int]:
        c = self._coef.order
        out = []
        for _ in range(self._e):
            out.append(a % c)
            a //= c
        return out

    def _join(self, coeffs: Sequence[int]) -> int:
        c = self._coef.order
        v = 0
        for x in reversed(coeffs):
            v = v * c + x
        return v

    def _mul_slow(self, a: int, b: int) -> int:
        if self._coef is None:
            return a * b % self.p
        if self._binmod is not None:
            return _clmul_mod(a, b, self._binmod, self._e)
        C = self._coef
        ac, bc = self._split(a), self._split(b)
        prod = [0] * (2 * self._e - 1)
        for i, x in enumerate(ac):
            if x == 0:
                continue
            for j, y in enumerate(bc):
                if y:
                    prod[i + j] = C.add(prod[i + j], C.mul(x, y))
        rem = _poly_mod(C, prod, self._mod)
        return self._join(rem + [0] * (self._e - len(rem)))

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    # ------------------------------------------------------------- arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._digits == 1:
            return (a + b) % self.p
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self._digits == 1:
            return (-a) % self.p
        p = self.p
        out, place = 0, 1
        while a:
            out += ((-(a % p)) % p) * place
            a //= p
            place *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self._log is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        if self._binmod is not None:
            return _binary_inverse(a, self._binmod)
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        return self._pow_slow(a, e % (self.order - 1))

    def frobenius(self, a: int, i: int = 1) -> int:
        """a ** (q ** i); the identity when m divides i."""
        if i < 0:
            raise FieldError("frobenius power must be non-negative")
        i %= self.m
        if a == 0 or i == 0:
            return a
        return self.pow(a, pow(self.q, i, self.order - 1))

    # ----------------------------------------------------- vector space view

    def to_vector(self, a: int) -> list[int]:
        """Coordinates of ``a`` over GF(q) in the basis 1, y, ..., y^(m-1)."""
        self._check(a)
        out = []
        for _ in range(self.m):
            out.append(a % self.q)
            a //= self.q
        return out

    def from_vector(self, v: Sequence[int]) -> int:
        if len(v) != self.m:
            raise FieldError(f"expected {self.m} coordinates, got {len(v)}")
        out = 0
        for x in reversed(v):
            if not 0 <= x < self.q:
                raise FieldError(f"coordinate {x} outside GF({self.q})")
            out = out * self.q + x
        return out

    def basis_element(self, i: int) -> int:
        """y^i, the i-th polynomial basis element over GF(q)."""
        if not 0 <= i < self.m:
            raise FieldError(f"basis index {i} outside [0, {self.m})")
        return self.q**i

    def in_subfield(self, a: int) -> bool:
        return 0 <= a < self.q

    def subfield_rank(self, elements: Sequence[int]) -> int:
        """Dimension of the GF(q)-span of ``elements``."""
        return _linalg.rank(self.subfield, [self.to_vector(a) for a in elements])

    def independent_over_subfield(self, elements: Sequence[int]) -> bool:
        return self.subfield_rank(elements) == len(elements)

    # ------------------------------------------------------------- utilities

    def _check(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise FieldError(f"{a} is not an element of GF({self.order})")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def elements(self) -> range:
        return range(self.order)

    @property
    def key(self) -> tuple:
        return (self.p, self.w, self.m, self.base_modulus, self.ext_modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GaloisField) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.q}^{self.m})"

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "w": self.w,
            "m": self.m,
            "base_modulus": list(self.base_modulus),
            "ext_modulus": list(self.ext_modulus),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "GaloisField":
        field = field_new(d["p"], d.get("w", 1), d.get("m", 1))
        base = tuple(d.get("base_modulus") or field.base_modulus)
        ext = tuple(d.get("ext_modulus") or field.ext_modulus)
        if (base, ext) == (field.base_modulus, field.ext_modulus):
            return field
        return cls(d["p"], d.get("w", 1), d.get("m", 1), base, ext)

    @classmethod
    def from_json(cls, s: str) -> "GaloisField":
        return cls.from_dict(json.loads(s))


@functools.lru_cache(maxsize=None)
def field_new(p: int, w: int = 1, m: int = 1) -> GaloisField:
    """Deterministic GF((p^w)^m) with lexicographically smallest moduli."""
    return GaloisField(p, w, m)


def field_of_order(q: int, m: int = 1) -> GaloisField:
    """GF(q^m) for a prime power q."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise FieldError(f"{q} is not a prime power")
    w, rest = 0, q
    while rest % p == 0:
        rest //= p
        w += 1
    if rest != 1 or not is_prime(p):
        raise FieldError(f"{q} is not a prime power")
    return field_new(p, w, m)


@dataclass(frozen=True, slots=True)
class FieldElement:
    value: int
    field: GaloisField

    def __post_init__(self) -> None:
        self.field._check(self.value)

    def _other(self, other: object) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed-field operands: {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            self.field._check(other)
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.add(self.value, b), self.field)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.sub(self.value, b), self.field)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field.neg(self.value), self.field)

    def __mul__(self, other: object) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.mul(self.value, b), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "FieldElement":
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.div(self.value, b), self.field)

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field.pow(self.value, e), self.field)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def frobenius(self, i: int = 1) -> "FieldElement":
        return FieldElement(self.field.frobenius(self.value, i), self.field)

    def to_vector(self) -> list[int]:
        return self.field.to_vector(self.value)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


# ------------------------------------------------------ linearized polynomials


@dataclass(frozen=True)
class LinearizedPolynomial:
    """f(x) = sum_i coefficients[i] * x^(q^i) over GF(q^m)."""

    field: GaloisField
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        for a in self.coefficients:
            self.field._check(a)

    @property
    def q_degree(self) -> int:
        """Largest i with a nonzero coefficient, -1 for the zero polynomial."""
        for i in range(len(self.coefficients) - 1, -1, -1):
            if self.coefficients[i]:
                return i
        return -1

    def __call__(self, x: int) -> int:
        return eval_linearized(self, x)


def eval_linearized(f: LinearizedPolynomial, x: int) -> int:
    F = f.field
    acc = 0
    xq = x
    for a in f.coefficients:
        if a:
            acc = F.add(acc, F.mul(a, xq))
        xq = F.frobenius(xq, 1)
    return acc


def moore_matrix(field: GaloisField, points: Sequence[int], K: int) -> list[list[int]]:
    """Rows points[i]^(q^j), j = 0..K-1."""
    rows = []
    for g in points:
        row = []
        v = g
        for _ in range(K):
            row.append(v)
            v = field.frobenius(v, 1)
        rows.append(row)
    return rows


def moore_solve(field: GaloisField, points: Sequence[int], values: Sequence[int]) -> LinearizedPolynomial:
    """Unique linearized f of q-degree < K with f(points[i]) = values[i]."""
    K = len(points)
    if len(values) != K:
        raise FieldError("points and values must have equal length")
    if K > field.m or not field.independent_over_subfield(points):
        raise SingularSystemError("evaluation points are linearly dependent over GF(q)")
    coeffs = _linalg.solve(field, moore_matrix(field, points, K), list(values))
    if coeffs is None:  # pragma: no cover - excluded by the independence check
        raise SingularSystemError("singular Moore system")
    return LinearizedPolynomial(field, tuple(coeffs))
