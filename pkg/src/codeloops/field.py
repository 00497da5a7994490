"""Exact arithmetic in GF(p^e) for small p and e.

Elements are coefficient vectors of length e over GF(p): the element
c0 + c1*t + ... + c_{e-1}*t^{e-1} is stored as the tuple (c0, ..., c_{e-1}),
every coefficient already reduced mod p.  Arithmetic is done modulo a fixed
monic irreducible polynomial of degree e, chosen deterministically as the
lexicographically smallest one (coefficients compared low degree first), so
two fields built from the same (p, e) are interchangeable.  For e = 1 the
modulus is the identity polynomial t and arithmetic is plain mod p.

Every element also has an integer encoding enc = sum(c_i * p^i), a bijection
onto [0, q).  The CLI prints and parses elements as these encodings.

Fields are tiny by design (q <= 2^16); clarity beats speed throughout.
"""

from __future__ import annotations

from typing import Iterator

MAX_Q = 1 << 16


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the supported range."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- polynomial helpers over GF(p), coefficients as tuples, low degree first --

def _poly_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m, over GF(p)."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _poly_trim([c % p for c in a[:dm]])


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _is_irreducible(m, p):
    """Trial division by all monic polynomials of degree <= deg(m)/2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for k in range(p ** d):
            div = []
            kk = k
            for _ in range(d):
                div.append(kk % p)
                kk //= p
            div.append(1)
            if not _poly_mod(m, tuple(div), p):
                return False
    return True


def _find_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over GF(p).

    Candidates are ordered by their low-to-high coefficient tuples, so the
    result is reproducible without external tables.
    """
    if e == 1:
        return (0, 1)
    # counters[i] is the coefficient of t^i; odometer in lex order
    counters = [0] * e
    while True:
        m = tuple(counters) + (1,)
        if _is_irreducible(m, p):
            return m
        for i in range(e - 1, -1, -1):
            counters[i] += 1
            if counters[i] < p:
                break
            counters[i] = 0
        else:
            raise AssertionError(f"no irreducible of degree {e} over GF({p})")


class Field:
    """The finite field GF(p^e).

    Immutable after construction; all operations on its elements are pure.
    """

    __slots__ = ("p", "e", "q", "modulus")

    def __init__(self, p: int, e: int = 1):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"e must be a positive integer, got {e}")
        q = p ** e
        if q > MAX_Q:
            raise ValueError(f"field size {p}^{e} exceeds the cap {MAX_Q}")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = _find_modulus(p, e)

    @classmethod
    def from_spec(cls, spec: str) -> "Field":
        """Parse a field spec string like "2", "3^2" or "2^4"."""
        s = spec.strip()
        if "^" in s:
            ps, _, es = s.partition("^")
        else:
            ps, es = s, "1"
        try:
            p, e = int(ps), int(es)
        except ValueError:
            raise ValueError(f"malformed field spec {spec!r}, expected 'p' or 'p^e'") from None
        return cls(p, e)

    def spec_string(self) -> str:
        return str(self.p) if self.e == 1 else f"{self.p}^{self.e}"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"Field({self.p}, {self.e})"

    def element(self, enc: int) -> "FieldElement":
        """Element with the given integer encoding in [0, q)."""
        if not 0 <= enc < self.q:
            raise ValueError(f"encoding {enc} out of range [0, {self.q})")
        coeffs = []
        k = enc
        for _ in range(self.e):
            coeffs.append(k % self.p)
            k //= self.p
        return FieldElement(self, tuple(coeffs))

    def from_coeffs(self, coeffs) -> "FieldElement":
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return FieldElement(self, tuple(c % self.p for c in coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.e)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.e - 1))

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements, in encoding order."""
        for k in range(self.q):
            yield self.element(k)


class FieldElement:
    """An element of a Field, canonical coefficient vector representation."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def enc(self) -> int:
        """Integer encoding sum(c_i * p^i), a bijection onto [0, q)."""
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.field.p + c
        return k

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_ctx(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._check_ctx(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check_ctx(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check_ctx(other)
        f = self.field
        if f.e == 1:
            return FieldElement(f, ((self.coeffs[0] * other.coeffs[0]) % f.p,))
        prod = _poly_mul(self.coeffs, other.coeffs, f.p)
        red = _poly_mod(prod, f.modulus, f.p)
        return FieldElement(f, tuple(red) + (0,) * (f.e - len(red)))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {n}")
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self) -> "FieldElement":
        """Multiplicative inverse, via a^(q-2); zero has none."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero field element")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        self._check_ctx(other)
        return self * other.inv()

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"GF{self.field.q}({self.enc})"
