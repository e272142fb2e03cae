"""Exact coefficient arithmetic: rationals, integers, prime fields, and
univariate polynomials in the loop parameter.

Every ring is a descriptor object exposing a uniform protocol (zero/one,
add/neg/sub/mul, exact division where possible, integer injection, string
round-trip) so the linear-algebra layer can stay generic over the
coefficient domain.  All arithmetic is exact; nothing here ever touches
floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction

VARIABLE = "d"


class RingError(ValueError):
    """Raised for invalid ring operations or malformed coefficient strings."""


class Poly:
    """Univariate polynomial over the rationals in the variable ``d``.

    Coefficients are stored densely, lowest degree first, with no trailing
    zeros; the zero polynomial has an empty coefficient tuple.  Instances
    are immutable value objects.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, value):
        return cls((Fraction(value),))

    @classmethod
    def monomial(cls, power, coeff=1):
        if power < 0:
            raise RingError("monomial power must be nonnegative")
        return cls((0,) * power + (Fraction(coeff),))

    @classmethod
    def variable(cls):
        return cls.monomial(1)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise RingError("polynomial powers must be nonnegative integers")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other):
        """Long division: returns (quotient, remainder) with deg r < deg other."""
        if not isinstance(other, Poly):
            raise RingError("can only divide by another polynomial")
        if other.is_zero():
            raise RingError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = div[-1]
        for shift in range(dq, -1, -1):
            c = rem[shift + len(div) - 1] / lead
            quot[shift] = c
            if c:
                for i, d in enumerate(div):
                    rem[shift + i] -= c * d
        return Poly(quot), Poly(rem)

    def evaluate(self, value):
        value = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                var = VARIABLE if p == 1 else "%s^%d" % (VARIABLE, p)
                body = var if mag == 1 else "%s*%s" % (mag, var)
            sign = "-" if c < 0 else ("" if not parts else "+")
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return "Poly(%s)" % self


_TERM_RE = re.compile(
    r"^(?:(?P<coeff>\d+(?:/\d+)?)(?:\*(?P<var1>%(v)s)(?:\^(?P<pow1>\d+))?)?"
    r"|(?P<var2>%(v)s)(?:\^(?P<pow2>\d+))?)$" % {"v": VARIABLE}
)


def parse_poly(text):
    """Parse the exact string format produced by ``str(Poly)``.

    Accepts e.g. ``"2*d^2-1"``, ``"d"``, ``"-3/4"``, ``"d^2+5*d+6"``.
    """
    s = text.replace(" ", "")
    if not s:
        raise RingError("empty polynomial string")
    # Every sign beyond position 0 starts a new term (coefficients and
    # exponents are unsigned inside a term).
    terms = []
    start = 0
    for i in range(1, len(s)):
        if s[i] in "+-":
            terms.append(s[start:i])
            start = i
    terms.append(s[start:])
    coeffs = {}
    for term in terms:
        sign = 1
        if term and term[0] == "+":
            term = term[1:]
        elif term and term[0] == "-":
            sign = -1
            term = term[1:]
        m = _TERM_RE.match(term)
        if not m:
            raise RingError("malformed polynomial term %r in %r" % (term, text))
        if m.group("coeff") is not None:
            c = Fraction(m.group("coeff"))
            if m.group("var1"):
                p = int(m.group("pow1")) if m.group("pow1") else 1
            else:
                p = 0
        else:
            c = Fraction(1)
            p = int(m.group("pow2")) if m.group("pow2") else 1
        coeffs[p] = coeffs.get(p, Fraction(0)) + sign * c
    if not coeffs:
        return Poly()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for p, c in coeffs.items():
        out[p] = c
    return Poly(out)


class CoefficientRing:
    """Descriptor protocol shared by all exact coefficient rings.

    Elements are plain Python values (``Fraction``, ``int``, ``Poly``);
    the descriptor supplies the arithmetic so generic code never needs to
    know the concrete element type.
    """

    name = "?"

    def zero(self):
        raise NotImplementedError

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero())

    def exact_div(self, a, b):
        """Divide when the quotient exists in the ring; raise otherwise."""
        raise NotImplementedError

    def power(self, a, n):
        if n < 0:
            raise RingError("negative powers are not supported")
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def fmt(self, a):
        return str(a)

    def parse(self, s):
        raise NotImplementedError

    def is_integral(self, a):
        """Whether the element lies in the image of the integers."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, CoefficientRing) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class Rationals(CoefficientRing):
    name = "Rationals"

    def zero(self):
        return Fraction(0)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        if b == 0:
            raise RingError("division by zero")
        return Fraction(a) / b

    def parse(self, s):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise RingError("malformed rational %r" % (s,)) from exc

    def is_integral(self, a):
        return Fraction(a).denominator == 1


class Integers(CoefficientRing):
    name = "Integers"

    def zero(self):
        return 0

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        if b == 0:
            raise RingError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise RingError("%d is not divisible by %d" % (a, b))
        return q

    def parse(self, s):
        try:
            return int(s.strip())
        except ValueError as exc:
            raise RingError("malformed integer %r" % (s,)) from exc

    def is_integral(self, a):
        return True


def _is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class PrimeField(CoefficientRing):
    """The field with ``p`` elements, represented as integers in [0, p)."""

    _cache = {}

    def __new__(cls, p):
        inst = cls._cache.get(p)
        if inst is None:
            if not _is_prime(p):
                raise RingError("%r is not prime" % (p,))
            inst = super().__new__(cls)
            inst.p = p
            inst.name = "PrimeField(%d)" % p
            cls._cache[p] = inst
        return inst

    def zero(self):
        return 0

    def from_int(self, n):
        return int(n) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise RingError("division by zero in %s" % self.name)
        return pow(a, -1, self.p)

    def exact_div(self, a, b):
        return (a * self.inv(b)) % self.p

    def parse(self, s):
        try:
            return int(s.strip()) % self.p
        except ValueError as exc:
            raise RingError("malformed element %r of %s" % (s, self.name)) from exc

    def is_integral(self, a):
        return True


class PolynomialsInDelta(CoefficientRing):
    """Univariate polynomials over the rationals in the loop parameter ``d``."""

    name = "PolynomialsInDelta"

    def zero(self):
        return Poly()

    def from_int(self, n):
        return Poly.const(n)

    def delta(self):
        return Poly.variable()

    def delta_power(self, n):
        return Poly.monomial(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        q, r = a.divmod(b)
        if not r.is_zero():
            raise RingError("inexact polynomial division: %s by %s" % (a, b))
        return q

    def parse(self, s):
        return parse_poly(s)

    def is_integral(self, a):
        return all(c.denominator == 1 for c in a.coeffs)


QQ = Rationals()
ZZ = Integers()
QQ_DELTA = PolynomialsInDelta()

_FIXED_RINGS = {QQ.name: QQ, ZZ.name: ZZ, QQ_DELTA.name: QQ_DELTA}
_PRIME_FIELD_RE = re.compile(r"^PrimeField\((\d+)\)$")


def ring_from_name(name):
    """Inverse of ``ring.name``, for wire-format round-trips."""
    ring = _FIXED_RINGS.get(name)
    if ring is not None:
        return ring
    m = _PRIME_FIELD_RE.match(name)
    if m:
        return PrimeField(int(m.group(1)))
    raise RingError("unknown ring %r" % (name,))
