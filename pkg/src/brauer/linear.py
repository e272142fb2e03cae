"""Linear combinations of diagrams over exact coefficient rings.

A :class:`Morphism` is a finite linear combination of same-valency diagrams
together with a coefficient ring and a fixed handling of the loop parameter
delta: either symbolic (an indeterminate, coefficients live in the
polynomial ring) or specialized to a ring element.  Composition multiplies
each diagram pair's coefficient by delta raised to the number of closed
loops produced.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .diagram import (
    Diagram,
    ast,
    compose,
    diagram_from_json,
    diagram_to_json,
    identity,
    star,
    tensor,
)
from .rings import (
    QQ,
    QQ_DELTA,
    CoefficientRing,
    Poly,
    PolynomialsInDelta,
    PrimeField,
    Rationals,
    RingError,
    ring_from_name,
)


class MorphismError(ValueError):
    """Raised for invalid morphism constructions or incompatible operands."""


def _coerce_coeff(ring, value):
    if isinstance(value, bool):
        raise MorphismError("boolean is not a coefficient")
    if isinstance(value, int):
        return ring.from_int(value)
    if isinstance(ring, Rationals) and isinstance(value, Fraction):
        return value
    if isinstance(ring, PolynomialsInDelta):
        if isinstance(value, Fraction):
            return Poly.const(value)
        if isinstance(value, Poly):
            return value
    if isinstance(ring, PrimeField) and isinstance(value, int):
        return value % ring.p
    raise MorphismError("coefficient %r does not belong to %s" % (value, ring))


def _coerce_delta(ring, delta):
    if delta is None:
        if not isinstance(ring, PolynomialsInDelta):
            raise MorphismError(
                "symbolic delta requires the polynomial coefficient ring"
            )
        return None
    return _coerce_coeff(ring, delta)


class Morphism:
    """Immutable linear combination of (k, l) diagrams."""

    __slots__ = ("k", "l", "ring", "delta", "terms")

    def __init__(self, k, l, ring, delta, terms):
        if not isinstance(ring, CoefficientRing):
            raise MorphismError("ring must be a CoefficientRing descriptor")
        self.k = int(k)
        self.l = int(l)
        self.ring = ring
        self.delta = _coerce_delta(ring, delta)
        cleaned = {}
        for diag, coeff in terms.items():
            if not isinstance(diag, Diagram):
                raise MorphismError("term keys must be diagrams")
            if (diag.k, diag.l) != (self.k, self.l):
                raise MorphismError(
                    "diagram of valency (%d, %d) in a (%d, %d) morphism"
                    % (diag.k, diag.l, self.k, self.l)
                )
            c = _coerce_coeff(ring, coeff)
            if not ring.is_zero(c):
                cleaned[diag] = c
        self.terms = cleaned

    def context(self):
        return (self.ring, self.delta)

    def coeff(self, diagram):
        return self.terms.get(diagram, self.ring.zero())

    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def term_count(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            (self.k, self.l) == (other.k, other.l)
            and self.ring == other.ring
            and self._delta_eq(other)
            and self.terms == other.terms
        )

    def _delta_eq(self, other):
        if self.delta is None or other.delta is None:
            return self.delta is None and other.delta is None
        return self.ring.eq(self.delta, other.delta)

    def __hash__(self):
        raise TypeError("morphisms are not hashable")

    def __repr__(self):
        if self.is_zero():
            body = "0"
        else:
            bits = []
            for diag in self.support():
                bits.append("%s*%r" % (self.ring.fmt(self.terms[diag]), diag))
            body = " + ".join(bits)
        return "Morphism(%d, %d; %s)" % (self.k, self.l, body)


def _require_compatible(x, y):
    if x.ring != y.ring:
        raise MorphismError("ring mismatch: %s vs %s" % (x.ring, y.ring))
    if not x._delta_eq(y):
        raise MorphismError("delta handling mismatch")


def make_morphism(k, l, terms, ring=QQ_DELTA, delta=None):
    """Build a morphism from a {diagram: coefficient} mapping."""
    return Morphism(k, l, ring, delta, dict(terms))


def zero_morphism(k, l, ring=QQ_DELTA, delta=None):
    return Morphism(k, l, ring, delta, {})


def from_diagram(d, ring=QQ_DELTA, delta=None, coeff=1):
    return Morphism(d.k, d.l, ring, delta, {d: coeff})


def identity_morphism(r, ring=QQ_DELTA, delta=None):
    return from_diagram(identity(r), ring=ring, delta=delta)


def delta_factor(ring, delta, loops):
    """The coefficient contributed by ``loops`` closed loops."""
    if loops == 0:
        return ring.one()
    if delta is None:
        return ring.delta_power(loops)
    return ring.power(delta, loops)


@lru_cache(maxsize=1 << 18)
def _compose_diagrams(d1, d2):
    return compose(d1, d2)


@lru_cache(maxsize=1 << 18)
def _tensor_diagrams(d1, d2):
    return tensor(d1, d2)


def lin_add(x, y):
    if (x.k, x.l) != (y.k, y.l):
        raise MorphismError("valency mismatch in addition")
    _require_compatible(x, y)
    ring = x.ring
    terms = dict(x.terms)
    for diag, c in y.terms.items():
        terms[diag] = ring.add(terms.get(diag, ring.zero()), c)
    return Morphism(x.k, x.l, ring, x.delta, terms)


def lin_scale(c, x):
    ring = x.ring
    c = _coerce_coeff(ring, c)
    terms = {diag: ring.mul(c, v) for diag, v in x.terms.items()}
    return Morphism(x.k, x.l, ring, x.delta, terms)


def lin_sub(x, y):
    return lin_add(x, lin_scale(-1, y))


def lin_compose(x, y):
    """Bilinear extension of diagram composition (x after y)."""
    if x.k != y.l:
        raise MorphismError(
            "cannot compose (%d, %d) after (%d, %d)" % (x.k, x.l, y.k, y.l)
        )
    _require_compatible(x, y)
    ring = x.ring
    terms = {}
    zero = ring.zero()
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            loops, diag = _compose_diagrams(d1, d2)
            c = ring.mul(c1, c2)
            if loops:
                c = ring.mul(c, delta_factor(ring, x.delta, loops))
            terms[diag] = ring.add(terms.get(diag, zero), c)
    return Morphism(y.k, x.l, ring, x.delta, terms)


def lin_tensor(x, y):
    _require_compatible(x, y)
    ring = x.ring
    terms = {}
    zero = ring.zero()
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            diag = _tensor_diagrams(d1, d2)
            c = ring.mul(c1, c2)
            terms[diag] = ring.add(terms.get(diag, zero), c)
    return Morphism(x.k + y.k, x.l + y.l, ring, x.delta, terms)


def lin_star(x):
    """Term-wise horizontal flip; an anti-homomorphism for composition."""
    terms = {star(d): c for d, c in x.terms.items()}
    return Morphism(x.l, x.k, x.ring, x.delta, terms)


def lin_ast(x):
    """Term-wise 180-degree rotation; an anti-homomorphism fixing valency order."""
    terms = {ast(d): c for d, c in x.terms.items()}
    return Morphism(x.l, x.k, x.ring, x.delta, terms)


def lin_power(x, n):
    """n-fold composition power of a square morphism."""
    if x.k != x.l:
        raise MorphismError("powers require square valency")
    if n < 0:
        raise MorphismError("negative powers are not supported")
    result = identity_morphism(x.k, ring=x.ring, delta=x.delta)
    for _ in range(n):
        result = lin_compose(result, x)
    return result


def integrality_check(x):
    """True when every coefficient lies in the image of the integers."""
    return all(x.ring.is_integral(c) for c in x.terms.values())


def specialize_delta(x, value):
    """Evaluate a symbolic morphism at a rational value of delta."""
    if not isinstance(x.ring, PolynomialsInDelta) or x.delta is not None:
        raise MorphismError("specialize_delta expects a symbolic morphism")
    value = Fraction(value)
    terms = {d: c.evaluate(value) for d, c in x.terms.items()}
    return Morphism(x.k, x.l, QQ, value, terms)


def reduce_mod_p(x, p):
    """Reduce an integral morphism with numeric integral delta modulo p."""
    if x.delta is None:
        raise MorphismError(
            "cannot reduce a symbolic morphism; specialize delta first"
        )
    if not integrality_check(x):
        raise MorphismError("morphism has non-integral coefficients")
    field = PrimeField(p)

    def to_int(c):
        if isinstance(c, Poly):
            if c.degree > 0:
                raise MorphismError("non-constant polynomial coefficient")
            value = c.evaluate(0)
        else:
            value = Fraction(c)
        if value.denominator != 1:
            raise MorphismError("non-integral value %s" % value)
        return int(value)

    delta = to_int(x.delta) if not isinstance(x.delta, int) else x.delta
    terms = {d: field.from_int(to_int(c)) for d, c in x.terms.items()}
    return Morphism(x.k, x.l, field, field.from_int(delta), terms)


def morphism_to_json(x):
    entries = []
    for diag in x.support():
        entries.append(
            {"diagram": diagram_to_json(diag), "coeff": x.ring.fmt(x.terms[diag])}
        )
    return {
        "k": x.k,
        "l": x.l,
        "ring": x.ring.name,
        "delta": "symbolic" if x.delta is None else x.ring.fmt(x.delta),
        "terms": entries,
    }


def morphism_from_json(data):
    try:
        ring = ring_from_name(data["ring"])
        raw_delta = data["delta"]
        delta = None if raw_delta == "symbolic" else ring.parse(str(raw_delta))
        terms = {}
        zero = ring.zero()
        for entry in data["terms"]:
            diag = diagram_from_json(entry["diagram"])
            c = ring.parse(str(entry["coeff"]))
            terms[diag] = ring.add(terms.get(diag, zero), c)
        return Morphism(data["k"], data["l"], ring, delta, terms)
    except (KeyError, TypeError) as exc:
        raise MorphismError("malformed morphism JSON: %s" % (exc,)) from exc
