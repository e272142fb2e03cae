"""Coefficient rings: dense polynomials in the loop parameter, rationals,
integers, prime fields, formatting/parsing round-trips, and exact division."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer.rings import (
    Integers,
    Poly,
    PolynomialsInDelta,
    PrimeField,
    QQ,
    QQ_DELTA,
    Rationals,
    RingError,
    ZZ,
    ring_from_name,
)


class TestPoly:
    def test_construction_drops_trailing_zeros(self):
        p = Poly((Fraction(1), Fraction(0), Fraction(0)))
        assert p.degree == 0
        assert p == Poly.const(Fraction(1))

    def test_arithmetic(self):
        d = Poly.variable()
        p = d * d - Poly.const(Fraction(1))
        q = d + Poly.const(Fraction(1))
        quo, rem = p.divmod(q)
        assert rem.is_zero()
        assert quo == d - Poly.const(Fraction(1))

    def test_evaluate_horner(self):
        d = Poly.variable()
        p = Poly.const(Fraction(2)) * d ** 3 - d + Poly.const(Fraction(5))
        assert p.evaluate(Fraction(3)) == 2 * 27 - 3 + 5

    def test_power(self):
        d = Poly.variable()
        assert (d + Poly.const(Fraction(1))) ** 2 == d * d + Poly.const(Fraction(2)) * d + Poly.const(Fraction(1))

    def test_str_forms(self):
        d = Poly.variable()
        assert str(Poly.const(Fraction(0))) == "0"
        assert str(d) == "d"
        assert str(Poly.const(Fraction(-3, 4))) == "-3/4"
        assert str(Poly.const(Fraction(2)) * d ** 2 - Poly.const(Fraction(1))) == "2*d^2-1"
        assert str(d ** 2 + Poly.const(Fraction(5)) * d + Poly.const(Fraction(6))) == "d^2+5*d+6"

    @given(st.lists(st.fractions(max_denominator=40), max_size=5))
    def test_format_parse_round_trip(self, coeffs):
        p = Poly(tuple(coeffs))
        assert QQ_DELTA.parse(QQ_DELTA.fmt(p)) == p

    @given(st.lists(st.fractions(max_denominator=12), min_size=1, max_size=4),
           st.lists(st.fractions(max_denominator=12), min_size=1, max_size=4))
    def test_product_degree_and_commutativity(self, a, b):
        p, q = Poly(tuple(a)), Poly(tuple(b))
        assert p * q == q * p
        if not p.is_zero() and not q.is_zero():
            assert (p * q).degree == p.degree + q.degree


class TestRingProtocol:
    @pytest.mark.parametrize("ring,sample", [
        (QQ, Fraction(3, 7)),
        (ZZ, 5),
        (PrimeField(5), 3),
        (QQ_DELTA, Poly.variable()),
    ])
    def test_basic_ops(self, ring, sample):
        one, zero = ring.one(), ring.zero()
        assert ring.is_zero(zero) and not ring.is_zero(one)
        assert ring.eq(ring.add(sample, zero), sample)
        assert ring.is_zero(ring.sub(sample, sample))
        assert ring.eq(ring.mul(one, sample), sample)
        assert ring.is_zero(ring.add(sample, ring.neg(sample)))
        assert ring.eq(ring.power(sample, 1), sample)
        assert ring.eq(ring.power(sample, 0), one)
        assert ring.eq(ring.parse(ring.fmt(sample)), sample)

    def test_exact_div(self):
        assert QQ.exact_div(Fraction(3), Fraction(2)) == Fraction(3, 2)
        assert ZZ.exact_div(6, 3) == 2
        with pytest.raises(RingError):
            ZZ.exact_div(7, 3)
        d = Poly.variable()
        assert QQ_DELTA.exact_div(d * d - Poly.const(Fraction(1)),
                                  d - Poly.const(Fraction(1))) == d + Poly.const(Fraction(1))
        with pytest.raises(RingError):
            QQ_DELTA.exact_div(d, d + Poly.const(Fraction(1)))

    def test_prime_field_inverse(self):
        f7 = PrimeField(7)
        for a in range(1, 7):
            assert f7.mul(a, f7.exact_div(f7.one(), a)) == 1

    def test_prime_field_rejects_composite(self):
        with pytest.raises(RingError):
            PrimeField(6)
        with pytest.raises(RingError):
            PrimeField(1)

    def test_prime_field_cached_instances(self):
        assert PrimeField(5) is PrimeField(5)

    def test_is_integral(self):
        assert QQ.is_integral(Fraction(4))
        assert not QQ.is_integral(Fraction(1, 2))
        assert QQ_DELTA.is_integral(Poly((Fraction(2), Fraction(-1))))
        assert not QQ_DELTA.is_integral(Poly((Fraction(1, 2),)))

    def test_from_int_reduces_mod_p(self):
        f5 = PrimeField(5)
        assert f5.from_int(-2) == 3
        assert f5.from_int(12) == 2


class TestRingNames:
    @pytest.mark.parametrize("ring", [QQ, ZZ, QQ_DELTA, PrimeField(5), PrimeField(11)])
    def test_round_trip(self, ring):
        assert ring_from_name(ring.name) == ring

    def test_unknown_name(self):
        with pytest.raises(RingError):
            ring_from_name("Octonions")

    def test_delta_helpers(self):
        assert QQ_DELTA.delta() == Poly.variable()
        assert QQ_DELTA.delta_power(3) == Poly.variable() ** 3
