from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import mpolys, polys
from paramodular.coeffs import (
    MPoly,
    NonDivisibleError,
    PolyParseError,
    PolyQ,
    TruncSeries,
    parse_mpoly,
    parse_poly,
    parse_rational,
    series_mul,
)

q = PolyQ.q()
VARS = ("q", "lam")


def test_basic_arithmetic_examples():
    assert (q + 1) * (q - 1) == q**2 - 1
    assert PolyQ() * (q**3 + 2 * q**2 + q) == PolyQ()
    assert (q**2 + q) + (q**3 + q**2) == q**3 + 2 * q**2 + q


def test_zero_has_one_representation():
    assert PolyQ([0, 0, 0]) == PolyQ()
    assert PolyQ([1, 2, 0]).coeffs == (1, 2)
    assert PolyQ().degree < 0
    assert (q - q).coeffs == ()


def test_divexact_examples():
    assert (q**2 - 1).divexact(q - 1) == q + 1
    num = 1 + q**2 - 2 * q * (1 + q + q**2) + q * (1 + q + q**2 + q**3)
    assert num.divexact((q - 1) ** 2 * (1 + q + q**2)) == PolyQ.const(1)
    with pytest.raises(NonDivisibleError):
        (q**3 + q + 1).divexact(q)


def test_mpoly_divexact_and_rejection():
    lam = MPoly.var(VARS, "lam")
    qq = MPoly.var(VARS, "q")
    assert ((lam + qq) * (lam - 1)).divexact(lam - 1) == lam + qq
    with pytest.raises(NonDivisibleError):
        (lam + 1).divexact(qq)
    with pytest.raises(ValueError):
        lam + MPoly.var(("q", "lam", "mu"), "mu")


def test_evaluation():
    assert (q**3 + 2 * q**2 + q)(2) == 18
    assert (q - 1)(Fraction(1, 2)) == Fraction(-1, 2)


@given(polys(), polys(), polys())
def test_polyq_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert a - a == PolyQ()


@given(mpolys(), mpolys(), mpolys())
def test_mpoly_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert all(v for v in (a * b).terms.values())


@given(polys(), polys(nonzero=True))
def test_divexact_inverts_multiplication(a, b):
    assert (a * b).divexact(b) == a


@given(mpolys(max_exp=3), mpolys(max_exp=3))
def test_mpoly_divexact_inverts_multiplication(a, b):
    if b:
        assert (a * b).divexact(b) == a


@given(polys(), polys())
def test_polyq_evaluation_is_a_ring_map(a, b):
    for x in (-2, 3):
        assert (a * b)(x) == a(x) * b(x)


@given(polys())
def test_print_parse_round_trip(p):
    assert parse_poly(str(p)) == p


@given(mpolys())
def test_mpoly_print_parse_round_trip(p):
    assert parse_mpoly(str(p), VARS) == p


def test_parse_examples():
    assert parse_poly("q^3+2*q^2+q") == q**3 + 2 * q**2 + q
    assert parse_poly("-(q-1)^2") == -((q - 1) ** 2)
    assert parse_poly(" 3 * ( q + 1 ) ") == 3 * q + 3
    assert str(q**3 + 2 * q**2 + q) == "q+2*q^2+q^3"
    assert str(PolyQ()) == "0"
    assert parse_rational("q^2+1", Fraction(1, 2)) == Fraction(5, 4)


@pytest.mark.parametrize("text", ["", "q^", "q+", "(q", "q^-1", "x", "2q"])
def test_parse_errors_carry_position(text):
    with pytest.raises(PolyParseError) as info:
        parse_poly(text)
    assert 0 <= info.value.pos <= len(text)
    assert info.value.expected


def _s(order, *coeffs):
    return TruncSeries(order, [MPoly.from_polyq(VARS, PolyQ.coerce(c)) for c in coeffs], VARS)


def test_series_examples():
    assert series_mul(_s(2, 1, 1), _s(2, 1, -1)) == _s(2, 1, 0, -1)
    x = _s(3, 0, 2, q, 5)
    assert series_mul(TruncSeries.one(3, VARS), x) == x
    assert len(_s(4, 1).coeffs) == 5


def test_series_rejects_mismatch():
    with pytest.raises(ValueError):
        _s(2, 1) * _s(3, 1)
    with pytest.raises(ValueError):
        _s(2, 1) * TruncSeries(2, [MPoly.const(("q",), 1)], ("q",))


@given(polys(max_deg=5), polys(max_deg=5), st.integers(0, 8))
def test_series_mul_matches_truncated_product(a, b, order):
    prod = a * b
    full = list(prod.coeffs) + [0] * (order + 1)
    got = series_mul(_s(order, *a.coeffs[: order + 1]), _s(order, *b.coeffs[: order + 1]))
    assert got == _s(order, *full[: order + 1])
