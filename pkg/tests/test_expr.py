from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import elements
from paramodular.coeffs import PolyParseError, PolyQ
from paramodular.cosets import CosetElement, InvalidTripleError, T, coset_enumerate
from paramodular.expr import parse_coset, parse_element, parse_hecke
from paramodular.hecke import HeckeElement, Monomial, gen, mul, zero_divisor_pair

q = PolyQ.q()


def test_zero_divisor_factor_parses():
    e = parse_element("Y1 + (1+q)*V^2 + V*X")
    assert len(e.terms) == 3
    assert e.to_hecke() == zero_divisor_pair()[0]


def test_coset_atom():
    e = parse_element("T(0,1,2)")
    assert e.terms[0].atoms == (("T", 0, 1, 2),)
    assert e.to_coset() == T(0, 1, 2)
    assert e.to_hecke() == gen("Y1")


def test_w_prefix_and_normalization():
    assert parse_coset("W*T(0,0,1)") == T(0, 0, 1, delta=1)
    assert parse_hecke("W*T(0,0,1)") == parse_hecke("V*X")
    assert parse_coset("T(3,0,4)") == T(1, 0, 4)


def test_mixed_atoms_multiply_in_the_algebra():
    assert parse_coset("X*T(0,0,1)") == parse_coset("X^2")
    assert parse_hecke("T(0,1,2)*X") == mul(gen("Y1"), gen("X"))
    assert parse_coset("T(0,0,1)*T(0,0,1)") == parse_coset("X*X")


def test_coefficients_and_signs():
    h = parse_hecke("-3*q^2*V + (q-1)*V*X - Y1 + 2")
    assert h.coefficient(Monomial(1)) == -3 * q**2
    assert h.coefficient(Monomial(1, 1)) == q - 1
    assert h.coefficient(Monomial(0, 0, 1)) == PolyQ.const(-1)
    assert h.coefficient(Monomial()) == PolyQ.const(2)
    assert parse_hecke("q*V*q") == HeckeElement.monomial(Monomial(1), q**2)
    assert parse_hecke("X - X") == HeckeElement()


@pytest.mark.parametrize("text,pos", [("V^-1", 2), ("", 0), ("V +", 3), ("T(1,2)", 5),
                                      ("X*Y3", 2), ("(q+1", 4), ("V X", 2), ("V^", 2)])
def test_parse_errors(text, pos):
    with pytest.raises(PolyParseError) as info:
        parse_element(text)
    assert info.value.pos == pos
    assert info.value.expected


def test_invalid_triple_is_rejected():
    with pytest.raises(InvalidTripleError):
        parse_element("T(0,3,2)")


@settings(max_examples=200)
@given(elements(max_degree=5, max_terms=6))
def test_monomial_print_parse_round_trip(h):
    text = str(h)
    assert parse_hecke(text) == h
    assert str(parse_hecke(text)) == text


labels = st.integers(0, 5).flatmap(lambda k: st.sampled_from(coset_enumerate(k)))
coefs = st.lists(st.integers(-4, 4), min_size=1, max_size=3).map(PolyQ)


@settings(max_examples=200)
@given(st.dictionaries(labels, coefs, max_size=5))
def test_coset_print_parse_round_trip(terms):
    e = CosetElement(terms)
    assert parse_coset(str(e)) == e
