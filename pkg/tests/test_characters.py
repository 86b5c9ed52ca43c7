from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import elements
from paramodular.characters import (
    SYM_VARS,
    Character,
    KindUnsupportedError,
    a_k_sums,
    a_recurrence_residuals,
    a_seq,
    b_identity_residuals,
    b_seq,
    cj_coeffs,
    euler_factor_identity,
    guess_counterexample,
    guess_polys,
    index_character,
    index_closed_form,
    recurrence_coeffs,
    series_certificate,
    series_from_fraction,
    t_q2_display,
)
from paramodular.checks import first_guess_difference
from paramodular.coeffs import MPoly, PolyQ, TruncSeries
from paramodular.cosets import T, t_qk
from paramodular.hecke import X, Y1, Y2, HeckeElement, Monomial, alpha, beta, gen, mul

q = PolyQ.q()
Q = MPoly.var(SYM_VARS, "q")
LAM = MPoly.var(SYM_VARS, "lam")
ONE = MPoly.const(SYM_VARS, 1)


def P(p: PolyQ) -> MPoly:
    return MPoly.from_polyq(SYM_VARS, p)


ALL_12 = [Character(kind=k, eps=e) for k in (1, 2) for e in (1, -1)]
ALL = ALL_12 + [Character(kind=3, mu_target=Y1), Character(kind=3, mu_target=Y2)]


@pytest.mark.parametrize("eps", [1, -1])
def test_kind1_y_value(eps):
    chi = Character(kind=1, eps=eps)
    assert chi.eval(gen(Y1)) == -(1 + Q) - eps * LAM == chi.eval(gen(Y2))
    assert chi.eval(HeckeElement.scalar(1)) == ONE


def test_kind2_y_value():
    chi = Character(kind=2, eps=-1)
    assert chi.eval(gen(Y1)) == -(Q**2 + Q**3) - Q * LAM


def test_kind3_values():
    chi = Character(kind=3, mu_target=Y2)
    vals = chi.generator_values()
    assert not vals[0]
    assert not vals[2] * vals[3]
    assert chi.eval(gen(Y2)) == MPoly.var(chi.variables, "mu")


def test_index_character():
    chi = index_character()
    assert chi.eval(gen(X)) == P(q**3 + 2 * q**2 + q)
    assert chi.eval(gen(Y2)) == P(q**4 + q**3)
    assert chi.eval(HeckeElement.monomial(Monomial(2))) == ONE
    assert chi.eval(t_qk(2)) == P(PolyQ([1, 1, 2, 3, 3, 2, 1]))


def test_character_validation():
    with pytest.raises(ValueError):
        Character(kind=4)
    with pytest.raises(ValueError):
        Character(kind=1, eps=0)
    with pytest.raises(ValueError):
        Character(kind=3, mu_target="X")
    with pytest.raises(ValueError):
        Character(kind=1, lam=q, mu=q).generator_values()


def test_a_and_b_sequences_start():
    chi = Character(kind=1, eps=1)
    a = a_seq(chi, 5)
    assert a[0] == ONE and a[1] == LAM
    A, B, C, D = recurrence_coeffs(chi)
    assert a[5] == A * a[4] + B * a[3] + C * a[2] + D * a[1]
    bs = b_seq(chi, 2)
    assert bs[0] == ONE and bs[1] == LAM
    assert bs[2] == chi.eval(T(0, 0, 2)) + chi.eval(T(0, 1, 2)) + chi.eval(T(1, 0, 2))


@pytest.mark.parametrize("chi", ALL_12, ids=lambda c: f"kind{c.kind}{c.eps:+d}")
def test_sequence_identities(chi):
    assert not any(a_recurrence_residuals(chi, 8))
    assert not any(b_identity_residuals(chi, 8))
    assert not any(a_k_sums(chi, 7))
    assert t_q2_display(chi) == chi.t_qk_value(2)


def test_cj_examples():
    for eps in (1, -1):
        chi = Character(kind=1, eps=eps)
        assert cj_coeffs(chi) == (eps * Q**4, -Q - Q**2 + Q**3 - eps * Q * LAM, -eps - LAM, ONE)
        chi = Character(kind=2, eps=eps)
        assert cj_coeffs(chi) == (-eps * Q**5, Q**2 - 2 * Q**4 + eps * Q**2 * LAM,
                                  -eps + eps * Q + eps * Q**2 - LAM, ONE)
    c0, c1, c2, c3 = cj_coeffs(index_character())
    assert [c3, c2, c1, c0] == [ONE, P(-(1 + q**2 + q**3)), P(q**2 + q**3 + q**5), P(-(q**5))]


@pytest.mark.parametrize("chi,order", [(Character(kind=1, eps=1), 10), (Character(kind=1, eps=-1), 10),
                                       (Character(kind=2, eps=1), 10), (Character(kind=2, eps=-1), 8),
                                       (index_character(), 10)])
def test_series_certificates(chi, order):
    cert = series_certificate(chi, order)
    assert cert.valid
    assert len(cert.S.coeffs) == order + 1


def test_index_q_times_s_at_order_3():
    chi = index_character()
    cert = series_certificate(chi, 3)
    expected = TruncSeries(3, [PolyQ.const(1), q + q**2, q**3, PolyQ()], SYM_VARS)
    assert cert.Q * cert.S == expected


def test_broken_certificate_is_detected():
    chi = Character(kind=1, eps=1)
    cert = series_certificate(chi, 5)
    bumped = TruncSeries(5, [c + (1 if i == 4 else 0) for i, c in enumerate(cert.S.coeffs)], SYM_VARS)
    assert not (cert.Q * bumped - cert.P).is_zero()


def test_kind3_is_unsupported_for_series():
    chi = Character(kind=3)
    for fn in (lambda: a_seq(chi, 2), lambda: b_seq(chi, 2), lambda: cj_coeffs(chi),
               lambda: series_certificate(chi, 4)):
        with pytest.raises(KindUnsupportedError):
            fn()


def test_index_closed_form():
    assert index_closed_form(0) == PolyQ.const(1)
    assert index_closed_form(1) == PolyQ([1, 1, 2, 1])
    assert index_closed_form(3) == PolyQ([1, 1, 2, 3, 3, 4, 5, 3, 2, 1])
    chi = index_character()
    for k in range(11):
        assert P(index_closed_form(k)) == chi.t_qk_value(k)


def test_euler_factor_identity():
    assert euler_factor_identity(1)
    assert euler_factor_identity(-1)
    assert not euler_factor_identity(1, perturb=True)
    assert not euler_factor_identity(-1, perturb=True)


def test_guess_counterexample():
    assert guess_counterexample()
    chi = index_character()
    gnum, gden = guess_polys(chi)
    guess = series_from_fraction(gnum, gden, 3, SYM_VARS)
    actual = chi.series(3).coeffs
    assert guess[1] == actual[1] == P(PolyQ([1, 1, 2, 1]))
    assert guess[3] != actual[3]
    # the two series already part ways at t^2
    assert first_guess_difference() == 2


def test_guess_polys_match_displayed_form():
    gnum, gden = guess_polys(index_character())
    assert gnum == [ONE, P(PolyQ()), P(-(q**2))]
    assert gden == [ONE, P(-(1 + q + 2 * q**2 + q**3)), P(q**3 + q**4 + q**5), P(q**4)]


@settings(max_examples=40)
@given(st.sampled_from(ALL), elements(), elements())
def test_homomorphism(chi, a, b):
    assert chi.eval(mul(a, b)) == chi.eval(a) * chi.eval(b)


@settings(max_examples=40)
@given(st.sampled_from(ALL_12), elements())
def test_alpha_beta_invariance(chi, h):
    assert chi.eval(alpha(h)) == chi.eval(h)
    assert chi.eval(beta(h)) == chi.eval(h)


@given(st.fractions(max_denominator=5), st.fractions(max_denominator=5), elements(max_degree=3))
def test_numeric_mode_agrees_with_symbolic(qv, lam, h):
    sym = Character(kind=2, eps=-1)
    num = Character(kind=2, eps=-1, lam=Fraction(lam), q_value=Fraction(qv))
    assert num.eval(h) == sym.eval(h).subs({"q": Fraction(qv), "lam": Fraction(lam)})


@given(st.fractions(max_denominator=4), elements(max_degree=3), elements(max_degree=3))
def test_numeric_homomorphism(qv, a, b):
    chi = Character(kind=3, lam=Fraction(2, 3), mu=Fraction(-1, 2), q_value=Fraction(qv))
    assert chi.eval(mul(a, b)) == chi.eval(a) * chi.eval(b)
