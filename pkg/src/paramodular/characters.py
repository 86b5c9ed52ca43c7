"""Characters (ring homomorphisms to a commutative ring) and their series.

A character is fixed by its values on V, X, Y1, Y2.  Three families exist:

* kind 1:  chi(V) = eps, chi(Y1) = chi(Y2) = -(1+q) eps^2 - eps lam
* kind 2:  chi(V) = eps, chi(Y1) = chi(Y2) = -(q^2+q^3) eps^2 + q eps lam
* kind 3:  chi(V) = 0 and chi(Y1) chi(Y2) = 0

where lam = chi(X).  For kinds 1 and 2 we normalize chi(T(1,1,2)) = 1, so
eps is a concrete sign and eps^2 = 1 is applied eagerly.  Symbolic values live
in Z[q, lam] (kind 3: Z[q, lam, mu]); numeric values are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .coeffs import MPoly, PolyQ, TruncSeries
from .cosets import CosetElement, CosetEngine, coset_enumerate, default_engine
from .hecke import HeckeElement, Monomial, Y1, Y2

Value = Union[MPoly, Fraction]

SYM_VARS = ("q", "lam")
SYM_VARS_3 = ("q", "lam", "mu")


class KindUnsupportedError(ValueError):
    pass


@dataclass(frozen=True)
class Character:
    """Homomorphism from the Hecke algebra, given by its parameters.

    ``lam`` and ``mu`` may be ``None`` (a free symbol), an MPoly over the
    character's variables, or a Fraction when ``q_value`` is set.
    """

    kind: int
    eps: int = 1
    lam: Optional[Value] = None
    mu: Optional[Value] = None
    mu_target: str = Y1
    q_value: Optional[Fraction] = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        if self.kind not in (1, 2, 3):
            raise ValueError(f"kind must be 1, 2 or 3, got {self.kind}")
        if self.kind in (1, 2) and self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if self.kind == 3 and self.mu_target not in (Y1, Y2):
            raise ValueError("mu_target must be Y1 or Y2")
        if self.numeric and (self.lam is None or (self.kind == 3 and self.mu is None)):
            raise ValueError("numeric characters need explicit lam (and mu for kind 3)")

    @property
    def numeric(self) -> bool:
        return self.q_value is not None

    @property
    def variables(self) -> tuple[str, ...]:
        return SYM_VARS_3 if self.kind == 3 else SYM_VARS

    def const(self, n: int) -> Value:
        return Fraction(n) if self.numeric else MPoly.const(self.variables, n)

    def scalar(self, p: PolyQ) -> Value:
        """Image of a Z[q] coefficient."""
        if self.numeric:
            return p(Fraction(self.q_value))
        return MPoly.from_polyq(self.variables, p)

    @property
    def qv(self) -> Value:
        return self.scalar(PolyQ.q())

    def _param(self, value, name: str) -> Value:
        if value is None:
            return MPoly.var(self.variables, name)
        if isinstance(value, PolyQ):
            return self.scalar(value)
        if isinstance(value, int):
            return self.const(value)
        return value

    def generator_values(self) -> tuple[Value, Value, Value, Value]:
        """(chi(V), chi(X), chi(Y1), chi(Y2))."""
        hit = self._cache.get("gens")
        if hit is not None:
            return hit
        lam = self._param(self.lam, "lam")
        qq = self.qv
        one = self.const(1)
        if self.kind == 3:
            mu = self._param(self.mu, "mu")
            zero = self.const(0)
            y1, y2 = (mu, zero) if self.mu_target == Y1 else (zero, mu)
            vals = (zero, lam, y1, y2)
        else:
            eps = self.const(self.eps)
            if self.kind == 1:
                mu = -(one + qq) - eps * lam
            else:
                mu = -(qq**2 + qq**3) + qq * eps * lam
            if self.mu is not None and self._param(self.mu, "mu") != mu:
                raise ValueError(f"mu is determined by lam for kind {self.kind}")
            vals = (eps, lam, mu, mu)
        self._cache["gens"] = vals
        return vals

    def _power(self, i: int, e: int) -> Value:
        key = ("pow", i, e)
        hit = self._cache.get(key)
        if hit is None:
            hit = self.generator_values()[i] ** e
            self._cache[key] = hit
        return hit

    def eval_monomial(self, m: Monomial) -> Value:
        out = self.const(1)
        for i, e in enumerate(m):
            if e:
                out = out * self._power(i, e)
        return out

    def eval(self, h: Union[HeckeElement, CosetElement], engine: CosetEngine | None = None) -> Value:
        """chi(h) for an element in either basis."""
        if isinstance(h, CosetElement):
            eng = engine or default_engine()
            acc = self.const(0)
            for lab, c in h.terms.items():
                acc = acc + self.eval_label(lab, eng) * self.scalar(c)
            return acc
        acc = self.const(0)
        for m, c in h.terms.items():
            acc = acc + self.eval_monomial(m) * self.scalar(c)
        return acc

    def eval_label(self, lab, engine: CosetEngine | None = None) -> Value:
        key = ("label", tuple(lab))
        hit = self._cache.get(key)
        if hit is None:
            eng = engine or default_engine()
            hit = self.eval(eng.coset_to_monomial(lab))
            self._cache[key] = hit
        return hit

    def t_qk_value(self, k: int) -> Value:
        """chi(T(q^k))."""
        acc = self.const(0)
        for lab in coset_enumerate(k):
            acc = acc + self.eval_label(lab)
        return acc

    def series(self, order: int) -> TruncSeries:
        if self.numeric:
            raise ValueError("series are built symbolically")
        return TruncSeries(order, [self.t_qk_value(k) for k in range(order + 1)], self.variables)


def index_character() -> Character:
    """The index homomorphism: kind 2, eps = 1, chi(X) = q^3 + 2q^2 + q."""
    q = PolyQ.q()
    chi = Character(kind=2, eps=1, lam=MPoly.from_polyq(SYM_VARS, q**3 + 2 * q**2 + q))
    mu = chi.generator_values()[2]
    assert mu == MPoly.from_polyq(SYM_VARS, q**4 + q**3), mu
    return chi


def _require_12(chi: Character) -> None:
    if chi.kind not in (1, 2):
        raise KindUnsupportedError("only kinds 1 and 2 have the rationality structure")


def a_seq(chi: Character, kmax: int) -> list[Value]:
    """a_k = chi(T(0,0,k)) for k = 0..kmax."""
    _require_12(chi)
    return [chi.eval_label((0, 0, 0, k)) for k in range(kmax + 1)]


def b_seq(chi: Character, kmax: int) -> list[Value]:
    """B_k = sum of chi(a,b,k) over (a,b,k) in S with ab = 0."""
    _require_12(chi)
    out = []
    for k in range(kmax + 1):
        acc = chi.const(0)
        for lab in coset_enumerate(k):
            if lab.delta == 0 and lab.a * lab.b == 0:
                acc = acc + chi.eval_label(lab)
        out.append(acc)
    return out


def recurrence_coeffs(chi: Character) -> tuple[Value, Value, Value, Value]:
    """(A, B, C, D) of the four-term recurrence for a_k."""
    _require_12(chi)
    eps, lam, mu, _ = chi.generator_values()
    qq = chi.qv
    A = eps * (1 - qq**2) + lam
    B = -(qq + qq**3) + eps * qq * (qq - 1) * lam - 2 * qq * mu
    return A, B, qq**3 * A, -(qq**6)


def cj_coeffs(chi: Character) -> tuple[Value, Value, Value, Value]:
    """(c0, c1, c2, c3); the denominator is c3 + c2 t + c1 t^2 + c0 t^3."""
    _require_12(chi)
    eps, lam, _, _ = chi.generator_values()
    qq = chi.qv
    one = chi.const(1)
    if chi.kind == 1:
        return (eps * qq**4, -qq - qq**2 + qq**3 - eps * qq * lam, -eps - lam, one)
    return (-eps * qq**5, qq**2 - 2 * qq**4 + eps * qq**2 * lam, -eps + eps * qq + eps * qq**2 - lam, one)


def numerator_poly(chi: Character) -> list[Value]:
    """Coefficients (in t) of the numerator of the generating series."""
    _require_12(chi)
    qq = chi.qv
    one = chi.const(1)
    if chi.kind == 1:
        return [one, chi.const(0), -(qq**2)]
    eps = chi.const(chi.eps)
    return [one, eps * (qq + qq**2), qq**3]


def denominator_poly(chi: Character) -> list[Value]:
    c0, c1, c2, c3 = cj_coeffs(chi)
    return [c3, c2, c1, c0]


@dataclass
class SeriesCertificate:
    order: int
    S: TruncSeries
    P: TruncSeries
    Q: TruncSeries
    residual: TruncSeries

    @property
    def valid(self) -> bool:
        return self.residual.is_zero()


def series_certificate(chi: Character, order: int = 10) -> SeriesCertificate:
    """Check Q * S - P == 0 modulo t^(order+1)."""
    _require_12(chi)
    if order < 3:
        raise ValueError("order must be at least 3")
    S = chi.series(order)
    P = TruncSeries(order, numerator_poly(chi), chi.variables)
    Q = TruncSeries(order, denominator_poly(chi), chi.variables)
    return SeriesCertificate(order, S, P, Q, Q * S - P)


def a_recurrence_residuals(chi: Character, kmax: int = 8) -> list[Value]:
    """a_{k+4} - (A a_{k+3} + B a_{k+2} + C a_{k+1} + D a_k) for 1 <= k <= kmax."""
    a = a_seq(chi, kmax + 4)
    A, B, C, D = recurrence_coeffs(chi)
    return [a[k + 4] - (A * a[k + 3] + B * a[k + 2] + C * a[k + 1] + D * a[k]) for k in range(1, kmax + 1)]


def b_identity_residuals(chi: Character, kmax: int = 8) -> list[Value]:
    """The B_k three-term relation, multiplied through by (q+1), for 2 <= k <= kmax."""
    a = a_seq(chi, kmax + 2)
    B = b_seq(chi, kmax + 2)
    eps, lam, _, _ = chi.generator_values()
    qq = chi.qv
    out = []
    for k in range(2, kmax + 1):
        lhs = (qq + 1) * B[k + 2] - (eps * (1 - qq**2) + lam) * B[k + 1] + (qq**2 + qq**3) * B[k]
        rhs = qq * a[k + 2] + eps * (qq**2 - qq) * a[k + 1] - qq**2 * a[k]
        out.append(lhs - rhs)
    return out


def a_k_sums(chi: Character, kmax: int = 7) -> list[Value]:
    """A_k = sum_j c_j chi(T(q^(k+j))) for 0 <= k <= kmax."""
    c = cj_coeffs(chi)
    t = [chi.t_qk_value(n) for n in range(kmax + 4)]
    return [sum((c[j] * t[k + j] for j in range(4)), chi.const(0)) for k in range(kmax + 1)]


def t_q2_display(chi: Character) -> Value:
    """-2q chi(Y1) + 1 - q(q+1)^2 + (2-q) eps chi(X) + chi(X)^2."""
    eps, lam, mu, _ = chi.generator_values()
    qq = chi.qv
    return -2 * qq * mu + 1 - qq * (qq + 1) ** 2 + (2 - qq) * eps * lam + lam**2


def index_closed_form(k: int) -> PolyQ:
    """chi_index(T(q^k)) from the closed-form quotient (exact division)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    q = PolyQ.q()
    num = 1 + q**2 - 2 * q ** (2 * k + 1) * (1 + q + q**2) + q ** (3 * k + 1) * (1 + q + q**2 + q**3)
    den = (q - 1) ** 2 * (1 + q + q**2)
    return num.divexact(den)


# ---------------------------------------------------------------------------
# spin Euler factor


def spin_euler_factor_terms(chi: Character, perturb: bool = False) -> list[list[tuple[Value, int]]]:
    """D(t) as lists of (value, h) pairs meaning value * q^(h/2), one list per power of t.

    D(t) = 1 - q^(-3/2)(chi(X) + chi(V)) t + (q^(-2) chi(Y1) + 1) t^2 + chi(V) q^(-1/2) t^3.
    """
    eps, lam, mu, _ = chi.generator_values()
    one = chi.const(1)
    t3 = [(eps, -1)] if not perturb else [(-eps, -1)]
    return [[(one, 0)], [(-(lam + eps), -3)], [(mu, -4), (one, 0)], t3]


def rescale_half_powers(terms: list[list[tuple[Value, int]]], chi: Character) -> list[Value]:
    """Coefficients of D(q^(3/2) t); every resulting q-power must be a nonnegative integer."""
    qq = chi.qv
    out = []
    for i, parts in enumerate(terms):
        acc = chi.const(0)
        for val, h in parts:
            total = h + 3 * i
            if total % 2 or total < 0:
                raise ValueError(f"t^{i} term leaves q^({total}/2)")
            acc = acc + val * qq ** (total // 2)
        out.append(acc)
    return out


def euler_factor_identity(eps: int, perturb: bool = False) -> bool:
    """Kind-1 denominator equals D(q^(3/2) t), symbolically in lam."""
    chi = Character(kind=1, eps=eps)
    return denominator_poly(chi) == rescale_half_powers(spin_euler_factor_terms(chi, perturb), chi)


# ---------------------------------------------------------------------------
# the rejected Hecke-level guess


def guess_polys(chi: Character) -> tuple[list[Value], list[Value]]:
    """Image under chi of numerator 1 - q^2 V^2 t^2 and denominator
    1 - (X+V) t + (q Y1 + q^3 V^2) t^2 + q^4 V^3 t^3."""
    from .hecke import HeckeElement as H

    q = PolyQ.q()
    one = H.scalar(1)
    v2 = H.monomial(Monomial(2, 0, 0, 0))
    num = [one, H(), -(v2.scale(q**2))]
    den = [
        one,
        -(H.monomial(Monomial(0, 1, 0, 0)) + H.monomial(Monomial(1, 0, 0, 0))),
        H.monomial(Monomial(0, 0, 1, 0)).scale(q) + v2.scale(q**3),
        H.monomial(Monomial(3, 0, 0, 0)).scale(q**4),
    ]
    return [chi.eval(h) for h in num], [chi.eval(h) for h in den]


def _poly_series(coeffs: Sequence[Value], order: int, variables) -> TruncSeries:
    return TruncSeries(order, list(coeffs), variables)


def series_from_fraction(num: Sequence[Value], den: Sequence[Value], order: int, variables) -> list[Value]:
    """Power-series coefficients of num/den (den[0] must be 1)."""
    one = MPoly.const(variables, 1)
    assert den[0] == one
    out: list[Value] = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else MPoly(variables)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc)
    return out


def guess_counterexample() -> bool:
    """True iff the guessed rational function disagrees with the actual index series."""
    chi = index_character()
    gnum, gden = guess_polys(chi)
    num, den = numerator_poly(chi), denominator_poly(chi)
    order = 6  # both cross products have t-degree <= 5
    lhs = _poly_series(gnum, order, chi.variables) * _poly_series(den, order, chi.variables)
    rhs = _poly_series(num, order, chi.variables) * _poly_series(gden, order, chi.variables)
    return lhs != rhs
