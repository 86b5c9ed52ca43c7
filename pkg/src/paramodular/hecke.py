"""The paramodular Hecke algebra in the normal-form basis V^a X^b Y1^c Y2^d.

Elements are finite Z[q]-combinations of monomials V^e1 X^e2 Y1^e3 Y2^e4 with
e3*e4 == 0.  Products are computed by right-multiplying a normal-form
monomial by one generator at a time, using the defining relations oriented
as rewrite rules:

    Y1 V -> V Y2,                     Y2 V -> V Y1
    Y1 X -> X Y1 + (1-q^2)(V Y1 - V Y2)
    Y2 X -> X Y2 + (1-q^2)(V Y2 - V Y1)
    Yk Yi -> -q^2(q+1)^2 V^4 - q(q^2-1) V^3 X + q V^2 X^2
             + (q-1) V X Yi - q(q+1) V^2 Yk - (1+q^3) V^2 Yi    (k != i)

X and V commute, so a word only needs its Y-block pushed to the right.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Union

from .coeffs import PolyQ

Scalar = Union[PolyQ, int]

V, X, Y1, Y2 = "V", "X", "Y1", "Y2"
GENERATORS = (V, X, Y1, Y2)
GEN_DEGREE = {V: 1, X: 1, Y1: 2, Y2: 2}

ONE = PolyQ.const(1)
q = PolyQ.q()


class Monomial(NamedTuple):
    """Exponents of V, X, Y1, Y2 (in that order)."""

    e1: int = 0
    e2: int = 0
    e3: int = 0
    e4: int = 0

    @property
    def degree(self) -> int:
        return self.e1 + self.e2 + 2 * (self.e3 + self.e4)

    def is_normal(self) -> bool:
        return min(self) >= 0 and self.e3 * self.e4 == 0

    def word(self) -> tuple[str, ...]:
        return (V,) * self.e1 + (X,) * self.e2 + (Y1,) * self.e3 + (Y2,) * self.e4

    def sort_key(self) -> tuple:
        # ascending degree, then lex-descending on (e1, e2, e3, e4)
        return (self.degree, -self.e1, -self.e2, -self.e3, -self.e4)

    def __str__(self) -> str:
        parts = []
        for name, e in zip(GENERATORS, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


UNIT = Monomial(0, 0, 0, 0)


def _scalar(c: Scalar) -> PolyQ:
    return PolyQ.coerce(c)


def _coef_str(c: PolyQ, body: str) -> tuple[bool, str]:
    """Split off the sign of a coefficient and render ``coef*body``."""
    neg = c.coeffs[-1] < 0
    if neg:
        c = -c
    if c == ONE:
        return neg, body
    cs = str(c) if c.is_monomial() else f"({c})"
    return neg, cs if body == "1" else f"{cs}*{body}"


def format_terms(items: Iterable[tuple[str, PolyQ]]) -> str:
    """Join rendered ``(body, coefficient)`` pairs into ``a + b - c`` form."""
    out = ""
    for body, c in items:
        neg, s = _coef_str(c, body)
        if not out:
            out = ("-" if neg else "") + s
        else:
            out += (" - " if neg else " + ") + s
    return out or "0"


class HeckeElement:
    """A finite Z[q]-linear combination of normal-form monomials."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = _scalar(c)
            if c:
                m = Monomial(*m)
                if not m.is_normal():
                    raise ValueError(f"{m!r} is not in normal form")
                clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, m: Monomial, c: Scalar = 1) -> HeckeElement:
        return cls({Monomial(*m): c})

    @classmethod
    def scalar(cls, c: Scalar) -> HeckeElement:
        return cls({UNIT: c})

    @classmethod
    def _from_clean(cls, terms: dict) -> HeckeElement:
        h = cls.__new__(cls)
        h.terms = {m: c for m, c in terms.items() if c}
        h._hash = None
        return h

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = HeckeElement.scalar(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __iter__(self) -> Iterator[tuple[Monomial, PolyQ]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, m: Monomial) -> PolyQ:
        return self.terms.get(Monomial(*m), PolyQ())

    def __add__(self, other: HeckeElement) -> HeckeElement:
        if isinstance(other, (int, PolyQ)):
            other = HeckeElement.scalar(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return HeckeElement._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> HeckeElement:
        return HeckeElement._from_clean({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        if isinstance(other, (int, PolyQ)):
            other = HeckeElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> HeckeElement:
        return HeckeElement.scalar(other) - self

    def scale(self, c: Scalar) -> HeckeElement:
        c = _scalar(c)
        return HeckeElement._from_clean({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> HeckeElement:
        if isinstance(other, (int, PolyQ)):
            return self.scale(other)
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other) -> HeckeElement:
        if isinstance(other, (int, PolyQ)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> HeckeElement:
        result = HeckeElement.scalar(1)
        for _ in range(n):
            result = mul(result, self)
        return result

    def degrees(self) -> set[int]:
        return {m.degree for m in self.terms}

    def __str__(self) -> str:
        return format_terms((str(m), c) for m, c in self)

    def __repr__(self) -> str:
        return f"HeckeElement({str(self)!r})"


def gen(name: str) -> HeckeElement:
    """The generator V, X, Y1 or Y2 as an element."""
    idx = GENERATORS.index(name)
    exps = [0, 0, 0, 0]
    exps[idx] = 1
    return HeckeElement.monomial(Monomial(*exps))


def element(*terms: tuple[Scalar, Monomial]) -> HeckeElement:
    """Build an element from ``(coefficient, (e1, e2, e3, e4))`` pairs."""
    out = HeckeElement()
    for c, m in terms:
        out = out + HeckeElement.monomial(Monomial(*m), c)
    return out


# ---------------------------------------------------------------------------
# rewriting

_S = ONE - q**2  # 1 - q^2


def _yy_rule(k: str, i: str) -> tuple[tuple[PolyQ, tuple[str, ...]], ...]:
    """Yk*Yi for k != i as a combination of words with at most one Y."""
    return (
        (-(q**2) * (q + 1) ** 2, (V, V, V, V)),
        (-q * (q**2 - 1), (V, V, V, X)),
        (q, (V, V, X, X)),
        (q - 1, (V, X, i)),
        (-q * (q + 1), (V, V, k)),
        (-(ONE + q**3), (V, V, i)),
    )


def _other(y: str) -> str:
    return Y2 if y == Y1 else Y1


@lru_cache(maxsize=None)
def _rmul_gen(m: Monomial, g: str) -> tuple[tuple[Monomial, PolyQ], ...]:
    """Normal form of ``m * g`` for a normal-form monomial and one generator."""
    a, b, c1, c2 = m
    if g == V:
        return ((Monomial(a + 1, b, c2, c1), ONE),)
    if c1 == 0 and c2 == 0:
        if g == X:
            return ((Monomial(a, b + 1, 0, 0), ONE),)
        return ((Monomial(a, b, int(g == Y1), int(g == Y2)), ONE),)
    yk = Y1 if c1 else Y2
    if g == yk:
        return ((Monomial(a, b, c1 + (g == Y1), c2 + (g == Y2)), ONE),)
    prefix = Monomial(a, b, c1 - (yk == Y1), c2 - (yk == Y2))
    acc: dict = {}
    if g == X:
        # Yk X = X Yk + (1-q^2)(V Yk - V Yj) for both k
        _accum_word(acc, prefix, (X, yk), ONE)
        _accum_word(acc, prefix, (V, yk), _S)
        _accum_word(acc, prefix, (V, _other(yk)), -_S)
    else:
        for coef, word in _yy_rule(yk, g):
            _accum_word(acc, prefix, word, coef)
    return tuple((mm, c) for mm, c in acc.items() if c)


def _accum_word(acc: dict, m: Monomial, word: tuple[str, ...], coef: PolyQ) -> None:
    for mm, c in _mono_word(m, word):
        v = acc.get(mm)
        acc[mm] = coef * c if v is None else v + coef * c


@lru_cache(maxsize=None)
def _mono_word(m: Monomial, word: tuple[str, ...]) -> tuple[tuple[Monomial, PolyQ], ...]:
    """Normal form of ``m * w1 * w2 * ...``."""
    if not word:
        return ((m, ONE),)
    if len(word) == 1:
        return _rmul_gen(m, word[0])
    acc: dict = {}
    for mm, c in _mono_word(m, word[:-1]):
        for m2, c2 in _rmul_gen(mm, word[-1]):
            v = acc.get(m2)
            acc[m2] = c * c2 if v is None else v + c * c2
    return tuple((mm, c) for mm, c in acc.items() if c)


def mono_mul(ma: Monomial, mb: Monomial) -> tuple[tuple[Monomial, PolyQ], ...]:
    return _mono_word(Monomial(*ma), Monomial(*mb).word())


def mul(lhs: HeckeElement, rhs: HeckeElement) -> HeckeElement:
    """Product in the algebra, returned in normal form."""
    acc: dict = {}
    for mb, cb in rhs.terms.items():
        word = mb.word()
        for ma, ca in lhs.terms.items():
            c = ca * cb
            for m, cm in _mono_word(ma, word):
                v = acc.get(m)
                acc[m] = c * cm if v is None else v + c * cm
    return HeckeElement._from_clean(acc)


def word_element(word: Iterable[str], start: HeckeElement | None = None) -> HeckeElement:
    """Evaluate an arbitrary generator word (not necessarily normal) in the algebra."""
    acc = dict((start or HeckeElement.scalar(1)).terms)
    for g in word:
        nxt: dict = {}
        for m, c in acc.items():
            for m2, c2 in _rmul_gen(m, g):
                v = nxt.get(m2)
                nxt[m2] = c * c2 if v is None else v + c * c2
        acc = {m: c for m, c in nxt.items() if c}
    return HeckeElement._from_clean(acc)


def commutator(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    return mul(a, b) - mul(b, a)


# ---------------------------------------------------------------------------
# grading and bases


def degree_components(h: HeckeElement) -> dict[int, HeckeElement]:
    parts: dict[int, dict] = {}
    for m, c in h.terms.items():
        parts.setdefault(m.degree, {})[m] = c
    return {k: HeckeElement._from_clean(v) for k, v in sorted(parts.items())}


def monomial_basis(k: int) -> list[Monomial]:
    """All normal-form monomials of degree k, in display order."""
    out = []
    for y in range(k // 2 + 1):
        rest = k - 2 * y
        for e1 in range(rest + 1):
            e2 = rest - e1
            if y == 0:
                out.append(Monomial(e1, e2, 0, 0))
            else:
                out.append(Monomial(e1, e2, y, 0))
                out.append(Monomial(e1, e2, 0, y))
    return sorted(out, key=Monomial.sort_key)


def rank_formula(k: int) -> int:
    """rank of the degree-k piece, (2k^2 + 4k + 3 + (-1)^k) / 4."""
    return (2 * k * k + 4 * k + 3 + (-1) ** k) // 4


def coordinates(h: HeckeElement, basis: list[Monomial]) -> list[PolyQ]:
    """Coefficient vector of ``h`` with respect to a list of monomials."""
    index = set(basis)
    extra = [m for m in h.terms if m not in index]
    if extra:
        raise ValueError(f"element has monomials outside the basis: {extra}")
    return [h.coefficient(m) for m in basis]


# ---------------------------------------------------------------------------
# involutions and the quotient by V^2 - 1


def alpha(h: HeckeElement) -> HeckeElement:
    """Automorphism fixing V and X and swapping Y1 with Y2."""
    return HeckeElement._from_clean({Monomial(a, b, d, c): v for (a, b, c, d), v in h.terms.items()})


def beta(h: HeckeElement) -> HeckeElement:
    """Anti-automorphism fixing all four generators: reverses every word."""
    out = HeckeElement()
    for m, c in h.terms.items():
        out = out + word_element(tuple(reversed(m.word()))).scale(c)
    return out


def gk_project(h: HeckeElement) -> HeckeElement:
    """Canonical representative modulo the two-sided ideal generated by V^2 - 1.

    V^2 is central, so the ideal is (V^2 - 1)H and reducing the V-exponent
    mod 2 is a ring map on normal forms.
    """
    acc: dict = {}
    for (a, b, c, d), v in h.terms.items():
        m = Monomial(a % 2, b, c, d)
        acc[m] = acc[m] + v if m in acc else v
    return HeckeElement._from_clean(acc)


def gk_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the quotient algebra H / (V^2 - 1)."""
    return gk_project(mul(gk_project(a), gk_project(b)))


# ---------------------------------------------------------------------------
# the defining relations and the zero-divisor pair


def relations() -> list[HeckeElement]:
    """The seven defining relations r1..r7 evaluated in the algebra."""
    v, x, y1, y2 = (gen(g) for g in GENERATORS)
    s = ONE - q**2
    w = word_element
    return [
        w("VX") - w("XV"),
        w((V, Y1)) - w((Y2, V)),
        w((V, Y2)) - w((Y1, V)),
        w((X, Y1)) - w((Y1, X)) + w((V, Y1)).scale(s) - w((V, Y2)).scale(s),
        w((X, Y2)) - w((Y2, X)) - w((V, Y1)).scale(s) + w((V, Y2)).scale(s),
        w((Y1, Y2)) - w((Y2, Y1))
        - w((V, V, Y1)).scale((q - 1) ** 2 * (q + 1))
        + w((V, V, Y2)).scale((q - 1) ** 2 * (q + 1))
        + w((V, X, Y1)).scale(q - 1)
        - w((V, X, Y2)).scale(q - 1),
        w((Y1, Y2))
        + w("VVVV").scale(q**2 * (q + 1) ** 2)
        + w("VVVX").scale(q * (q**2 - 1))
        - w("VVXX").scale(q)
        - w((V, X, Y2)).scale(q - 1)
        + w((V, V, Y1)).scale(q * (q + 1))
        + w((V, V, Y2)).scale(ONE + q**3),
    ]


def relation_words() -> list[list[tuple[PolyQ, tuple[str, ...]]]]:
    """r1..r7 as lists of (coefficient, generator word), for evaluation in other bases."""
    s = ONE - q**2
    c6 = (q - 1) ** 2 * (q + 1)
    return [
        [(ONE, (V, X)), (-ONE, (X, V))],
        [(ONE, (V, Y1)), (-ONE, (Y2, V))],
        [(ONE, (V, Y2)), (-ONE, (Y1, V))],
        [(ONE, (X, Y1)), (-ONE, (Y1, X)), (s, (V, Y1)), (-s, (V, Y2))],
        [(ONE, (X, Y2)), (-ONE, (Y2, X)), (-s, (V, Y1)), (s, (V, Y2))],
        [(ONE, (Y1, Y2)), (-ONE, (Y2, Y1)), (-c6, (V, V, Y1)), (c6, (V, V, Y2)),
         (q - 1, (V, X, Y1)), (-(q - 1), (V, X, Y2))],
        [(ONE, (Y1, Y2)), (q**2 * (q + 1) ** 2, (V, V, V, V)), (q * (q**2 - 1), (V, V, V, X)),
         (-q, (V, V, X, X)), (-(q - 1), (V, X, Y2)), (q * (q + 1), (V, V, Y1)),
         (ONE + q**3, (V, V, Y2))],
    ]


def zero_divisor_pair() -> tuple[HeckeElement, HeckeElement]:
    """(Y1 + (1+q)V^2 + VX, Y2 + (q^2+q^3)V^2 - qVX), whose product vanishes."""
    left = element((1, (0, 0, 1, 0)), (ONE + q, (2, 0, 0, 0)), (1, (1, 1, 0, 0)))
    right = element((1, (0, 0, 0, 1)), (q**2 + q**3, (2, 0, 0, 0)), (-q, (1, 1, 0, 0)))
    return left, right
