"""The double-coset basis: labels (delta, (a, b, c)) and the two product tables.

A label ``(delta, a, b, c)`` stands for ``V^delta T(a, b, c)`` with
``(a, b, c)`` in S = {0 <= a <= c - a, 0 <= b <= c - b}; its degree is
``c + delta``.  Left multiplication by X = T(0,0,1) and Y1 = T(0,1,2) is
table driven; V toggles delta and V^2 T(a,b,c) = T(a+1, b+1, c+2).
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, NamedTuple, Union

from .coeffs import PolyQ
from .hecke import (
    ONE,
    HeckeElement,
    Monomial,
    V,
    X,
    Y1,
    Y2,
    alpha,
    format_terms,
    gen,
    mul,
    q,
)

Scalar = Union[PolyQ, int]
ZERO = PolyQ()


class InvalidTripleError(ValueError):
    pass


class CosetLabel(NamedTuple):
    delta: int
    a: int
    b: int
    c: int

    @property
    def degree(self) -> int:
        return self.c + self.delta

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def sort_key(self) -> tuple:
        return (self.degree, self.delta, self.a, self.b, self.c)

    def __str__(self) -> str:
        t = f"T({self.a},{self.b},{self.c})"
        return "W*" + t if self.delta else t


def in_D(a: int, b: int, c: int) -> bool:
    return 0 <= a <= c and 0 <= b <= c


def in_S(a: int, b: int, c: int) -> bool:
    return 0 <= a <= c - a and 0 <= b <= c - b


def normalize_triple(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Map a triple of D to its representative in S: T(a,b,c) = T(c-a,b,c) = T(a,c-b,c)."""
    if not in_D(a, b, c):
        raise InvalidTripleError(f"({a},{b},{c}) is not in D")
    return (min(a, c - a), min(b, c - b), c)


def label(delta: int, a: int, b: int, c: int) -> CosetLabel:
    """Validated, normalized label."""
    if delta not in (0, 1):
        raise InvalidTripleError(f"delta must be 0 or 1, got {delta}")
    return CosetLabel(delta, *normalize_triple(a, b, c))


def _check_S(a: int, b: int, c: int) -> None:
    if not in_S(a, b, c):
        raise InvalidTripleError(f"({a},{b},{c}) is not in S")


class CosetElement:
    """Finite Z[q]-combination of double cosets."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean: dict = {}
        for lab, c in (terms or {}).items():
            c = PolyQ.coerce(c)
            lab = CosetLabel(*lab)
            _check_S(*lab.triple)
            if lab.delta not in (0, 1):
                raise InvalidTripleError(f"bad delta in {lab!r}")
            if c:
                clean[lab] = c
        self.terms = clean

    @classmethod
    def _from_clean(cls, terms: dict) -> CosetElement:
        e = cls.__new__(cls)
        e.terms = {k: v for k, v in terms.items() if v}
        return e

    @classmethod
    def single(cls, lab: CosetLabel, c: Scalar = 1) -> CosetElement:
        return cls({lab: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CosetElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[CosetLabel, PolyQ]]:
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, lab: CosetLabel) -> PolyQ:
        return self.terms.get(CosetLabel(*lab), ZERO)

    def __add__(self, other: CosetElement) -> CosetElement:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return CosetElement._from_clean(out)

    def __neg__(self) -> CosetElement:
        return CosetElement._from_clean({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: CosetElement) -> CosetElement:
        return self + (-other)

    def scale(self, c: Scalar) -> CosetElement:
        c = PolyQ.coerce(c)
        return CosetElement._from_clean({k: c * v for k, v in self.terms.items()})

    def __str__(self) -> str:
        return format_terms((str(k), c) for k, c in self)

    def __repr__(self) -> str:
        return f"CosetElement({str(self)!r})"


def T(a: int, b: int, c: int, delta: int = 0) -> CosetElement:
    return CosetElement.single(label(delta, a, b, c))


IDENTITY = CosetLabel(0, 0, 0, 0)


def _accumulate(acc: dict, items: Iterable[tuple[CosetLabel, PolyQ]], scale: PolyQ = ONE) -> None:
    for k, v in items:
        v = scale * v
        acc[k] = acc[k] + v if k in acc else v


# ---------------------------------------------------------------------------
# multiplication tables

Row = tuple[str, Callable[[int, int, int], bool], tuple[PolyQ, ...]]

_q2, _q3, _q4 = q**2, q**3, q**4

DEG1_ROWS: list[Row] = [
    ("b<a, a=c-a", lambda a, b, c: b < a and a == c - a, (ONE, _q2, ZERO, ZERO, _q2 - 1)),
    ("b<a, a+1=c-a", lambda a, b, c: b < a and a + 1 == c - a, (ONE, _q2, q + 1, _q3 + _q2, _q2 - 1)),
    ("b<a, a+2<=c-a", lambda a, b, c: b < a and a + 2 <= c - a, (ONE, _q2, q, _q3, _q2 - 1)),
    ("b=a, b=c-b", lambda a, b, c: b == a and b == c - b, (ONE, ZERO, ZERO, ZERO, ZERO)),
    ("b=a, b+1=c-b", lambda a, b, c: b == a and b + 1 == c - b,
     (ONE, q + 1, q + 1, _q3 + 2 * _q2 + q, q - 1)),
    ("b=a, b+2<=c-b", lambda a, b, c: b == a and b + 2 <= c - b, (ONE, q, q, _q3, q - 1)),
    ("a<b, b=c-b", lambda a, b, c: a < b and b == c - b, (ONE, ZERO, _q2, ZERO, _q2 - 1)),
    ("a<b, b+1=c-b", lambda a, b, c: a < b and b + 1 == c - b, (ONE, q + 1, _q2, _q3 + _q2, _q2 - 1)),
    ("a<b, b+2<=c-b", lambda a, b, c: a < b and b + 2 <= c - b, (ONE, q, _q2, _q3, _q2 - 1)),
]

DEG2_ROWS: list[Row] = [
    ("b<a, a=c-a", lambda a, b, c: b < a and a == c - a, (q, ZERO, ZERO, q - 1, ZERO, ZERO)),
    ("b<a, a+1=c-a", lambda a, b, c: b < a and a + 1 == c - a, (q, _q2, ZERO, q - 1, _q2 - 1, ZERO)),
    ("b<a, a+2=c-a", lambda a, b, c: b < a and a + 2 == c - a,
     (q, _q2 - q, _q3 + _q2, q - 1, _q2 - q, ZERO)),
    ("b<a, a+3<=c-a", lambda a, b, c: b < a and a + 3 <= c - a, (q, _q2 - q, _q3, q - 1, _q2 - q, ZERO)),
    ("b=a, a=c-a", lambda a, b, c: b == a and a == c - a, (ONE, ZERO, ZERO, ZERO, ZERO, ZERO)),
    ("b=a, a+1=c-a", lambda a, b, c: b == a and a + 1 == c - a, (ONE, _q2, ZERO, ZERO, _q2 - 1, ZERO)),
    ("b=a, a+2=c-a", lambda a, b, c: b == a and a + 2 == c - a,
     (ONE, _q2 - q, _q3 + _q2, ZERO, _q2 - q, ZERO)),
    ("b=a, a+3<=c-a", lambda a, b, c: b == a and a + 3 <= c - a, (ONE, _q2 - q, _q3, ZERO, _q2 - q, ZERO)),
    ("a<b, a+2=c-a, b=c-b", lambda a, b, c: a < b and a + 2 == c - a and b == c - b,
     (ONE, _q3 - _q2, _q4 + _q3, ZERO, _q3 - _q2, ZERO)),
    ("a<b, a+2=c-a, b+1=c-b", lambda a, b, c: a < b and a + 2 == c - a and b + 1 == c - b,
     (ONE, _q3 - _q2, _q4 + _q3, ZERO, _q3 - _q2, _q4 - _q2)),
    ("a<b, a+2=c-a, b+2<=c-b", lambda a, b, c: a < b and a + 2 == c - a and b + 2 <= c - b,
     (ONE, _q3 - _q2, _q4 + _q3, ZERO, _q3 - _q2, _q4 - _q3)),
    ("a<b, a+2<c-a, b=c-b", lambda a, b, c: a < b and a + 2 < c - a and b == c - b,
     (ONE, _q3 - _q2, _q4, ZERO, _q3 - _q2, ZERO)),
    ("a<b, a+2<c-a, b+1=c-b", lambda a, b, c: a < b and a + 2 < c - a and b + 1 == c - b,
     (ONE, _q3 - _q2, _q4, ZERO, _q3 - _q2, _q4 - _q2)),
    ("a<b, a+2<c-a, b+2<=c-b", lambda a, b, c: a < b and a + 2 < c - a and b + 2 <= c - b,
     (ONE, _q3 - _q2, _q4, ZERO, _q3 - _q2, _q4 - _q3)),
]


def _select(rows: list[Row], a: int, b: int, c: int) -> tuple[str, tuple[PolyQ, ...]]:
    _check_S(a, b, c)
    hits = [(name, coeffs) for name, pred, coeffs in rows if pred(a, b, c)]
    assert len(hits) == 1, f"row selection for ({a},{b},{c}) matched {len(hits)} rows"
    return hits[0]


def deg1_row(a: int, b: int, c: int) -> tuple[str, tuple[PolyQ, ...]]:
    """Row name and (n1, ..., n5) for X * T(a, b, c)."""
    return _select(DEG1_ROWS, a, b, c)


def deg2_row(a: int, b: int, c: int) -> tuple[str, tuple[PolyQ, ...]]:
    """Row name and (m1, ..., m6) for Y1 * T(a, b, c)."""
    return _select(DEG2_ROWS, a, b, c)


def deg1_targets(a: int, b: int, c: int) -> list[tuple[int, int, int, int]]:
    return [(0, a, b, c + 1), (0, a, b + 1, c + 1), (0, a + 1, b, c + 1),
            (0, a + 1, b + 1, c + 1), (1, a, b, c)]


def deg2_targets(a: int, b: int, c: int) -> list[tuple[int, int, int, int]]:
    return [(0, a, b + 1, c + 2), (0, a + 1, b + 1, c + 2), (0, a + 2, b + 1, c + 2),
            (1, a, b, c + 1), (1, a + 1, b, c + 1), (1, a + 1, b + 1, c + 1)]


def _emit(coeffs: tuple[PolyQ, ...], targets: list[tuple[int, int, int, int]]) -> CosetElement:
    acc: dict = {}
    for coef, (d, e, f, g) in zip(coeffs, targets):
        # coefficient vanishes when the target triple leaves S
        if coef and in_S(e, f, g):
            _accumulate(acc, [(label(d, e, f, g), coef)])
    return CosetElement._from_clean(acc)


def mul_X_coset(a: int, b: int, c: int) -> CosetElement:
    """X * T(a, b, c) from the degree-1 table."""
    _, coeffs = deg1_row(a, b, c)
    return _emit(coeffs, deg1_targets(a, b, c))


def mul_Y1_coset(a: int, b: int, c: int) -> CosetElement:
    """Y1 * T(a, b, c) from the degree-2 table."""
    _, coeffs = deg2_row(a, b, c)
    return _emit(coeffs, deg2_targets(a, b, c))


def alpha_coset(e: CosetElement) -> CosetElement:
    return CosetElement._from_clean({CosetLabel(d, b, a, c): v for (d, a, b, c), v in e.terms.items()})


def _v_label(lab: CosetLabel) -> CosetLabel:
    d, a, b, c = lab
    return CosetLabel(1, a, b, c) if d == 0 else CosetLabel(0, a + 1, b + 1, c + 2)


def _v_times(e: CosetElement) -> CosetElement:
    return CosetElement._from_clean({_v_label(k): v for k, v in e.terms.items()})


def _gen_on_label(g: str, lab: CosetLabel) -> CosetElement:
    d, a, b, c = lab
    if g == V:
        return CosetElement._from_clean({_v_label(lab): ONE})
    if d == 1:
        # g V = V g' with X' = X, Y1' = Y2, Y2' = Y1
        inner = {X: X, Y1: Y2, Y2: Y1}[g]
        return _v_times(_gen_on_label(inner, CosetLabel(0, a, b, c)))
    if g == X:
        return mul_X_coset(a, b, c)
    if g == Y1:
        return mul_Y1_coset(a, b, c)
    if g == Y2:
        return alpha_coset(mul_Y1_coset(b, a, c))
    raise ValueError(f"unknown generator {g!r}")


def mul_generator_coset(g: str, e: CosetElement) -> CosetElement:
    """Left multiplication of a coset element by a generator."""
    acc: dict = {}
    for lab, v in e.terms.items():
        _accumulate(acc, _gen_on_label(g, lab).terms.items(), v)
    return CosetElement._from_clean(acc)


def coset_enumerate(k: int) -> list[CosetLabel]:
    """All labels of degree k: delta = 0 with c = k, then delta = 1 with c = k - 1."""
    out = []
    for delta in (0, 1):
        c = k - delta
        if c < 0:
            continue
        for a in range(c // 2 + 1):
            for b in range(c // 2 + 1):
                out.append(CosetLabel(delta, a, b, c))
    return out


def t_qk(k: int) -> CosetElement:
    """T(q^k): the sum of all double cosets of degree k."""
    return CosetElement._from_clean({lab: ONE for lab in coset_enumerate(k)})


def monomial_to_coset(h: HeckeElement) -> CosetElement:
    """Express a monomial-basis element in the coset basis."""
    acc: dict = {}
    for m, v in h.terms.items():
        e = CosetElement.single(IDENTITY)
        for g in reversed(m.word()):
            e = mul_generator_coset(g, e)
        _accumulate(acc, e.terms.items(), v)
    return CosetElement._from_clean(acc)


class CosetEngine:
    """Coset-to-monomial conversion with a per-instance memo keyed by label."""

    def __init__(self) -> None:
        self._memo: dict[CosetLabel, HeckeElement] = {}
        self._v = gen(V)
        self._v2 = HeckeElement.monomial(Monomial(2, 0, 0, 0))
        self._x = gen(X)
        self._y1 = gen(Y1)

    def coset_to_monomial(self, lab: CosetLabel | tuple) -> HeckeElement:
        lab = label(*lab)
        hit = self._memo.get(lab)
        if hit is None:
            hit = self._compute(lab)
            self._memo[lab] = hit
        return hit

    def _compute(self, lab: CosetLabel) -> HeckeElement:
        d, a, b, c = lab
        if d == 1:
            return mul(self._v, self.coset_to_monomial((0, a, b, c)))
        if a >= 1 and b >= 1:
            return mul(self._v2, self.coset_to_monomial((0, a - 1, b - 1, c - 2)))
        if a > 0:
            return alpha(self.coset_to_monomial((0, 0, a, c)))
        if c == 0:
            return HeckeElement.scalar(1)
        # T(0,b,c) is the leading term of X*T(0,0,c-1) (b = 0) or of
        # Y1*T(0,b-1,c-2) (b >= 1); every other term is already known.
        if b == 0:
            src, prod, left = (0, 0, 0, c - 1), mul_X_coset(0, 0, c - 1), self._x
        else:
            src, prod, left = (0, 0, b - 1, c - 2), mul_Y1_coset(0, b - 1, c - 2), self._y1
        lead = prod.coefficient(lab)
        assert lead == ONE, f"leading coefficient of {lab} is {lead}"
        out = mul(left, self.coset_to_monomial(src))
        for other, v in prod.terms.items():
            if other != lab:
                out = out - self.coset_to_monomial(other).scale(v)
        return out

    def to_monomial(self, e: CosetElement) -> HeckeElement:
        out = HeckeElement()
        for lab, v in e.terms.items():
            out = out + self.coset_to_monomial(lab).scale(v)
        return out

    def coset_mul(self, e1: CosetElement, e2: CosetElement) -> CosetElement:
        """Product of coset elements, computed through the monomial basis."""
        return monomial_to_coset(mul(self.to_monomial(e1), self.to_monomial(e2)))

    def t_qk_monomial(self, k: int) -> HeckeElement:
        return self.to_monomial(t_qk(k))


_default = CosetEngine()


def default_engine() -> CosetEngine:
    return _default


def coset_to_monomial(lab: CosetLabel | tuple) -> HeckeElement:
    return _default.coset_to_monomial(lab)


def coset_mul(e1: CosetElement, e2: CosetElement) -> CosetElement:
    return _default.coset_mul(e1, e2)
