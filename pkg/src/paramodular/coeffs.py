"""Exact scalar arithmetic: Z[q], sparse multivariate polynomials, truncated series.

``PolyQ`` is the coefficient ring of the Hecke algebra.  ``MPoly`` holds
character values, which live in Z[q, lam] (or Z[q, lam, mu]).  ``TruncSeries``
is a power series in ``t`` truncated at a fixed order; rational-function
identities are checked by cross-multiplying these, never by building
fractions.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union


class NonDivisibleError(ArithmeticError):
    """Raised by exact division when the remainder is nonzero."""


class PolyParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text = text
        self.pos = pos
        self.expected = expected
        super().__init__(f"parse error at position {pos} in {text!r}: expected {expected}")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class PolyQ:
    """Dense univariate polynomial in ``q`` with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; the zero polynomial is the
    empty tuple.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)
        self._hash = None

    # constructors
    @classmethod
    def const(cls, n: int) -> PolyQ:
        return cls((n,))

    @classmethod
    def q(cls, power: int = 1) -> PolyQ:
        return cls((0,) * power + (1,))

    @staticmethod
    def coerce(x: Union[PolyQ, int]) -> PolyQ:
        if isinstance(x, PolyQ):
            return x
        if isinstance(x, int):
            return PolyQ((x,))
        raise TypeError(f"cannot coerce {type(x).__name__} to PolyQ")

    # structure
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = PolyQ.const(other)
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("PolyQ", self.coeffs))
        return self._hash

    # arithmetic
    def __add__(self, other: Union[PolyQ, int]) -> PolyQ:
        other = PolyQ.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    __radd__ = __add__

    def __neg__(self) -> PolyQ:
        return PolyQ(-c for c in self.coeffs)

    def __sub__(self, other: Union[PolyQ, int]) -> PolyQ:
        return self + (-PolyQ.coerce(other))

    def __rsub__(self, other: Union[PolyQ, int]) -> PolyQ:
        return PolyQ.coerce(other) - self

    def __mul__(self, other: Union[PolyQ, int]) -> PolyQ:
        if isinstance(other, int):
            return PolyQ(c * other for c in self.coeffs)
        if not isinstance(other, PolyQ):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyQ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> PolyQ:
        if n < 0:
            raise ValueError("negative exponent")
        result, base = PolyQ.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, den: Union[PolyQ, int]) -> PolyQ:
        """Quotient ``self / den``; raises NonDivisibleError on a nonzero remainder."""
        den = PolyQ.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        d = den.coeffs
        lead = d[-1]
        if len(rem) < len(d):
            if rem:
                raise NonDivisibleError(f"{den} does not divide {self}")
            return PolyQ()
        quot = [0] * (len(rem) - len(d) + 1)
        for shift in range(len(quot) - 1, -1, -1):
            top = rem[shift + len(d) - 1]
            if top % lead:
                raise NonDivisibleError(f"{den} does not divide {self}")
            f = top // lead
            quot[shift] = f
            if f:
                for j, c in enumerate(d):
                    rem[shift + j] -= f * c
        if any(rem):
            raise NonDivisibleError(f"{den} does not divide {self}")
        return PolyQ(quot)

    def __call__(self, value):
        """Evaluate by Horner's rule; ``value`` may be int, Fraction or MPoly."""
        acc = 0 * value if not isinstance(value, int) else 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # text
    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({str(self)!r})"

    def is_monomial(self) -> bool:
        """True for a single term ``c*q^i`` (including constants)."""
        return sum(1 for c in self.coeffs if c) == 1


def _fmt_term(c: int, power: int, var: str) -> str:
    if power == 0:
        return str(c)
    v = var if power == 1 else f"{var}^{power}"
    if c == 1:
        return v
    if c == -1:
        return "-" + v
    return f"{c}*{v}"


def format_poly(coeffs: Sequence[int], var: str = "q") -> str:
    """Ascending-power text form, e.g. ``q+2*q^2+q^3``."""
    parts = [_fmt_term(c, i, var) for i, c in enumerate(coeffs) if c]
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


# ---------------------------------------------------------------------------
# parsing of Z[q] expressions: integers, q, ^, *, +, -, parentheses

class _PolyParser:
    def __init__(self, text: str, ring_vars: dict):
        self.text = text
        self.pos = 0
        self.vars = ring_vars

    def peek(self) -> str:
        m = re.compile(r"\s*").match(self.text, self.pos)
        p = m.end()
        return self.text[p] if p < len(self.text) else ""

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.text.startswith(ch, self.pos):
            self.pos += len(ch)
        else:
            raise PolyParseError(self.text, self.pos, repr(ch))

    def parse(self):
        val = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise PolyParseError(self.text, self.pos, "end of input")
        return val

    def expr(self):
        self.skip_ws()
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.skip_ws()
            self.pos += 1
        val = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.skip_ws()
            self.pos += 1
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() == "*":
            self.skip_ws()
            self.pos += 1
            val = val * self.factor()
        return val

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.skip_ws()
            self.pos += 1
            self.skip_ws()
            m = re.compile(r"\d+").match(self.text, self.pos)
            if not m:
                raise PolyParseError(self.text, self.pos, "nonnegative integer exponent")
            self.pos = m.end()
            base = base ** int(m.group())
        return base

    def atom(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            raise PolyParseError(self.text, self.pos, "integer, variable or '('")
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            val = self.expr()
            self.expect(")")
            return val
        if ch.isdigit():
            m = re.compile(r"\d+").match(self.text, self.pos)
            self.pos = m.end()
            return self.vars["__const__"](int(m.group()))
        m = re.compile(r"[A-Za-z_][A-Za-z_0-9]*").match(self.text, self.pos)
        if m and m.group() in self.vars:
            self.pos = m.end()
            return self.vars[m.group()]
        raise PolyParseError(self.text, self.pos, "integer, variable or '('")


def parse_poly(text: str) -> PolyQ:
    """Parse a Z[q] expression such as ``q^3+2*q^2+q``."""
    return _PolyParser(text, {"q": PolyQ.q(), "__const__": PolyQ.const}).parse()


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class MPoly:
    """Sparse polynomial over Z in a fixed, ordered tuple of variables."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: dict | None = None):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match variables {self.vars}")
            if c:
                clean[tuple(exp)] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, variables: Sequence[str], c: int) -> MPoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str, power: int = 1) -> MPoly:
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = power
        return cls(variables, {tuple(exp): 1})

    @classmethod
    def from_polyq(cls, variables: Sequence[str], p: PolyQ, name: str = "q") -> MPoly:
        variables = tuple(variables)
        k = variables.index(name)
        terms = {}
        for i, c in enumerate(p.coeffs):
            exp = [0] * len(variables)
            exp[k] = i
            terms[tuple(exp)] = c
        return cls(variables, terms)

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(f"incompatible variable sets {self.vars} and {other.vars}")
            return other
        if isinstance(other, int):
            return MPoly.const(self.vars, other)
        if isinstance(other, PolyQ):
            return MPoly.from_polyq(self.vars, other)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, PolyQ)):
            other = self._coerce(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other) -> MPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> MPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MPoly:
        if isinstance(other, int):
            return MPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MPoly:
        if n < 0:
            raise ValueError("negative exponent")
        result, base = MPoly.const(self.vars, 1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def leading(self) -> tuple[tuple[int, ...], int]:
        """Lex-largest term (first variable most significant)."""
        e = max(self.terms)
        return e, self.terms[e]

    def divexact(self, den) -> MPoly:
        """Exact quotient by multivariate division in lex order."""
        den = self._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        de, dc = den.leading()
        rem = self
        quot: dict = {}
        while rem:
            re_, rc = rem.leading()
            diff = tuple(a - b for a, b in zip(re_, de))
            if min(diff) < 0 or rc % dc:
                raise NonDivisibleError(f"{den} does not divide {self}")
            t = MPoly(self.vars, {diff: rc // dc})
            quot[diff] = rc // dc
            rem = rem - t * den
        return MPoly(self.vars, quot)

    def subs(self, values: dict):
        """Evaluate with every variable replaced by a value (all must be supplied)."""
        acc = 0
        for e, c in self.terms.items():
            term = c
            for name, k in zip(self.vars, e):
                if k:
                    term = term * values[name] ** k
            acc = acc + term
        return acc

    def to_polyq(self, name: str = "q") -> PolyQ:
        """Convert to PolyQ; only valid when no other variable occurs."""
        k = self.vars.index(name)
        coeffs: dict = {}
        for e, c in self.terms.items():
            if any(x for i, x in enumerate(e) if i != k):
                raise ValueError(f"{self} is not a polynomial in {name} alone")
            coeffs[e[k]] = c
        if not coeffs:
            return PolyQ()
        return PolyQ(coeffs.get(i, 0) for i in range(max(coeffs) + 1))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.vars, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __repr__(self) -> str:
        return f"MPoly({self.vars}, {str(self)!r})"


def parse_mpoly(text: str, variables: Sequence[str]) -> MPoly:
    """Parse an integer polynomial expression in the given variables."""
    variables = tuple(variables)
    env = {v: MPoly.var(variables, v) for v in variables}
    env["__const__"] = lambda n: MPoly.const(variables, n)
    return _PolyParser(text, env).parse()


def parse_rational(text: str, q: Fraction) -> Fraction:
    """Evaluate a Z[q] expression (or a plain fraction ``n/d``) at a rational q."""
    if re.fullmatch(r"\s*-?\d+\s*/\s*\d+\s*", text):
        return Fraction(text.replace(" ", ""))
    return parse_poly(text)(Fraction(q))


# ---------------------------------------------------------------------------
# truncated power series in t


class TruncSeries:
    """Power series ``sum coeffs[i] t^i`` known modulo ``t^(order+1)``.

    Coefficients are MPoly values over a common variable set.
    """

    __slots__ = ("order", "coeffs", "vars")

    def __init__(self, order: int, coeffs: Sequence, variables: Sequence[str]):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        self.vars = tuple(variables)
        cs = []
        for c in list(coeffs)[: order + 1]:
            if isinstance(c, MPoly):
                if c.vars != self.vars:
                    raise ValueError(f"coefficient over {c.vars}, expected {self.vars}")
            elif isinstance(c, PolyQ):
                c = MPoly.from_polyq(self.vars, c)
            else:
                c = MPoly.const(self.vars, int(c))
            cs.append(c)
        zero = MPoly(self.vars)
        cs.extend(zero for _ in range(order + 1 - len(cs)))
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, order: int, variables: Sequence[str]) -> TruncSeries:
        return cls(order, [1], variables)

    def _check(self, other: TruncSeries) -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError("expected TruncSeries")
        if other.order != self.order:
            raise ValueError(f"incompatible orders {self.order} and {other.order}")
        if other.vars != self.vars:
            raise ValueError(f"incompatible variable sets {self.vars} and {other.vars}")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.vars)

    def __neg__(self) -> TruncSeries:
        return TruncSeries(self.order, [-a for a in self.coeffs], self.vars)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        n = self.order
        out = []
        for k in range(n + 1):
            acc = MPoly(self.vars)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return TruncSeries(n, out, self.vars)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.order, self.vars, self.coeffs) == (other.order, other.vars, other.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        parts = [f"({c})*t^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) + f" + O(t^{self.order + 1})" if parts else f"O(t^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncSeries({self.order}, {str(self)!r})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b
