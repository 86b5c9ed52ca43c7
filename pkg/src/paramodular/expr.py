"""Text form of algebra elements in either basis.

Grammar::

    element := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := scalar | atom
    scalar  := integer | 'q' ['^' n] | '(' Z[q] expression ')' ['^' n]
    atom    := ('V' | 'X' | 'Y1' | 'Y2') ['^' n] | 'T(' a ',' b ',' c ')' | 'W'

``W`` is the generator V written as a coset prefix, so ``W*T(0,0,1)`` is the
w-shifted coset.  Atoms multiply in the algebra in the order written; scalar
factors are central and may appear anywhere in a term.  The printed form of
any element parses back to the same element.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coeffs import PolyParseError, PolyQ, _PolyParser
from .cosets import (
    IDENTITY,
    CosetElement,
    CosetEngine,
    default_engine,
    label,
    mul_generator_coset,
)
from .hecke import GENERATORS, HeckeElement, V, mul, word_element

_INT = re.compile(r"\d+")
_NAME = re.compile(r"Y1|Y2|V|X|T|W|q")

Atom = tuple  # ("gen", name, n) | ("T", a, b, c) | ("W",)


@dataclass(frozen=True)
class Term:
    coef: PolyQ
    atoms: tuple[Atom, ...]


@dataclass(frozen=True)
class ElementExpr:
    terms: tuple[Term, ...]

    def to_hecke(self, engine: CosetEngine | None = None) -> HeckeElement:
        engine = engine or default_engine()
        out = HeckeElement()
        for t in self.terms:
            h = HeckeElement.scalar(t.coef)
            for atom in t.atoms:
                h = mul(h, _atom_hecke(atom, engine))
            out = out + h
        return out

    def to_coset(self, engine: CosetEngine | None = None) -> CosetElement:
        engine = engine or default_engine()
        out = CosetElement()
        for t in self.terms:
            # act on the identity coset from the right end of the word
            e = CosetElement.single(IDENTITY)
            for atom in reversed(t.atoms):
                e = _atom_on_coset(atom, e, engine)
            out = out + e.scale(t.coef)
        return out

    def is_coset_only(self) -> bool:
        return all(a[0] in ("T", "W") for t in self.terms for a in t.atoms)

    def has_cosets(self) -> bool:
        return any(a[0] in ("T", "W") for t in self.terms for a in t.atoms)


def _atom_hecke(atom: Atom, engine: CosetEngine) -> HeckeElement:
    if atom[0] == "gen":
        return word_element((atom[1],) * atom[2])
    if atom[0] == "W":
        return word_element((V,))
    return engine.coset_to_monomial(label(0, *atom[1:]))


def _atom_on_coset(atom: Atom, e: CosetElement, engine: CosetEngine) -> CosetElement:
    if atom[0] == "gen":
        for _ in range(atom[2]):
            e = mul_generator_coset(atom[1], e)
        return e
    if atom[0] == "W":
        return mul_generator_coset(V, e)
    t = CosetElement.single(label(0, *atom[1:]))
    if e == CosetElement.single(IDENTITY):
        return t
    return engine.coset_mul(t, e)


class _ElementParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.poly = _PolyParser(text, {"q": PolyQ.q(), "__const__": PolyQ.const})

    def error(self, expected: str) -> PolyParseError:
        return PolyParseError(self.text, self.pos, expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(repr(ch))
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error("nonnegative integer")
        self.pos = m.end()
        return int(m.group())

    def exponent(self) -> int:
        if self.peek() != "^":
            return 1
        self.pos += 1
        self.skip_ws()
        if not _INT.match(self.text, self.pos):
            raise self.error("nonnegative integer exponent")
        return self.integer()

    def parse(self) -> ElementExpr:
        if not self.peek():
            raise self.error("term")
        terms = []
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        while True:
            t = self.term()
            terms.append(Term(t.coef * sign, t.atoms))
            op = self.peek()
            if op in ("+", "-"):
                sign = -1 if op == "-" else 1
                self.pos += 1
            elif op == "":
                break
            else:
                raise self.error("'+', '-', '*' or end of input")
        return ElementExpr(tuple(terms))

    def term(self) -> Term:
        coef = PolyQ.const(1)
        atoms: list[Atom] = []
        while True:
            scalar, atom = self.factor()
            if atom is None:
                coef = coef * scalar
            else:
                atoms.append(atom)
            if self.peek() != "*":
                return Term(coef, tuple(atoms))
            self.pos += 1

    def factor(self) -> tuple[PolyQ | None, Atom | None]:
        ch = self.peek()
        if ch == "(" or ch.isdigit():
            return self._poly_factor(), None
        m = _NAME.match(self.text, self.pos)
        if not m:
            raise self.error("coefficient, generator, 'T(' or 'W'")
        name = m.group()
        if name == "q":
            return self._poly_factor(), None
        self.pos = m.end()
        if name == "W":
            return None, ("W",)
        if name == "T":
            self.expect("(")
            a = self.integer()
            self.expect(",")
            b = self.integer()
            self.expect(",")
            c = self.integer()
            self.expect(")")
            label(0, a, b, c)  # validates
            return None, ("T", a, b, c)
        assert name in GENERATORS
        return None, ("gen", name, self.exponent())

    def _poly_factor(self) -> PolyQ:
        self.poly.pos = self.pos
        val = self.poly.factor()
        self.pos = self.poly.pos
        return val


def parse_element(text: str) -> ElementExpr:
    """Parse element text; raises PolyParseError with position and expected token."""
    return _ElementParser(text).parse()


def parse_hecke(text: str, engine: CosetEngine | None = None) -> HeckeElement:
    return parse_element(text).to_hecke(engine)


def parse_coset(text: str, engine: CosetEngine | None = None) -> CosetElement:
    return parse_element(text).to_coset(engine)
