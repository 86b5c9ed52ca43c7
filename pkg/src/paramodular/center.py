"""The center: generators Z1, Z2, Z3, centrality tests, bases and ranks."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .coeffs import PolyQ
from .hecke import (
    GENERATORS,
    HeckeElement,
    Monomial,
    alpha,
    element,
    gen,
    monomial_basis,
    mul,
)

q = PolyQ.q()
RANK_POINTS = (2, 3, 5)


class CenterMonomial(NamedTuple):
    """Exponents of Z1, Z2, Z3."""

    a: int
    b: int
    c: int

    @property
    def degree(self) -> int:
        return self.a + 2 * (self.b + self.c)


def center_generators() -> tuple[HeckeElement, HeckeElement, HeckeElement]:
    """Z1 = X - (q^2-1)V, Z2 = (q-1)VX - (Y1+Y2), Z3 = V^2."""
    z1 = element((1, (0, 1, 0, 0)), (-(q**2 - 1), (1, 0, 0, 0)))
    z2 = element((q - 1, (1, 1, 0, 0)), (-1, (0, 0, 1, 0)), (-1, (0, 0, 0, 1)))
    z3 = element((1, (2, 0, 0, 0)))
    return z1, z2, z3


def is_central(h: HeckeElement) -> bool:
    # the four generators generate the algebra, so they suffice
    return all(mul(h, g) == mul(g, h) for g in map(gen, GENERATORS))


def center_monomials(k: int) -> list[CenterMonomial]:
    """Solutions of a + 2(b+c) = k in ascending lex order on (a, b, c)."""
    out = []
    for a in range(k % 2, k + 1, 2):
        r = (k - a) // 2
        for b in range(r + 1):
            out.append(CenterMonomial(a, b, r - b))
    return sorted(out)


_powers: dict = {}


def _zpow(i: int, e: int) -> HeckeElement:
    key = (i, e)
    if key not in _powers:
        z = center_generators()[i]
        _powers[key] = HeckeElement.scalar(1) if e == 0 else mul(_zpow(i, e - 1), z)
    return _powers[key]


def center_element(cm: CenterMonomial) -> HeckeElement:
    return mul(mul(_zpow(0, cm.a), _zpow(1, cm.b)), _zpow(2, cm.c))


def center_basis(k: int) -> list[HeckeElement]:
    return [center_element(cm) for cm in center_monomials(k)]


def center_rank(k: int) -> int:
    return len(center_monomials(k))


def center_hilbert_coeffs(order: int) -> list[int]:
    """Coefficients of 1/((1-t)(1-t^2)^2) through t^order, by series division."""
    den = [0] * (order + 1)
    # (1-t)(1-t^2)^2 = 1 - t - 2t^2 + 2t^3 + t^4 - t^5
    for i, c in enumerate((1, -1, -2, 2, 1, -1)):
        if i <= order:
            den[i] = c
    out: list[int] = []
    for k in range(order + 1):
        acc = 1 if k == 0 else 0
        for j in range(1, k + 1):
            acc -= den[j] * out[k - j]
        out.append(acc)
    return out


def hecke_hilbert_coeffs(order: int) -> list[int]:
    """Coefficients of (1-t^4)/((1-t)^2(1-t^2)^2) through t^order."""
    num = {0: 1, 4: -1}
    # (1-t)^2 (1-t^2)^2 = 1 - 2t - t^2 + 4t^3 - t^4 - 2t^5 + t^6
    den = dict(enumerate((1, -2, -1, 4, -1, -2, 1)))
    out: list[int] = []
    for k in range(order + 1):
        acc = num.get(k, 0)
        for j in range(1, k + 1):
            acc -= den.get(j, 0) * out[k - j]
        out.append(acc)
    return out


def rank_at(rows: Sequence[Sequence[PolyQ]], qv: int) -> int:
    """Rank over Q of a matrix of Z[q] entries specialized at q = qv."""
    if not rows:
        return 0
    data = [[QQ(int(p(qv))) for p in row] for row in rows]
    return DomainMatrix(data, (len(data), len(data[0])), QQ).rank()


def coefficient_matrix(elements: Sequence[HeckeElement], basis: Sequence[Monomial]) -> list[list[PolyQ]]:
    return [[h.coefficient(m) for m in basis] for h in elements]


def center_basis_rank(k: int, points: Sequence[int] = RANK_POINTS) -> list[int]:
    """Rank of the center basis expanded in the degree-k monomial basis, at each q."""
    M = coefficient_matrix(center_basis(k), monomial_basis(k))
    return [rank_at(M, p) for p in points]


def is_alpha_invariant(h: HeckeElement) -> bool:
    return alpha(h) == h
