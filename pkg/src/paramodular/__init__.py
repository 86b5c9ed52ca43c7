"""Exact arithmetic in the paramodular Hecke algebra of prime level.

The algebra is generated over Z[q] by V, X, Y1, Y2.  Elements can be held in
the monomial normal-form basis (``HeckeElement``) or in the double-coset basis
(``CosetElement``), converted between the two, evaluated under characters,
and tested against the structure theorems via ``paramodular.checks``.
"""

from .center import center_basis, center_generators, center_rank, is_central
from .characters import Character, index_character, series_certificate
from .coeffs import MPoly, PolyQ, TruncSeries, parse_poly
from .cosets import (
    CosetElement,
    CosetLabel,
    T,
    coset_enumerate,
    coset_mul,
    coset_to_monomial,
    monomial_to_coset,
    t_qk,
)
from .expr import parse_coset, parse_element, parse_hecke
from .hecke import HeckeElement, Monomial, alpha, beta, gen, monomial_basis, mul

__all__ = [
    "Character",
    "CosetElement",
    "CosetLabel",
    "HeckeElement",
    "MPoly",
    "Monomial",
    "PolyQ",
    "T",
    "TruncSeries",
    "alpha",
    "beta",
    "center_basis",
    "center_generators",
    "center_rank",
    "coset_enumerate",
    "coset_mul",
    "coset_to_monomial",
    "gen",
    "index_character",
    "is_central",
    "monomial_basis",
    "monomial_to_coset",
    "mul",
    "parse_coset",
    "parse_element",
    "parse_hecke",
    "parse_poly",
    "series_certificate",
    "t_qk",
]
