from __future__ import annotations

from hypothesis import HealthCheck, settings, strategies as st

from paramodular.coeffs import MPoly, PolyQ
from paramodular.hecke import HeckeElement, monomial_basis

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

coeff_ints = st.integers(min_value=-50, max_value=50)


@st.composite
def polys(draw, max_deg: int = 8, nonzero: bool = False) -> PolyQ:
    p = PolyQ(draw(st.lists(coeff_ints, min_size=1, max_size=max_deg + 1)))
    if nonzero and not p:
        p = PolyQ.const(draw(st.integers(1, 9)))
    return p


@st.composite
def mpolys(draw, variables=("q", "lam"), max_exp: int = 4, max_terms: int = 6) -> MPoly:
    n = len(variables)
    exps = st.tuples(*[st.integers(0, max_exp)] * n)
    terms = draw(st.dictionaries(exps, coeff_ints, max_size=max_terms))
    return MPoly(variables, terms)


@st.composite
def elements(draw, max_degree: int = 4, max_terms: int = 4) -> HeckeElement:
    basis = [m for k in range(max_degree + 1) for m in monomial_basis(k)]
    mons = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=max_terms))
    return HeckeElement({m: draw(polys(max_deg=2)) for m in mons})
