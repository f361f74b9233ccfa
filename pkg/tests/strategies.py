"""
Hypothesis strategies for exact polynomials.
"""
from hypothesis import strategies as st

from symbolic.exactpoly import PolyExpr
from symbolic.symbols import STANDARD, const, sym

POLY_NAMES = ("t", "x", "y", "rho", "m", "m_inv")


@st.composite
def polys(draw, names=POLY_NAMES, max_terms=4, max_degree=3):
    """Small random polynomials over the standard universe."""
    total = PolyExpr.zero(STANDARD)
    for _ in range(draw(st.integers(0, max_terms))):
        numerator = draw(st.integers(-6, 6))
        denominator = draw(st.integers(1, 6))
        term = const(numerator, denominator)
        for name in draw(st.lists(st.sampled_from(names), max_size=max_degree)):
            term = term * sym(name)
        total = total + term
    return total
