"""
Seeded random polynomials for the randomized property checks.
"""
from fractions import Fraction
from typing import Sequence

import numpy as np

from symbolic.exactpoly import PolyExpr
from symbolic.gaugefields import GaugeFn, Potential
from symbolic.minkowski import Dim
from symbolic.symbols import STANDARD, coordinate_names, sym


def random_poly(
    rng: np.random.Generator,
    names: Sequence[str],
    max_degree: int = 3,
    max_terms: int = 4,
    max_coefficient: int = 9,
) -> PolyExpr:
    """
    Random polynomial in ``names`` with small rational coefficients.

    Args:
        rng: numpy Generator, seeded by the caller
        names: Symbols of the standard universe to draw from
        max_degree: Largest total degree of a monomial
        max_terms: Upper bound on the number of monomials
        max_coefficient: Bound on numerator and denominator

    Returns:
        PolyExpr over the standard universe
    """
    result = PolyExpr.zero(STANDARD)
    for _ in range(int(rng.integers(1, max_terms + 1))):
        numerator = int(rng.integers(-max_coefficient, max_coefficient + 1))
        denominator = int(rng.integers(1, max_coefficient + 1))
        term = PolyExpr.constant(STANDARD, Fraction(numerator, denominator))
        for _ in range(int(rng.integers(0, max_degree + 1))):
            term = term * sym(names[int(rng.integers(len(names)))])
        result = result + term
    return result


def random_potential(rng: np.random.Generator, dim: Dim) -> Potential:
    names = coordinate_names(dim.spatial) + ("rho", "zeta")
    return Potential.of(dim, [random_poly(rng, names) for _ in range(dim.total)])


def random_gauge(rng: np.random.Generator, dim: Dim) -> GaugeFn:
    names = coordinate_names(dim.spatial) + ("rho",)
    return GaugeFn(dim, random_poly(rng, names, max_degree=4))
