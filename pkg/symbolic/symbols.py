"""
The standard symbol universe shared by every symbolic module.
"""
from fractions import Fraction
from typing import Tuple

from symbolic.exactpoly import I_COEFF, PolyExpr, Universe

COORDINATES = ("t", "x", "y", "z")

# Physical constants of the derivation chain
PHYSICAL_CONSTANTS = ("rho", "zeta", "m", "omega", "e", "B", "B_I", "q", "a", "v", "R")
INVERTIBLE = ("q", "v", "R", "m", "e")

# Formal gauge phases and the opaque symbols their derivatives generate
THETA_NAMES = ("theta", "theta_R", "theta_L")


def gauge_field_name(mu: int) -> str:
    return f"A_{mu}"


def gauge_gradient_name(mu: int, nu: int) -> str:
    """Symbol for the partial derivative d_mu A_nu."""
    return f"dA_{mu}{nu}"


def phase_gradient_name(mu: int, theta: str) -> str:
    return f"d{mu}_{theta}"


def phase_hessian_name(mu: int, nu: int, theta: str) -> str:
    low, high = sorted((mu, nu))
    return f"dd{low}{high}_{theta}"


def _constants() -> Tuple[str, ...]:
    names = list(PHYSICAL_CONSTANTS)
    names += [f"{name}_inv" for name in INVERTIBLE]
    names += [gauge_field_name(mu) for mu in range(4)]
    names += [gauge_gradient_name(mu, nu) for mu in range(4) for nu in range(4)]
    for theta in THETA_NAMES:
        names += [phase_gradient_name(mu, theta) for mu in range(4)]
        names += [phase_hessian_name(mu, nu, theta) for mu in range(4) for nu in range(mu, 4)]
    return tuple(names)


STANDARD = Universe(
    coordinates=COORDINATES,
    constants=_constants(),
    inverses=tuple((name, f"{name}_inv") for name in INVERTIBLE),
)


def sym(name: str) -> PolyExpr:
    """Symbol of the standard universe as a PolyExpr."""
    return PolyExpr.symbol(STANDARD, name)


def const(numerator: int, denominator: int = 1) -> PolyExpr:
    return PolyExpr.constant(STANDARD, Fraction(numerator, denominator))


def zero() -> PolyExpr:
    return PolyExpr.zero(STANDARD)


def imag_unit() -> PolyExpr:
    return PolyExpr.constant(STANDARD, I_COEFF)


def coordinate_names(spatial: int) -> Tuple[str, ...]:
    """Coordinate names in index order: (t, x) for (1+1), (t, x, y) for (2+1)..."""
    return COORDINATES[: spatial + 1]
