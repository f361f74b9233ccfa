"""
Electromagnetic potentials: field extraction, gauge transformations, the
rest-frame covariant potential and field tensor, and the classical formulas
that fix the field strengths of the oscillator couplings.

Conventions:
    A^mu = (phi, A_vec) is contravariant.
    E_i = -d_i phi - d_t A^i.
    B = d_x A^y - d_y A^x with two space dimensions, the usual curl with three.
    A'^mu = A^mu - d^mu Lambda, so the spatial components gain +d_i Lambda.
"""
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple, Union

from symbolic.exactpoly import InvalidVariableError, PolyExpr, partial, substitute
from symbolic.minkowski import (
    DIM_1_1,
    DIM_2_1,
    Dim,
    DimensionMismatchError,
    FourVector,
    coordinate_vector,
    dot,
    lower,
    rest_velocity,
)
from symbolic.symbols import STANDARD, const, coordinate_names, sym, zero


@dataclass(frozen=True)
class Potential:
    dim: Dim
    A: FourVector

    def __post_init__(self):
        if self.A.dim != self.dim:
            raise DimensionMismatchError(f"Potential declared {self.dim} but vector is {self.A.dim}")
        if self.A.covariant:
            raise ValueError("Potentials are stored contravariant")

    @classmethod
    def of(cls, dim: Dim, components) -> "Potential":
        return cls(dim, FourVector(dim, tuple(components)))

    def __getitem__(self, mu: int) -> PolyExpr:
        return self.A[mu]

    def __str__(self) -> str:
        return str(self.A)


@dataclass(frozen=True)
class GaugeFn:
    dim: Dim
    lam: PolyExpr

    def __neg__(self) -> "GaugeFn":
        return GaugeFn(self.dim, -self.lam)


@dataclass(frozen=True)
class FieldPair:
    """E has one entry per space dimension; B is a scalar below three space dimensions."""

    dim: Dim
    electric: Tuple[PolyExpr, ...]
    magnetic: Union[PolyExpr, Tuple[PolyExpr, ...]]

    def __post_init__(self):
        if len(self.electric) != self.dim.spatial:
            raise DimensionMismatchError("E must have one component per space dimension")
        if self.dim.spatial == 3 and (not isinstance(self.magnetic, tuple) or len(self.magnetic) != 3):
            raise DimensionMismatchError("B must have three components in (3+1)")


@dataclass(frozen=True)
class FieldTensor:
    """Covariant F_{mu nu}, antisymmetric by construction."""

    dim: Dim
    F: Tuple[Tuple[PolyExpr, ...], ...]

    def __post_init__(self):
        size = self.dim.total
        if len(self.F) != size or any(len(row) != size for row in self.F):
            raise DimensionMismatchError(f"{self.dim} tensor must be {size}x{size}")
        if not self.is_antisymmetric():
            raise ValueError("Field tensor is not antisymmetric")

    def __getitem__(self, index: Tuple[int, int]) -> PolyExpr:
        mu, nu = index
        return self.F[mu][nu]

    def is_antisymmetric(self) -> bool:
        size = self.dim.total
        return all(self.F[mu][nu] == -self.F[nu][mu] for mu in range(size) for nu in range(size))

    def __neg__(self) -> "FieldTensor":
        return FieldTensor(self.dim, tuple(tuple(-entry for entry in row) for row in self.F))

    def nonzero_components(self) -> Dict[Tuple[int, int], PolyExpr]:
        size = self.dim.total
        return {(mu, nu): self.F[mu][nu] for mu in range(size) for nu in range(size) if self.F[mu][nu]}


def _check_dim(a: Dim, b: Dim) -> None:
    if a != b:
        raise DimensionMismatchError(f"Dimension mismatch: {a} vs {b}")


def fields_from_potential(A: Potential) -> FieldPair:
    """
    Extract E and B from a four-potential.

    Args:
        A: Contravariant potential (phi, A_vec)

    Returns:
        FieldPair with exact polynomial components
    """
    names = coordinate_names(A.dim.spatial)
    phi = A[0]
    electric = tuple(-partial(phi, names[i]) - partial(A[i], "t") for i in range(1, A.dim.total))
    if A.dim.spatial == 1:
        magnetic = zero()
    elif A.dim.spatial == 2:
        magnetic = partial(A[2], "x") - partial(A[1], "y")
    else:
        magnetic = (
            partial(A[3], "y") - partial(A[2], "z"),
            partial(A[1], "z") - partial(A[3], "x"),
            partial(A[2], "x") - partial(A[1], "y"),
        )
    return FieldPair(A.dim, electric, magnetic)


def gauge_transform(A: Potential, g: GaugeFn) -> Potential:
    """A'^mu = A^mu - d^mu Lambda with the index raised by the metric."""
    _check_dim(A.dim, g.dim)
    names = coordinate_names(A.dim.spatial)
    components = [A[0] - partial(g.lam, "t")]
    for i in range(1, A.dim.total):
        components.append(A[i] + partial(g.lam, names[i]))
    return Potential.of(A.dim, components)


def covariant_potential(c: str, dim: Dim) -> Potential:
    """(c/4)[2(U.x)x^mu - x^2 U^mu] in the rest frame."""
    U, x = rest_velocity(dim), coordinate_vector(dim)
    quarter = sym(c) * const(1, 4)
    u_dot_x = dot(U, x)
    x_squared = dot(x, x)
    components = [quarter * (u_dot_x * x[mu] * 2 - x_squared * U[mu]) for mu in range(dim.total)]
    return Potential.of(dim, components)


def field_tensor_from_potential(A: Potential) -> FieldTensor:
    """F_{mu nu} = d_mu A_nu - d_nu A_mu with A lowered by the metric."""
    names = coordinate_names(A.dim.spatial)
    A_low = lower(A.A)
    size = A.dim.total
    F = tuple(
        tuple(partial(A_low[nu], names[mu]) - partial(A_low[mu], names[nu]) for nu in range(size))
        for mu in range(size)
    )
    return FieldTensor(A.dim, F)


def covariant_field_tensor(c: str, dim: Dim) -> FieldTensor:
    """c(U^mu x^nu - U^nu x^mu), so F_01 = c x in the rest frame."""
    U, x = rest_velocity(dim), coordinate_vector(dim)
    scale = sym(c)
    size = dim.total
    F = tuple(tuple(scale * (U[mu] * x[nu] - U[nu] * x[mu]) for nu in range(size)) for mu in range(size))
    return FieldTensor(dim, F)


def electric_from_tensor(F: FieldTensor) -> Tuple[PolyExpr, ...]:
    """F_{0i}, which equals E_i for a tensor built from a potential."""
    return tuple(F[0, i] for i in range(1, F.dim.total))


def magnetic_from_tensor(F: FieldTensor) -> PolyExpr:
    """-F_{12}, which equals the pseudoscalar B in (2+1)."""
    if F.dim.spatial < 2:
        return zero()
    return -F[1, 2]


# Reference configurations of the two oscillator derivations

FIELD_CONSTANT = {DIM_2_1: "rho", DIM_1_1: "zeta"}


def field_constant(dim: Dim) -> str:
    try:
        return FIELD_CONSTANT[dim]
    except KeyError:
        raise DimensionMismatchError(f"No reference potential is modeled in {dim}") from None


def reference_potential(dim: Dim) -> Potential:
    """rho(0, y, -x) in (2+1) and zeta(0, t x) in (1+1)."""
    if dim == DIM_2_1:
        rho = sym("rho")
        return Potential.of(dim, [zero(), rho * sym("y"), -rho * sym("x")])
    c = sym(field_constant(dim))
    return Potential.of(dim, [zero(), c * sym("t") * sym("x")])


def reference_gauge(dim: Dim) -> GaugeFn:
    """
    The gauge functions that carry the reference potentials to covariant form:
    -(rho/4) t x^2 - (rho/4) t y^2 - (rho/12) t^3 and -(zeta/4)(t x^2 + t^3/3).
    """
    t, x = sym("t"), sym("x")
    c = sym(field_constant(dim))
    lam = -c * const(1, 4) * t * x ** 2 - c * const(1, 12) * t ** 3
    if dim == DIM_2_1:
        lam = lam - c * const(1, 4) * t * sym("y") ** 2
    return GaugeFn(dim, lam)


# Classical correspondence


def _inverse(name: str) -> PolyExpr:
    partner = STANDARD.partner(STANDARD.index(name))
    if partner is None:
        raise InvalidVariableError(f"{name!r} has no declared inverse")
    return PolyExpr.symbol(STANDARD, STANDARD.names[partner])


def larmor_field(m: str = "m", omega: str = "omega", q: str = "q") -> PolyExpr:
    """B = m omega / q."""
    return sym(m) * sym(omega) * _inverse(q)


def zeta_from_kinematics(m: str = "m", a: str = "a", v: str = "v", q: str = "q") -> PolyExpr:
    """zeta = 2 m a^2 / (q v^2)."""
    return sym(m) * sym(a) ** 2 * _inverse(q) * _inverse(v) ** 2 * 2


def zeta_from_gradient(E: PolyExpr) -> PolyExpr:
    """zeta = -dE/dx."""
    return -partial(E, "x")


def kinematic_field(m: str = "m", a: str = "a", v: str = "v", q: str = "q") -> PolyExpr:
    """Linear field E = -zeta x with zeta taken from the kinematic formula."""
    return -zeta_from_kinematics(m, a, v, q) * sym("x")


def cyclotron_balance(m: str = "m", v: str = "v", q: str = "q", R: str = "R") -> Tuple[PolyExpr, PolyExpr]:
    """
    Both sides of q v B = m v^2 / R with B = m v / (q R).

    Returns:
        (magnetic force, centripetal force); equal after canonicalization
    """
    field = sym(m) * sym(v) * _inverse(q) * _inverse(R)
    magnetic = sym(q) * sym(v) * field
    centripetal = sym(m) * sym(v) ** 2 * _inverse(R)
    return magnetic, centripetal


FIELD_RELATIONS: Dict[str, Mapping[str, PolyExpr]] = {
    # B = 2 rho
    "larmor": {"rho": sym("B") * const(1, 2)},
    # m omega = zeta
    "zeta": {"omega": sym("zeta") * sym("m_inv")},
    # m omega = e B_I
    "coupling": {"omega": sym("e") * sym("B_I") * sym("m_inv")},
}


def field_relation(p: PolyExpr, binding: str) -> PolyExpr:
    """Rewrite p through one of the named field-strength relations."""
    try:
        bindings = FIELD_RELATIONS[binding]
    except KeyError:
        raise ValueError(f"Unknown field relation {binding!r}; choose from {sorted(FIELD_RELATIONS)}") from None
    return substitute(p, bindings)
