"""
Dimension-tagged four-vectors with the (+, -, ..., -) metric.
"""
from dataclasses import dataclass
from typing import Tuple

from symbolic.exactpoly import PolyExpr
from symbolic.symbols import STANDARD, coordinate_names, sym, zero


class DimensionMismatchError(ValueError):
    """Operands live in spacetimes of different dimension."""


class IndexPositionError(ValueError):
    """A vector was lowered twice or raised twice."""


@dataclass(frozen=True)
class Dim:
    """Spacetime with ``spatial`` space dimensions and one time dimension."""

    spatial: int

    def __post_init__(self):
        if self.spatial not in (1, 2, 3):
            raise ValueError(f"Unsupported spatial dimension: {self.spatial}")

    @property
    def total(self) -> int:
        return self.spatial + 1

    @property
    def label(self) -> str:
        return f"{self.spatial}+1"

    @classmethod
    def parse(cls, label: str) -> "Dim":
        """Parse labels like ``2+1``."""
        spatial, plus, time = label.partition("+")
        if plus != "+" or time != "1" or not spatial.isdigit():
            raise ValueError(f"Bad dimension label: {label!r}")
        return cls(int(spatial))

    def metric(self, mu: int) -> int:
        """Diagonal entry eta_{mu mu}."""
        return 1 if mu == 0 else -1

    def __str__(self) -> str:
        return self.label


DIM_1_1 = Dim(1)
DIM_2_1 = Dim(2)
DIM_3_1 = Dim(3)


@dataclass(frozen=True)
class FourVector:
    dim: Dim
    components: Tuple[PolyExpr, ...]
    covariant: bool = False

    def __post_init__(self):
        if len(self.components) != self.dim.total:
            raise DimensionMismatchError(
                f"{self.dim} vector needs {self.dim.total} components, got {len(self.components)}"
            )

    def __getitem__(self, mu: int) -> PolyExpr:
        return self.components[mu]

    def __add__(self, other: "FourVector") -> "FourVector":
        _check_same(self, other)
        if self.covariant != other.covariant:
            raise IndexPositionError("Cannot add covariant and contravariant vectors")
        return FourVector(self.dim, tuple(a + b for a, b in zip(self.components, other.components)), self.covariant)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return self + other.scale(-1)

    def scale(self, factor) -> "FourVector":
        return FourVector(self.dim, tuple(c * factor for c in self.components), self.covariant)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def _check_same(u: FourVector, v: FourVector) -> None:
    if u.dim != v.dim:
        raise DimensionMismatchError(f"Dimension mismatch: {u.dim} vs {v.dim}")


def _apply_metric(v: FourVector) -> Tuple[PolyExpr, ...]:
    return tuple(c * v.dim.metric(mu) for mu, c in enumerate(v.components))


def lower(v: FourVector) -> FourVector:
    """v_mu = eta_{mu nu} v^nu."""
    if v.covariant:
        raise IndexPositionError("Vector is already covariant")
    return FourVector(v.dim, _apply_metric(v), covariant=True)


def raise_index(v: FourVector) -> FourVector:
    if not v.covariant:
        raise IndexPositionError("Vector is already contravariant")
    return FourVector(v.dim, _apply_metric(v), covariant=False)


def dot(u: FourVector, v: FourVector) -> PolyExpr:
    """Lorentz product of two contravariant vectors."""
    _check_same(u, v)
    if u.covariant or v.covariant:
        raise IndexPositionError("dot expects contravariant operands")
    total = zero()
    for a, b in zip(u.components, lower(v).components):
        total = total + a * b
    return total


def coordinate_vector(dim: Dim) -> FourVector:
    """x^mu = (t, x, ...)."""
    return FourVector(dim, tuple(sym(name) for name in coordinate_names(dim.spatial)))


def rest_velocity(dim: Dim) -> FourVector:
    """U^mu = (1, 0, ...)."""
    one = PolyExpr.constant(STANDARD, 1)
    return FourVector(dim, (one,) + tuple(zero() for _ in range(dim.spatial)))


def zero_vector(dim: Dim) -> FourVector:
    return FourVector(dim, tuple(zero() for _ in range(dim.total)))
