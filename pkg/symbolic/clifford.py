"""
Gamma-matrix representations with exact entries, and the objects derived
from them: beta, alpha_j, sigma^{mu nu}, gamma^5 and the chiral projectors.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from symbolic.exactpoly import GaussianRational, PolyExpr, Scalar
from symbolic.minkowski import DIM_1_1, DIM_2_1, DIM_3_1, Dim
from symbolic.symbols import STANDARD


class RepresentationError(ValueError):
    """Requested representation does not exist for this dimension."""


class NoChiralityError(ValueError):
    """The representation admits no gamma^5."""


Entry = Union[PolyExpr, Scalar]


def _poly(value: Entry) -> PolyExpr:
    if isinstance(value, PolyExpr):
        return value
    return PolyExpr.constant(STANDARD, value)


@dataclass(frozen=True)
class SpinorMatrix:
    """Square matrix whose entries are exact polynomials."""

    rows: Tuple[Tuple[PolyExpr, ...], ...]

    def __post_init__(self):
        size = len(self.rows)
        if any(len(row) != size for row in self.rows):
            raise ValueError("SpinorMatrix must be square")

    @classmethod
    def of(cls, rows: Sequence[Sequence[Entry]]) -> "SpinorMatrix":
        return cls(tuple(tuple(_poly(value) for value in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "SpinorMatrix":
        return cls.of([[1 if r == c else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "SpinorMatrix":
        return cls.of([[0] * n for _ in range(n)])

    @classmethod
    def unit(cls, n: int, row: int, col: int) -> "SpinorMatrix":
        return cls.of([[1 if (r, c) == (row, col) else 0 for c in range(n)] for r in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, row: int, col: int) -> PolyExpr:
        return self.rows[row][col]

    def _check(self, other: "SpinorMatrix") -> None:
        if other.n != self.n:
            raise ValueError(f"Matrix size mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "SpinorMatrix") -> "SpinorMatrix":
        self._check(other)
        return SpinorMatrix(tuple(
            tuple(a + b for a, b in zip(left, right)) for left, right in zip(self.rows, other.rows)
        ))

    def __neg__(self) -> "SpinorMatrix":
        return SpinorMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __sub__(self, other: "SpinorMatrix") -> "SpinorMatrix":
        return self + (-other)

    def __matmul__(self, other: "SpinorMatrix") -> "SpinorMatrix":
        self._check(other)
        size = self.n
        rows = []
        for r in range(size):
            row = []
            for c in range(size):
                total = PolyExpr.zero(STANDARD)
                for k in range(size):
                    left = self.rows[r][k]
                    if left:
                        total = total + left * other.rows[k][c]
                row.append(total)
            rows.append(tuple(row))
        return SpinorMatrix(tuple(rows))

    def scale(self, factor: Entry) -> "SpinorMatrix":
        factor = _poly(factor)
        return SpinorMatrix(tuple(tuple(a * factor for a in row) for row in self.rows))

    def dagger(self) -> "SpinorMatrix":
        """Conjugate transpose; symbols are treated as real."""
        size = self.n
        return SpinorMatrix(tuple(
            tuple(self.rows[c][r].conjugate() for c in range(size)) for r in range(size)
        ))

    def trace(self) -> PolyExpr:
        total = PolyExpr.zero(STANDARD)
        for k in range(self.n):
            total = total + self.rows[k][k]
        return total

    def is_zero(self) -> bool:
        return all(not entry for row in self.rows for entry in row)

    def is_hermitian(self) -> bool:
        return self == self.dagger()

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows) + "]"


def block_diag(upper: SpinorMatrix, lower: SpinorMatrix) -> SpinorMatrix:
    return block(upper, SpinorMatrix.zeros(upper.n), SpinorMatrix.zeros(upper.n), lower)


def block(a: SpinorMatrix, b: SpinorMatrix, c: SpinorMatrix, d: SpinorMatrix) -> SpinorMatrix:
    """[[a, b], [c, d]] from four equal-size blocks."""
    top = [left + right for left, right in zip(a.rows, b.rows)]
    bottom = [left + right for left, right in zip(c.rows, d.rows)]
    return SpinorMatrix(tuple(top + bottom))


def anticommutator(a: SpinorMatrix, b: SpinorMatrix) -> SpinorMatrix:
    return a @ b + b @ a


def commutator(a: SpinorMatrix, b: SpinorMatrix) -> SpinorMatrix:
    return a @ b - b @ a


I = GaussianRational(Fraction(0), Fraction(1))
HALF_I = GaussianRational(Fraction(0), Fraction(1, 2))

SIGMA_1 = SpinorMatrix.of([[0, 1], [1, 0]])
SIGMA_2 = SpinorMatrix.of([[0, -I], [I, 0]])
SIGMA_3 = SpinorMatrix.of([[1, 0], [0, -1]])
PAULI = (SIGMA_1, SIGMA_2, SIGMA_3)


@dataclass(frozen=True)
class GammaRep:
    dim: Dim
    gammas: Tuple[SpinorMatrix, ...]
    reducible: bool = False
    alternate: bool = False

    @property
    def size(self) -> int:
        return self.gammas[0].n

    def identity(self) -> SpinorMatrix:
        return SpinorMatrix.identity(self.size)


def _planar_gammas(sign: int) -> Tuple[SpinorMatrix, ...]:
    return (SIGMA_3, SIGMA_1.scale(I), SIGMA_2.scale(I).scale(sign))


def make_rep(dim: Dim, reducible: bool = False, alternate: bool = False) -> GammaRep:
    """
    Build the gamma matrices for a spacetime dimension.

    Args:
        dim: Spacetime dimension
        reducible: (2+1) only; block-diagonal sum of the two inequivalent 2x2 reps
        alternate: (2+1) irreducible only; use gamma^2 = -i sigma^2

    Returns:
        GammaRep with {gamma^mu, gamma^nu} = 2 eta^{mu nu} I

    Raises:
        RepresentationError: For option combinations that do not exist
    """
    if reducible and dim != DIM_2_1:
        raise RepresentationError(f"No reducible representation is provided for {dim}")
    if alternate and (dim != DIM_2_1 or reducible):
        raise RepresentationError("The alternate sign applies to the irreducible (2+1) representation only")

    if dim == DIM_1_1:
        gammas = (SIGMA_3, SIGMA_1.scale(I))
    elif dim == DIM_2_1 and not reducible:
        gammas = _planar_gammas(-1 if alternate else 1)
    elif dim == DIM_2_1:
        gammas = tuple(block_diag(a, b) for a, b in zip(_planar_gammas(1), _planar_gammas(-1)))
    else:
        zero2, one2 = SpinorMatrix.zeros(2), SpinorMatrix.identity(2)
        gammas = (block_diag(one2, -one2),) + tuple(block(zero2, s, -s, zero2) for s in PAULI)
    return GammaRep(dim, gammas, reducible=reducible, alternate=alternate)


@dataclass(frozen=True)
class DerivedMatrices:
    beta: SpinorMatrix
    alphas: Tuple[SpinorMatrix, ...]


def derived(rep: GammaRep) -> DerivedMatrices:
    """beta = gamma^0 and alpha_j = gamma^0 gamma^j."""
    beta = rep.gammas[0]
    return DerivedMatrices(beta, tuple(beta @ g for g in rep.gammas[1:]))


def sigma(rep: GammaRep, mu: int, nu: int) -> SpinorMatrix:
    """sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu]."""
    total = rep.dim.total
    if not (0 <= mu < total and 0 <= nu < total):
        raise IndexError(f"Index ({mu}, {nu}) out of range for {rep.dim}")
    return commutator(rep.gammas[mu], rep.gammas[nu]).scale(HALF_I)


def gamma5(rep: GammaRep) -> SpinorMatrix:
    """
    Chirality matrix: gamma^0 gamma^1 in (1+1), i gamma^0 gamma^1 gamma^2 gamma^3
    in (3+1), and the off-diagonal block matrix of the reducible (2+1) rep.
    """
    g = rep.gammas
    if rep.dim == DIM_1_1:
        return g[0] @ g[1]
    if rep.dim == DIM_3_1:
        return (g[0] @ g[1] @ g[2] @ g[3]).scale(I)
    if not rep.reducible:
        raise NoChiralityError(
            "The irreducible (2+1) representation has gamma^0 gamma^1 gamma^2 proportional "
            "to the identity; use the reducible representation for chirality"
        )
    mixer = SIGMA_2.scale(I)
    zero2 = SpinorMatrix.zeros(2)
    return block(zero2, mixer, -mixer, zero2)


@dataclass(frozen=True)
class ChiralProjectors:
    right: SpinorMatrix
    left: SpinorMatrix


def chiral_projectors(rep: GammaRep) -> ChiralProjectors:
    """P_R = (I + gamma^5)/2 and P_L = (I - gamma^5)/2."""
    g5 = gamma5(rep)
    half = Fraction(1, 2)
    ident = rep.identity()
    return ChiralProjectors((ident + g5).scale(half), (ident - g5).scale(half))


def metric_identity(rep: GammaRep, mu: int, nu: int) -> SpinorMatrix:
    """2 eta^{mu nu} I."""
    factor = 2 * rep.dim.metric(mu) if mu == nu else 0
    return rep.identity().scale(factor)


def anticommutation_holds(rep: GammaRep) -> bool:
    total = rep.dim.total
    return all(
        anticommutator(rep.gammas[mu], rep.gammas[nu]) == metric_identity(rep, mu, nu)
        for mu in range(total) for nu in range(total)
    )


def hermiticity_holds(rep: GammaRep) -> bool:
    """gamma^0 Hermitian, gamma^i anti-Hermitian, hence beta and alpha_j Hermitian."""
    g0, spatial = rep.gammas[0], rep.gammas[1:]
    pattern = g0.is_hermitian() and all(g.dagger() == -g for g in spatial)
    matrices = derived(rep)
    return pattern and matrices.beta.is_hermitian() and all(a.is_hermitian() for a in matrices.alphas)


def sigma_adjoint_holds(rep: GammaRep) -> bool:
    """sigma^{mu nu} dagger = gamma^0 sigma^{mu nu} gamma^0."""
    g0 = rep.gammas[0]
    total = rep.dim.total
    return all(
        sigma(rep, mu, nu).dagger() == g0 @ sigma(rep, mu, nu) @ g0
        for mu in range(total) for nu in range(total)
    )


def gamma5_anticommutes(rep: GammaRep) -> bool:
    g5 = gamma5(rep)
    return all(anticommutator(g5, g).is_zero() for g in rep.gammas)


def all_reps() -> List[GammaRep]:
    """Every representation the project uses, in report order."""
    return [
        make_rep(DIM_1_1),
        make_rep(DIM_2_1),
        make_rep(DIM_2_1, alternate=True),
        make_rep(DIM_2_1, reducible=True),
        make_rep(DIM_3_1),
    ]


def rep_label(rep: GammaRep) -> str:
    suffix = " reducible" if rep.reducible else (" alternate" if rep.alternate else "")
    return f"{rep.dim}{suffix}"


def sum_matrices(matrices: Iterable[SpinorMatrix], n: int) -> SpinorMatrix:
    total = SpinorMatrix.zeros(n)
    for matrix in matrices:
        total = total + matrix
    return total
