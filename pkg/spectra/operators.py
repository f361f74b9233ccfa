"""
Numeric realizations of an extracted Dirac operator.

Two independent discretizations are provided: a uniform real-space grid
with a spectral (sinc) or fourth-order central derivative, and a product
basis of harmonic-oscillator functions with ladder-operator matrix elements.
The spinor index is outermost: the vector layout is (spinor, x[, y]).

Operators are kept as sums of Kronecker products, one spinor matrix times
one operator per axis. The sparse product matrix is assembled on demand;
large (2+1) grids with the dense sinc derivative are only ever applied.
"""
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg
from scipy import sparse
from scipy.sparse.linalg import LinearOperator

import config
from spectra.params import NumericParams, ParameterError
from symbolic.clifford import SpinorMatrix
from symbolic.exactpoly import PolyExpr
from symbolic.lagrangian import DiracOperator
from symbolic.symbols import coordinate_names

logger = logging.getLogger(__name__)


class NonHermitianError(ValueError):
    """An assembled matrix failed the Hermiticity check."""


def evaluate(p: PolyExpr, values: Mapping[str, object]) -> object:
    """
    Numeric value of a polynomial.

    Args:
        p: Polynomial to evaluate
        values: Numbers (or numpy arrays) for every symbol that occurs in p

    Returns:
        complex, or an array when any value is an array

    Raises:
        ParameterError: If a symbol of p has no value
    """
    names = p.universe.names
    total = 0j
    for monomial, coefficient in p.terms:
        term = coefficient.to_complex()
        for position, exponent in monomial:
            name = names[position]
            if name not in values:
                raise ParameterError(f"No numeric value for symbol {name!r}")
            term = term * values[name] ** exponent
        total = total + term
    return total


def numeric_matrix(matrix: SpinorMatrix, values: Mapping[str, float]) -> np.ndarray:
    """Spinor matrix with constant entries as a complex array."""
    return np.array([[complex(evaluate(entry, values)) for entry in row] for row in matrix.rows])


@dataclass(frozen=True)
class KronTerm:
    """A spinor matrix times one operator per axis; None stands for the identity."""

    spinor: np.ndarray
    factors: Tuple[Optional[object], ...]


def _apply_axis(factor, block: np.ndarray, axis: int) -> np.ndarray:
    """Apply a one-axis operator along ``axis`` of a tensor-shaped block."""
    moved = np.moveaxis(block, axis, 0)
    flat = moved.reshape(moved.shape[0], -1)
    result = np.asarray(factor @ flat).reshape(moved.shape)
    return np.moveaxis(result, 0, axis)


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Discretized Hamiltonian with the layout needed to interpret eigenvectors."""

    terms: Tuple[KronTerm, ...]
    method: str
    resolution: int
    spatial: int
    spinor: int
    spacing: Optional[float] = None
    stencil: Optional[str] = None

    def __post_init__(self):
        if self.matrix_free:
            defect = self._sampled_hermiticity()
        else:
            defect = hermiticity_residual(self.matrix)
        if defect >= config.HERMITIAN_TOL:
            raise NonHermitianError(f"max|H - H^dag| = {defect:.3e} exceeds {config.HERMITIAN_TOL:g}")

    @property
    def size(self) -> int:
        return self.spinor * self.resolution ** self.spatial

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.spinor,) + (self.resolution,) * self.spatial

    @property
    def matrix_free(self) -> bool:
        """True for multi-axis operators with dense axis factors above the dense limit."""
        dense_factors = any(isinstance(f, np.ndarray) for term in self.terms for f in term.factors)
        return self.spatial > 1 and dense_factors and self.size > config.get_dense_limit()

    @cached_property
    def matrix(self) -> sparse.csr_matrix:
        identity = sparse.identity(self.resolution, dtype=complex, format="csr")
        total = sparse.csr_matrix((self.size, self.size), dtype=complex)
        for term in self.terms:
            product = sparse.csr_matrix(term.spinor)
            for factor in term.factors:
                axis_op = identity if factor is None else sparse.csr_matrix(factor)
                product = sparse.kron(product, axis_op, format="csr")
            total = total + product
        total.eliminate_zeros()
        return total

    def apply(self, vectors: np.ndarray) -> np.ndarray:
        """H @ vectors without forming the product matrix; columns are independent vectors."""
        vectors = np.asarray(vectors)
        block = vectors.reshape(self.shape + (-1,))
        out = np.zeros(block.shape, dtype=complex)
        for term in self.terms:
            part = block
            for axis, factor in enumerate(term.factors):
                if factor is not None:
                    part = _apply_axis(factor, part, axis + 1)
            out += np.tensordot(term.spinor, part, axes=([1], [0]))
        return out.reshape(vectors.shape)

    def as_operator(self) -> LinearOperator:
        return LinearOperator((self.size, self.size), matvec=self.apply, matmat=self.apply, dtype=complex)

    def _sampled_hermiticity(self) -> float:
        """|<y, Hx> - <Hy, x>| / |Hx| for fixed random unit vectors."""
        rng = np.random.default_rng(0)
        x, y = (rng.standard_normal((self.size, 2)) @ np.array([1.0, 1j]) for _ in range(2))
        x, y = x / np.linalg.norm(x), y / np.linalg.norm(y)
        Hx = self.apply(x)
        return float(abs(np.vdot(y, Hx) - np.vdot(self.apply(y), x)) / max(1.0, np.linalg.norm(Hx)))


def hermiticity_residual(matrix) -> float:
    difference = matrix - matrix.conj().T
    if sparse.issparse(difference):
        return float(abs(difference).max()) if difference.nnz else 0.0
    return float(np.max(np.abs(difference))) if difference.size else 0.0


def separable_square_inverse(Hm: HermitianMatrix) -> LinearOperator:
    """
    Approximate inverse of H^2 for preconditioning.

    H^2 is replaced by s + sum_a T_a, where s collects |spinor|^2 of the
    constant terms and T_a collects |spinor|^2 F^dag F of every term acting
    on axis a alone. That sum is diagonal in the product of the T_a
    eigenbases, so it is inverted exactly. Terms on several axes are left out.
    """
    n, spatial = Hm.resolution, Hm.spatial
    shift = 0.0
    axis_sums = [np.zeros((n, n), dtype=complex) for _ in range(spatial)]
    for term in Hm.terms:
        weight = float(np.linalg.norm(term.spinor, 2)) ** 2
        active = [a for a, factor in enumerate(term.factors) if factor is not None]
        if not active:
            shift += weight
        elif len(active) == 1:
            factor = term.factors[active[0]]
            dense = factor.toarray() if sparse.issparse(factor) else np.asarray(factor)
            axis_sums[active[0]] += weight * (dense.conj().T @ dense)
    bases = [scipy.linalg.eigh(T) for T in axis_sums]
    denominator = np.full((n,) * spatial, shift)
    for axis, (values, _) in enumerate(bases):
        expand = [np.newaxis] * spatial
        expand[axis] = slice(None)
        denominator = denominator + values[tuple(expand)]
    denominator = np.maximum(denominator, 1e-8 * max(1.0, float(denominator.max())))

    def solve(vectors: np.ndarray) -> np.ndarray:
        vectors = np.asarray(vectors)
        block = vectors.reshape(Hm.shape + (-1,))
        for axis, (_, basis) in enumerate(bases):
            block = _apply_axis(basis.conj().T, block, axis + 1)
        block = block / denominator[np.newaxis, ..., np.newaxis]
        for axis, (_, basis) in enumerate(bases):
            block = _apply_axis(basis, block, axis + 1)
        return block.reshape(vectors.shape)

    return LinearOperator((Hm.size, Hm.size), matvec=solve, matmat=solve, dtype=complex)


# Grid


def grid_points(params: NumericParams) -> np.ndarray:
    """N interior points of [-L, L]; the spinor vanishes at both walls."""
    L = params.half_width
    h = 2.0 * L / (params.N + 1)
    return -L + h * np.arange(1, params.N + 1)


def sinc_derivative(n: int, h: float) -> np.ndarray:
    """Fourier-grid first derivative: (-1)^(i-j) / ((i-j) h) off the diagonal."""
    index = np.arange(n)
    offset = index[:, None] - index[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        D = np.where(offset == 0, 0.0, np.power(-1.0, offset) / (offset * h))
    return D


def central4_derivative(n: int, h: float) -> sparse.csr_matrix:
    """Fourth-order central first derivative with hard walls."""
    coefficients = [1 / 12, -2 / 3, 2 / 3, -1 / 12]
    return sparse.diags(coefficients, [-2, -1, 1, 2], shape=(n, n), format="csr") / h


def _axis_power(op, exponent: int):
    result = op
    for _ in range(exponent - 1):
        result = result @ op
    return result


def _assemble(
    H: DiracOperator,
    params: NumericParams,
    positions: Sequence,
    momenta: Sequence,
) -> Tuple[KronTerm, ...]:
    spatial = H.dim.spatial
    spinor = H.rep.size
    constants = params.constants()
    names = list(coordinate_names(spatial)[1:])

    terms: List[KronTerm] = []
    for j, coeff in enumerate(H.momentum_coeffs):
        if any(set(entry.symbols()) & set(names) for row in coeff.rows for entry in row):
            raise ParameterError("Momentum coefficients must not depend on position")
        spin = numeric_matrix(coeff, constants)
        if np.any(spin):
            terms.append(KronTerm(spin, tuple(momenta[j] if a == j else None for a in range(spatial))))

    # Potential monomials grouped by their power of each coordinate
    groups: Dict[Tuple[int, ...], np.ndarray] = {}
    for r in range(spinor):
        for c in range(spinor):
            entry = H.potential.entry(r, c)
            universe_names = entry.universe.names
            for monomial, coefficient in entry.terms:
                scale = coefficient.to_complex()
                powers = [0] * spatial
                for position, exponent in monomial:
                    name = universe_names[position]
                    if name in names:
                        powers[names.index(name)] += exponent
                    elif entry.universe.is_coordinate(name):
                        raise ParameterError(f"Coordinate {name!r} cannot be realized in a stationary spectrum")
                    elif name in constants:
                        scale *= constants[name] ** exponent
                    else:
                        raise ParameterError(f"No numeric value for symbol {name!r}")
                spin = groups.setdefault(tuple(powers), np.zeros((spinor, spinor), dtype=complex))
                spin[r, c] += scale
    for powers, spin in groups.items():
        if np.any(spin):
            factors = tuple(_axis_power(positions[a], p) if p else None for a, p in enumerate(powers))
            terms.append(KronTerm(spin, factors))
    return tuple(terms)


def discretize_grid(H: DiracOperator, params: NumericParams) -> HermitianMatrix:
    """
    Real-space discretization on [-L, L]^d with N points per axis.

    p_j = -i D with D the sinc (``spectral``) or fourth-order central
    derivative; x_j is diagonal.
    """
    if H.dim.spatial not in (1, 2):
        raise ParameterError(f"Grid spectra are computed in (1+1) and (2+1) only, got {H.dim}")
    x = grid_points(params)
    h = x[1] - x[0]
    n = params.N
    if params.stencil == "spectral":
        momentum = -1j * sinc_derivative(n, h)
    else:
        momentum = -1j * central4_derivative(n, h)
    position = sparse.diags(x, format="csr")
    spatial = H.dim.spatial
    terms = _assemble(H, params, [position] * spatial, [momentum] * spatial)
    Hm = HermitianMatrix(terms, "grid", n, spatial, H.rep.size, spacing=float(h), stencil=params.stencil)
    logger.debug("Grid operator: %s stencil, N=%d, L=%.3f, size %d", params.stencil, n, params.half_width, Hm.size)
    return Hm


# Oscillator basis


def lowering_operator(size: int) -> sparse.csr_matrix:
    """Truncated a with <n-1|a|n> = sqrt(n)."""
    return sparse.diags(np.sqrt(np.arange(1, size)), 1, shape=(size, size), format="csr")


def ladder_position(size: int, length: float) -> sparse.csr_matrix:
    a = lowering_operator(size)
    return (a + a.T) * (length / math.sqrt(2.0))


def ladder_momentum(size: int, length: float) -> sparse.csr_matrix:
    a = lowering_operator(size)
    return (a.T - a) * (1j / (math.sqrt(2.0) * length))


def oscillator_basis(H: DiracOperator, params: NumericParams) -> HermitianMatrix:
    """
    Matrix elements in M harmonic-oscillator states per axis with length
    scale 1/sqrt(m omega), tensored with the spinor index.

    Raises:
        ParameterError: If m*omega is too small for a usable length scale
    """
    if H.dim.spatial not in (1, 2):
        raise ParameterError(f"Basis spectra are computed in (1+1) and (2+1) only, got {H.dim}")
    length = params.oscillator_length
    size = params.M
    if size < 2:
        raise ParameterError("The oscillator basis needs at least two states per axis")
    spatial = H.dim.spatial
    position = ladder_position(size, length)
    momentum = ladder_momentum(size, length)
    terms = _assemble(H, params, [position] * spatial, [momentum] * spatial)
    Hm = HermitianMatrix(terms, "basis", size, spatial, H.rep.size)
    logger.debug("Basis operator: M=%d, length %.3f, size %d", size, length, Hm.size)
    return Hm


def build_matrix(H: DiracOperator, params: NumericParams, method: str) -> HermitianMatrix:
    if method == "grid":
        return discretize_grid(H, params)
    if method == "basis":
        return oscillator_basis(H, params)
    raise ValueError(f"Unknown method {method!r}; choose grid or basis")


def _power_spectra(vectors: np.ndarray, Hm: HermitianMatrix):
    """Per-column power over the spatial Fourier grid, summed over the spinor index."""
    axes = tuple(range(1, Hm.spatial + 1))
    for column in range(vectors.shape[1]):
        field = vectors[:, column].reshape(Hm.shape)
        yield (np.abs(np.fft.fftn(field, axes=axes)) ** 2).sum(axis=0)


def high_momentum_weight(vectors: np.ndarray, Hm: HermitianMatrix) -> List[float]:
    """
    Fraction of each grid eigenvector's weight in the outer half of the
    Brillouin zone, where lattice doublers live.
    """
    n, spatial = Hm.resolution, Hm.spatial
    frequencies = np.abs(np.fft.fftfreq(n))
    mask = np.zeros((n,) * spatial, dtype=bool)
    for axis in range(spatial):
        expand = [np.newaxis] * spatial
        expand[axis] = slice(None)
        mask = mask | (frequencies[tuple(expand)] > 0.25)
    weights = []
    for power in _power_spectra(vectors, Hm):
        total = power.sum()
        weights.append(float(power[mask].sum() / total) if total else 0.0)
    return weights


def dominant_frequency(vectors: np.ndarray, Hm: HermitianMatrix) -> List[float]:
    """
    Largest |frequency| over the axes at each column's spectral peak, in
    cycles per grid point (0.5 is the zone boundary).
    """
    frequencies = np.abs(np.fft.fftfreq(Hm.resolution))
    peaks = []
    for power in _power_spectra(vectors, Hm):
        index = np.unravel_index(int(np.argmax(power)), power.shape)
        peaks.append(float(max(frequencies[i] for i in index)))
    return peaks
