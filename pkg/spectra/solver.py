"""
Eigenvalues nearest zero of an assembled Hamiltonian.
"""
import logging
import time
import warnings
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, LinearOperator, eigsh, lobpcg

import config
from spectra.operators import (
    HermitianMatrix,
    build_matrix,
    dominant_frequency,
    high_momentum_weight,
    separable_square_inverse,
)
from spectra.params import NumericParams
from symbolic.lagrangian import DiracOperator

logger = logging.getLogger(__name__)


class ConvergenceError(RuntimeError):
    """The iterative eigensolver did not converge."""


@dataclass
class SpectrumResult:
    """Sorted eigenvalues with the solver metadata needed to judge them."""

    eigenvalues: np.ndarray
    residuals: np.ndarray
    method: str
    resolution: int
    size: int
    solver: str
    stencil: Optional[str] = None
    artifacts: List[str] = field(default_factory=list)
    doublers: List[int] = field(default_factory=list)
    deltas: Optional[np.ndarray] = None

    @property
    def max_residual(self) -> float:
        return float(np.max(self.residuals)) if self.residuals.size else 0.0

    @property
    def converged(self) -> bool:
        return self.max_residual <= config.EIGEN_RESIDUAL_TOL

    def positive_levels(self, floor: float = 0.0) -> np.ndarray:
        return self.eigenvalues[self.eigenvalues > floor]

    def physical_levels(self) -> np.ndarray:
        """Positive levels with detected lattice doublers removed."""
        keep = np.ones(self.eigenvalues.size, dtype=bool)
        keep[self.doublers] = False
        return self.eigenvalues[keep & (self.eigenvalues > 0)]

    def symmetry_defect(self, interior: bool = True) -> float:
        """
        max |E_i + E'_i| between the spectrum and its negation, both sorted.

        ``interior`` drops the outermost |E| shell, where a cut at k
        eigenvalues nearest zero may split a +-E pair.
        """
        values = np.sort(self.eigenvalues)
        if interior and values.size:
            edge = np.max(np.abs(values))
            values = values[np.abs(values) < edge - 1e-9 * max(1.0, edge)]
        return float(np.max(np.abs(values + values[::-1]))) if values.size else 0.0


def _nearest_zero(values: np.ndarray, vectors: np.ndarray, k: Optional[int]):
    if k is not None and k < values.size:
        keep = np.argsort(np.abs(values), kind="stable")[:k]
        values, vectors = values[keep], vectors[:, keep]
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]


def _block_square_solve(Hm: HermitianMatrix, k: int, seed: int = config.DEFAULT_SEED):
    """
    Lowest eigenpairs of H^2 by preconditioned LOBPCG, then Rayleigh-Ritz
    of H on span(V, HV) to split each |E| into its +E and -E states.

    Every returned pair is kept, so a degenerate level appears with all
    the copies the block found.
    """
    n = Hm.size
    block = max(k, 8)
    rng = np.random.default_rng(seed)
    start = rng.standard_normal((n, block)) + 1j * rng.standard_normal((n, block))

    def square(vectors):
        return Hm.apply(Hm.apply(vectors))

    operator = LinearOperator((n, n), matvec=square, matmat=square, dtype=complex)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            _, V = lobpcg(
                operator, start, M=separable_square_inverse(Hm), tol=config.BLOCK_SOLVER_TOL,
                maxiter=config.BLOCK_SOLVER_MAXITER, largest=False,
            )
        except np.linalg.LinAlgError as error:
            raise ConvergenceError(f"Block eigensolver failed for size {n}: {error}") from error
    for warning in caught:
        logger.warning("LOBPCG: %s", warning.message)

    basis = scipy.linalg.orth(np.hstack([V, Hm.apply(V)]), rcond=1e-6)
    projected = basis.conj().T @ Hm.apply(basis)
    values, ritz = scipy.linalg.eigh((projected + projected.conj().T) / 2)
    return values, basis @ ritz


def _band_edge(Hm: HermitianMatrix, values: Optional[np.ndarray] = None, vectors: Optional[np.ndarray] = None):
    """The eigenpair of largest |E|, from a full decomposition when one is at hand."""
    if values is not None:
        index = int(np.argmax(np.abs(values)))
        return float(values[index]), vectors[:, [index]]
    try:
        top, vector = eigsh(Hm.matrix, k=1, which="LM")
    except (ArpackNoConvergence, ArpackError) as error:
        logger.warning("Band edge not resolved: %s", error)
        return None
    return float(top[0]), vector


def _flag_doublers(result: "SpectrumResult", Hm: HermitianMatrix, vectors: np.ndarray, edge) -> None:
    """
    Mark returned levels carrying outer-zone weight, and check that the
    band edge sits at the zone boundary. A lattice dispersion that peaks
    before the boundary folds back, and its second branch reaches |E| near zero.
    """
    for index, (energy, weight) in enumerate(zip(result.eigenvalues, high_momentum_weight(vectors, Hm))):
        if weight > config.DOUBLER_WEIGHT:
            result.doublers.append(index)
            result.artifacts.append(f"doubler at E={energy:.6g} (high-momentum weight {weight:.2f})")
    if edge is not None:
        top, vector = edge
        frequency = dominant_frequency(vector, Hm)[0]
        if frequency < config.DOUBLER_EDGE_FREQUENCY:
            result.artifacts.append(
                f"band edge |E|={abs(top):.6g} peaks at frequency {frequency:.3f} inside the zone; "
                "the dispersion folds back into a doubler branch"
            )
    if result.artifacts:
        logger.warning("Detected %d lattice doubler artifacts", len(result.artifacts))


def eigen_spectrum(Hm: HermitianMatrix, k: Optional[int] = None, seed: int = config.DEFAULT_SEED) -> SpectrumResult:
    """
    The k eigenvalues nearest zero, both branches, sorted ascending.

    Dense diagonalization up to the configured size limit. Above it,
    shift-invert Lanczos around zero for sparse operators, and a
    preconditioned block solve of H^2 for matrix-free ones. The block
    solve returns every Ritz pair it finds, which may exceed k.

    Args:
        Hm: Validated Hermitian matrix
        k: Number of eigenvalues; all of them when None (dense only)
        seed: Starting block of the block solve

    Returns:
        SpectrumResult with per-pair residuals |Hv - Ev| / |v|

    Raises:
        ConvergenceError: If an iterative eigensolver fails
    """
    start = time.perf_counter()
    n = Hm.size
    check_edge = Hm.stencil == "central4"
    edge = None
    if n <= config.get_dense_limit():
        dense = Hm.matrix.toarray()
        if not np.any(dense.imag):
            dense = dense.real
        values, vectors = scipy.linalg.eigh(dense)
        if check_edge:
            edge = _band_edge(Hm, values, vectors)
        values, vectors = _nearest_zero(values, vectors, k)
        solver = "dense"
    elif k is None:
        raise ValueError(f"Matrix of size {n} is too large to return the full spectrum")
    elif Hm.matrix_free:
        values, vectors = _nearest_zero(*_block_square_solve(Hm, k, seed), None)
        solver = "block-square"
    else:
        try:
            values, vectors = eigsh(Hm.matrix.tocsc(), k=min(k, n - 2), sigma=0.0, which="LM")
        except (ArpackNoConvergence, ArpackError) as error:
            raise ConvergenceError(f"Shift-invert eigensolver failed for size {n}: {error}") from error
        values, vectors = _nearest_zero(values, vectors, k)
        if check_edge:
            edge = _band_edge(Hm)
        solver = "shift-invert"

    residual = Hm.apply(vectors) - vectors * values
    residuals = np.linalg.norm(residual, axis=0) / np.linalg.norm(vectors, axis=0)
    logger.debug("%s solve of size %d took %.2fs", solver, n, time.perf_counter() - start)

    result = SpectrumResult(
        eigenvalues=values,
        residuals=residuals,
        method=Hm.method,
        resolution=Hm.resolution,
        size=n,
        solver=solver,
        stencil=Hm.stencil,
    )
    if check_edge:
        _flag_doublers(result, Hm, vectors, edge)
    if not result.converged:
        logger.warning("Eigen residual %.3e exceeds %g", result.max_residual, config.EIGEN_RESIDUAL_TOL)
    return result


def compute_spectrum(
    H: DiracOperator,
    params: NumericParams,
    method: str = "grid",
    k: Optional[int] = None,
    seed: int = config.DEFAULT_SEED,
) -> SpectrumResult:
    """Assemble with ``method`` and return the eigenvalues nearest zero."""
    Hm = build_matrix(H, params, method)
    return eigen_spectrum(Hm, params.k if k is None else k, seed)
