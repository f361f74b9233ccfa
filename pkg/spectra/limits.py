"""
Convergence, cross-method validation and limiting-regime checks for the
oscillator spectra.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

import config
from spectra.params import NumericParams
from spectra.solver import ConvergenceError, SpectrumResult, compute_spectrum
from symbolic.lagrangian import DiracOperator, reference_hamiltonian
from symbolic.minkowski import DIM_1_1

logger = logging.getLogger(__name__)


class RegimeError(ValueError):
    """Parameters fall outside the regime a check is defined for."""


def oscillator_ladder(result: SpectrumResult, m: float, omega: float) -> np.ndarray:
    """(E_n^2 - m^2) / (2 m omega) for the positive levels; integers for the 1D oscillator."""
    levels = result.physical_levels()
    return (levels ** 2 - m ** 2) / (2.0 * m * omega)


def level_spacings(result: SpectrumResult, omega: float) -> np.ndarray:
    """(E_{n+1} - E_n) / omega over the positive levels."""
    return np.diff(result.physical_levels()) / omega


def distinct_levels(values: np.ndarray, rel_tol: float = 1e-6) -> np.ndarray:
    """Sorted values with near-coincident entries merged."""
    levels: List[float] = []
    for value in np.sort(values):
        if levels and abs(value - levels[-1]) <= rel_tol * max(1.0, abs(value)):
            continue
        levels.append(float(value))
    return np.array(levels)


def resolution_deltas(coarse: SpectrumResult, fine: SpectrumResult) -> np.ndarray:
    """
    |E_fine - E_coarse| over the lowest positive levels both runs share,
    counted with multiplicity; stored on ``fine``.
    """
    a, b = coarse.physical_levels(), fine.physical_levels()
    count = min(a.size, b.size)
    fine.deltas = np.abs(a[:count] - b[:count])
    return fine.deltas


@dataclass
class ConvergenceStudy:
    coarse: SpectrumResult
    fine: SpectrumResult
    deltas: np.ndarray
    tolerance: float

    @property
    def converged(self) -> bool:
        return bool(self.deltas.size) and float(np.max(self.deltas)) < self.tolerance


def convergence_study(
    H: DiracOperator,
    params: NumericParams,
    method: str = "basis",
    tolerance: float = config.REFINE_TOL,
    k: Optional[int] = None,
) -> ConvergenceStudy:
    """
    Rerun at doubled N (grid) or M (basis) and compare the lowest
    positive levels the two runs share.
    """
    coarse = compute_spectrum(H, params, method, k)
    fine = compute_spectrum(H, params.with_resolution(method), method, k)
    deltas = resolution_deltas(coarse, fine)
    logger.info("Convergence of %s: max delta %.3e over %d levels", method, deltas.max() if deltas.size else 0.0, deltas.size)
    return ConvergenceStudy(coarse, fine, deltas, tolerance)


@dataclass
class CrossValidation:
    grid: SpectrumResult
    basis: SpectrumResult
    reference: np.ndarray
    matched: np.ndarray
    relative_deltas: np.ndarray
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.relative_deltas.size) and float(np.max(self.relative_deltas)) < self.tolerance


def match_methods(grid: SpectrumResult, basis: SpectrumResult, count: int, tolerance: float = config.CROSS_METHOD_TOL) -> CrossValidation:
    """
    Pair the lowest ``count`` positive levels of both methods in order,
    with multiplicity, and report relative deltas.

    A degenerate level fills several slots; a grid that returns fewer
    copies than the basis shows up as a large delta in the next slot.
    """
    size = min(count, basis.physical_levels().size, grid.physical_levels().size)
    reference = basis.physical_levels()[:size]
    matched = grid.physical_levels()[:size]
    relative = np.abs(matched - reference) / np.abs(reference) if size else np.array([])
    return CrossValidation(grid, basis, reference, matched, relative, tolerance)


def cross_validate(
    H: DiracOperator,
    params: NumericParams,
    tolerance: float = config.CROSS_METHOD_TOL,
    k: Optional[int] = None,
) -> CrossValidation:
    """Solve with both methods and match their levels."""
    basis = compute_spectrum(H, params, "basis", k)
    grid = compute_spectrum(H, params, "grid", k)
    return match_methods(grid, basis, params.k, tolerance)


@dataclass
class NonrelReport:
    m: float
    omega: float
    method: str
    excitations: np.ndarray
    spacings: np.ndarray
    tolerance: float

    @property
    def max_deviation(self) -> float:
        return float(np.max(np.abs(self.spacings - 1.0)))

    @property
    def passed(self) -> bool:
        return self.max_deviation < self.tolerance


def nonrel_limit_check(
    params: NumericParams,
    method: str = "basis",
    levels: int = 5,
    tolerance: float = config.NONREL_SPACING_TOL,
) -> NonrelReport:
    """
    Compare E_n - m against the ladder n*omega in the weakly relativistic regime.

    Raises:
        RegimeError: If omega/m exceeds the configured ratio
        ConvergenceError: If fewer than two positive levels come back
    """
    if params.m <= 0 or params.omega <= 0 or params.omega / params.m > config.NONREL_MAX_RATIO:
        raise RegimeError(
            f"0 < omega/m <= {config.NONREL_MAX_RATIO:g} is required for the nonrelativistic check"
        )
    H = reference_hamiltonian(DIM_1_1)
    result = compute_spectrum(H, params, method, k=max(params.k, 2 * levels + 2))
    positive = result.positive_levels()[:levels]
    if positive.size < 2:
        raise ConvergenceError(
            f"Only {positive.size} positive level(s) from the {method} solve; a spacing needs two"
        )
    return NonrelReport(
        m=params.m,
        omega=params.omega,
        method=method,
        excitations=(positive - params.m) / params.omega,
        spacings=np.diff(positive) / params.omega,
        tolerance=tolerance,
    )
