"""
Numeric spectrum checks for the oscillator Hamiltonian extracted from its Lagrangian.
"""
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

import config
from components.results.reports import CheckResult, ConvergenceReport
from spectra.limits import (
    match_methods,
    nonrel_limit_check,
    oscillator_ladder,
    resolution_deltas,
)
from spectra.params import NumericParams
from spectra.solver import SpectrumResult, compute_spectrum
from symbolic.lagrangian import DiracOperator, build_do_lagrangian, hamiltonian_extract
from symbolic.minkowski import DIM_1_1, Dim

logger = logging.getLogger(__name__)

METHODS = {"grid": ("grid",), "basis": ("basis",), "both": ("grid", "basis")}


def oscillator_hamiltonian(dim: Dim) -> DiracOperator:
    return hamiltonian_extract(build_do_lagrangian(dim))


def _floats(values: np.ndarray) -> List[float]:
    return [float(v) for v in values]


def _label(name: str, result: SpectrumResult) -> str:
    return f"{name} [{result.method}]"


def solve_levels(H: DiracOperator, params: NumericParams, method: str, seed: int = config.DEFAULT_SEED) -> SpectrumResult:
    """Twice ``params.k`` eigenvalues nearest zero, so k positive levels survive the +-E split."""
    return compute_spectrum(H, params, method, 2 * params.k, seed)


def result_checks(result: SpectrumResult, dim: Dim, params: NumericParams) -> List[CheckResult]:
    """Residual, +-E symmetry, free gap (omega = 0) and the 1D ladder (omega > 0)."""
    label = str(dim)
    checks = [
        CheckResult.compare(
            _label("eigen_residual", result), label,
            f"<= {config.EIGEN_RESIDUAL_TOL:g}", f"{result.max_residual:.3e}", result.converged,
            tolerance=config.EIGEN_RESIDUAL_TOL, detail=f"{result.solver} solve of size {result.size}",
        ),
    ]
    defect = result.symmetry_defect()
    checks.append(CheckResult.compare(
        _label("spectrum_symmetry", result), label,
        f"<= {config.SYMMETRY_TOL:g}", f"{defect:.3e}", defect <= config.SYMMETRY_TOL,
        tolerance=config.SYMMETRY_TOL,
    ))

    if params.omega == 0:
        lowest = float(np.min(np.abs(result.eigenvalues)))
        floor = params.m * (1 - 1e-9)
        checks.append(CheckResult.compare(
            _label("spectral_gap", result), label, f">= {params.m:g}", f"{lowest:.12g}", lowest >= floor,
        ))
    elif dim.spatial == 1 and params.m > 0:
        ladder = oscillator_ladder(result, params.m, params.omega)
        expected = np.arange(ladder.size)
        deviation = float(np.max(np.abs(ladder - expected))) if ladder.size else float("inf")
        checks.append(CheckResult.compare(
            _label("oscillator_ladder", result), label,
            _floats(expected), [round(float(v), 6) for v in ladder], deviation < config.LADDER_TOL,
            tolerance=config.LADDER_TOL, detail=f"max deviation {deviation:.3e}",
        ))
    return checks


def run_spectrum(
    dim: Dim,
    params: NumericParams,
    method: str = "grid",
    refine: bool = False,
    tolerance: Optional[float] = None,
    seed: int = config.DEFAULT_SEED,
) -> Tuple[List[CheckResult], ConvergenceReport, List[SpectrumResult]]:
    """
    Solve for the eigenvalues nearest zero with one or both methods.

    Levels are reported with multiplicity; in (2+1) the lowest ones are
    copies of the degenerate ground level E = m.

    Args:
        dim: (1+1) or (2+1)
        params: Validated numeric parameters
        method: ``grid``, ``basis`` or ``both``
        refine: Also rerun each method at doubled resolution
        tolerance: Cross-method relative tolerance; per-dimension default when None
        seed: Starting block of the iterative (2+1) grid solve

    Returns:
        Checks, the convergence report and every SpectrumResult computed
    """
    if method not in METHODS:
        raise ValueError(f"Unknown method {method!r}; choose from {sorted(METHODS)}")
    H = oscillator_hamiltonian(dim)
    label = str(dim)

    results: Dict[str, SpectrumResult] = {}
    checks: List[CheckResult] = []
    for name in METHODS[method]:
        results[name] = solve_levels(H, params, name, seed)
        checks.extend(result_checks(results[name], dim, params))

    report = ConvergenceReport(
        dimension=label,
        m=params.m,
        omega=params.omega,
        k=params.k,
        levels={name: _floats(r.physical_levels()[: params.k]) for name, r in results.items()},
    )

    if method == "both":
        if tolerance is None:
            tolerance = config.CROSS_METHOD_TOL if dim.spatial == 1 else config.CROSS_METHOD_TOL_2D
        cross = match_methods(results["grid"], results["basis"], params.k, tolerance)
        worst = float(np.max(cross.relative_deltas)) if cross.relative_deltas.size else float("inf")
        report.cross_method_deltas = _floats(cross.relative_deltas)
        checks.append(CheckResult.compare(
            "cross_method", label, f"< {tolerance:g}", f"{worst:.3e}", cross.passed,
            tolerance=tolerance, detail=f"{cross.reference.size} levels paired",
        ))

    refined: List[SpectrumResult] = []
    if refine:
        for name, coarse in results.items():
            fine = solve_levels(H, params.with_resolution(name), name, seed)
            deltas = resolution_deltas(coarse, fine)
            refined.append(fine)
            report.resolution_deltas[name] = _floats(deltas)
            worst = float(np.max(deltas)) if deltas.size else float("inf")
            checks.append(CheckResult.compare(
                f"resolution_convergence [{name}]", label, f"< {config.REFINE_TOL:g}", f"{worst:.3e}",
                worst < config.REFINE_TOL, tolerance=config.REFINE_TOL,
                detail=f"resolution {coarse.resolution} -> {fine.resolution}",
            ))

    everything = list(results.values()) + refined
    report.max_residual = max(r.max_residual for r in everything)
    report.artifacts = [f"{r.method}: {a}" for r in everything for a in r.artifacts]
    logger.info("Spectrum in %s with %s: %d checks", dim, method, len(checks))
    return checks, report, everything


def run_nonrel(
    params: NumericParams,
    method: str = "basis",
    levels: int = 5,
    tolerance: Optional[float] = None,
) -> Tuple[List[CheckResult], ConvergenceReport]:
    """(1+1) spacing check in the weakly relativistic regime."""
    outcome = nonrel_limit_check(params, method, levels, tolerance or config.NONREL_SPACING_TOL)
    check = CheckResult.compare(
        "nonrelativistic_spacing", str(DIM_1_1),
        f"|spacing/omega - 1| < {outcome.tolerance:g}", f"{outcome.max_deviation:.3e}", outcome.passed,
        tolerance=outcome.tolerance,
        detail="spacings/omega " + ", ".join(f"{s:.6f}" for s in outcome.spacings),
    )
    report = ConvergenceReport(
        dimension=str(DIM_1_1),
        m=params.m,
        omega=params.omega,
        k=levels,
        levels={method: _floats(outcome.excitations * params.omega + params.m)},
    )
    return [check], report
