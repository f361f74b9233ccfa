"""
Dirac Oscillator Verifier - exact symbolic checks and numeric spectra from the command line.
"""
import logging
import sys
from pathlib import Path
from typing import List, Optional

import click
from pydantic import ValidationError

import config
from components.results.reports import (
    CheckResult,
    make_envelope,
    render_json,
    write_json,
    write_spectrum_csv,
)
from evaluator.clifford_checks import verify_clifford
from evaluator.gauge_checks import GaugeVerifier
from evaluator.lagrangian_checks import verify_lagrangian
from evaluator.spectrum_checks import run_nonrel, run_spectrum
from evaluator.symmetry_checks import verify_chiral, verify_u1
from spectra.limits import RegimeError
from spectra.params import NumericParams, ParameterError
from spectra.solver import ConvergenceError
from symbolic.lagrangian import CHIRAL_SHIFTS, U1_SHIFTS
from symbolic.minkowski import Dim

logger = logging.getLogger(__name__)

MODELED_DIMS = ["1+1", "2+1"]
ALL_DIMS = ["1+1", "2+1", "3+1"]


def json_option(command):
    return click.option(
        "--json", "json_path", type=click.Path(dir_okay=False, path_type=Path),
        help="Write the JSON report here instead of stdout.",
    )(command)


def seed_option(command):
    return click.option("--seed", type=int, default=config.DEFAULT_SEED, show_default=True,
                        help="Seed for randomized property cases.")(command)


def emit(command: str, checks: List[CheckResult], json_path: Optional[Path], seed: int = config.DEFAULT_SEED, **sections) -> None:
    """Write the envelope and exit with its code."""
    envelope = make_envelope(command, seed, checks, **sections)
    if json_path is None:
        click.echo(render_json(envelope))
    else:
        write_json(envelope, json_path)
        failed = sum(check.status == "fail" for check in checks)
        click.echo(f"{command}: {len(checks) - failed} of {len(checks)} checks without failure, report at {json_path}", err=True)
    click.get_current_context().exit(envelope.exit_code)


@click.group()
@click.version_option(config.TOOL_VERSION)
def cli():
    """Verify the Dirac oscillator derivation chain and compute its spectrum."""
    logging.basicConfig(
        level=config.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


@cli.command("verify-gauge")
@click.option("--dim", type=click.Choice(MODELED_DIMS), required=True)
@seed_option
@click.option("--cases", type=click.IntRange(min=0), default=config.RANDOM_CASES, show_default=True,
              help="Random (potential, gauge function) pairs.")
@json_option
def verify_gauge(dim: str, seed: int, cases: int, json_path: Optional[Path]):
    """Fields, gauge transformation, covariant potential and field tensor."""
    checks = GaugeVerifier(Dim.parse(dim), seed=seed, cases=cases).run()
    emit("verify-gauge", checks, json_path, seed)


@cli.command()
@click.option("--kind", type=click.Choice(["u1", "chiral"]), required=True)
@click.option("--dim", type=click.Choice(MODELED_DIMS), default="2+1", show_default=True)
@click.option("--theta-equal", is_flag=True, help="Use one phase for both chiralities.")
@click.option("--gauge-shift", default=None,
              help=f"U(1): {', '.join(U1_SHIFTS)}; chiral: {', '.join(CHIRAL_SHIFTS)}.")
@click.option("--irreducible", is_flag=True, help="Use the 2x2 (2+1) representation for chiral checks.")
@seed_option
@json_option
def symmetry(kind: str, dim: str, theta_equal: bool, gauge_shift: Optional[str], irreducible: bool, seed: int, json_path: Optional[Path]):
    """Local U(1) invariance or chiral-symmetry breaking of the density."""
    allowed = U1_SHIFTS if kind == "u1" else CHIRAL_SHIFTS
    gauge_shift = gauge_shift or ("compensating" if kind == "u1" else "matching")
    if gauge_shift not in allowed:
        raise click.BadParameter(f"{gauge_shift!r} is not one of {', '.join(allowed)}", param_hint="--gauge-shift")
    if kind == "u1":
        checks, report = verify_u1(Dim.parse(dim), seed, gauge_shift)
    else:
        checks, report = verify_chiral(Dim.parse(dim), theta_equal, gauge_shift, irreducible)
    emit("symmetry", checks, json_path, seed, symmetry=report)


@cli.command()
@click.option("--dim", type=click.Choice(MODELED_DIMS), default="1+1", show_default=True)
@click.option("--m", "mass", type=float, default=1.0, show_default=True)
@click.option("--omega", type=float, default=0.1, show_default=True)
@click.option("--k", type=click.IntRange(min=1), default=10, show_default=True, help="Positive levels to report.")
@click.option("--method", type=click.Choice(["grid", "basis", "both"]), default="grid", show_default=True)
@click.option("--n", "grid_size", type=int, default=None, help="Grid points per axis.")
@click.option("--basis-size", type=int, default=None, help="Oscillator states per axis.")
@click.option("--half-width", "half_width", type=float, default=None, help="Half-width of the grid box.")
@click.option("--stencil", type=click.Choice(config.GRID_STENCILS), default="spectral", show_default=True)
@click.option("--refine", is_flag=True, help="Rerun at doubled resolution and report deltas.")
@click.option("--tol", type=float, default=None, help="Cross-method relative tolerance.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), help="Write eigenvalues as CSV.")
@json_option
@seed_option
def spectrum(dim, mass, omega, k, method, grid_size, basis_size, half_width, stencil, refine, tol, csv_path, json_path, seed):
    """Eigenvalues nearest zero of the oscillator Hamiltonian."""
    space = Dim.parse(dim)
    values = {"m": mass, "omega": omega, "k": k, "stencil": stencil, "L": half_width}
    if grid_size is not None:
        values["N"] = grid_size
    if basis_size is not None:
        values["M"] = basis_size
    try:
        params = NumericParams.for_dim(space.spatial, **values)
        checks, report, results = run_spectrum(space, params, method, refine, tol, seed=seed)
    except (ValidationError, ParameterError) as error:
        raise click.UsageError(str(error)) from error
    except ConvergenceError as error:
        logger.error("%s", error)
        failure = CheckResult.compare("eigen_solver", dim, "converged", str(error), False)
        return emit("spectrum", [failure], json_path, seed)
    if csv_path is not None:
        write_spectrum_csv(results, csv_path)
    emit("spectrum", checks, json_path, seed, convergence=report)


@cli.command("verify-clifford")
@click.option("--dim", type=click.Choice(ALL_DIMS), default=None, help="Only this dimension.")
@json_option
def verify_clifford_command(dim: Optional[str], json_path: Optional[Path]):
    """Gamma-matrix algebra for every representation."""
    checks = verify_clifford(Dim.parse(dim) if dim else None)
    emit("verify-clifford", checks, json_path)


@cli.command("verify-lagrangian")
@click.option("--dim", type=click.Choice(MODELED_DIMS), required=True)
@json_option
def verify_lagrangian_command(dim: str, json_path: Optional[Path]):
    """Free reduction, sigma.F contraction, Hamiltonian and Euler-Lagrange pair."""
    emit("verify-lagrangian", verify_lagrangian(Dim.parse(dim)), json_path)


@cli.command()
@click.option("--m", "mass", type=float, default=1.0, show_default=True)
@click.option("--omega", type=float, default=1e-3, show_default=True)
@click.option("--levels", type=click.IntRange(min=2), default=5, show_default=True)
@click.option("--method", type=click.Choice(["grid", "basis"]), default="basis", show_default=True)
@click.option("--tol", type=float, default=None, help="Spacing tolerance.")
@json_option
def nonrel(mass, omega, levels, method, tol, json_path):
    """Level spacing against omega in the nonrelativistic limit."""
    try:
        params = NumericParams(m=mass, omega=omega)
        checks, report = run_nonrel(params, method, levels, tol)
    except (ValidationError, ParameterError, RegimeError) as error:
        raise click.UsageError(str(error)) from error
    except ConvergenceError as error:
        logger.error("%s", error)
        failure = CheckResult.compare("eigen_solver", "1+1", "converged", str(error), False)
        return emit("nonrel", [failure], json_path)
    emit("nonrel", checks, json_path, convergence=report)


def main():
    cli()


if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        click.echo("\nInterrupted.", err=True)
        sys.exit(130)
