import json

import pandas as pd
import pytest

from app import cli
from spectra.solver import ConvergenceError


def invoke(runner, *args):
    result = runner.invoke(cli, list(args))
    return result, (json.loads(result.stdout) if result.exit_code in (0, 1) and result.stdout.strip() else None)


def statuses(report):
    return [check["status"] for check in report["checks"]]


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "1.0.0" in result.stdout


def test_verify_gauge(runner):
    result, report = invoke(runner, "verify-gauge", "--dim", "2+1", "--cases", "20")
    assert result.exit_code == 0
    assert report["command"] == "verify-gauge"
    assert statuses(report) == ["pass"] * 6


def test_verify_gauge_rejects_unknown_dimension(runner):
    result = runner.invoke(cli, ["verify-gauge", "--dim", "9"])
    assert result.exit_code == 2


def test_u1_symmetry(runner):
    result, report = invoke(runner, "symmetry", "--kind", "u1", "--dim", "2+1")
    assert result.exit_code == 0
    assert report["symmetry"]["invariant"] is True
    assert report["symmetry"]["residual"] is None


def test_u1_symmetry_without_compensation(runner):
    result, report = invoke(runner, "symmetry", "--kind", "u1", "--dim", "1+1", "--gauge-shift", "none")
    assert result.exit_code == 0
    assert report["symmetry"]["invariant"] is False
    assert "d0_theta" in report["symmetry"]["residual"]


def test_chiral_symmetry_is_broken(runner):
    result, report = invoke(runner, "symmetry", "--kind", "chiral", "--dim", "2+1")
    assert result.exit_code == 0
    assert report["symmetry"]["invariant"] is False
    assert "theta_L - theta_R" in report["symmetry"]["residual"]


def test_chiral_symmetry_with_equal_phases(runner):
    result, report = invoke(runner, "symmetry", "--kind", "chiral", "--dim", "1+1", "--theta-equal")
    assert result.exit_code == 0
    assert report["symmetry"]["invariant"] is True


def test_chiral_symmetry_irreducible_is_skipped(runner):
    result, report = invoke(runner, "symmetry", "--kind", "chiral", "--dim", "2+1", "--irreducible")
    assert result.exit_code == 0
    assert statuses(report) == ["skip"]
    assert report["symmetry"] is None


def test_gauge_shift_must_match_kind(runner):
    result = runner.invoke(cli, ["symmetry", "--kind", "u1", "--gauge-shift", "left"])
    assert result.exit_code == 2


def test_spectrum_rejects_zero_levels(runner):
    result = runner.invoke(cli, ["spectrum", "--k", "0"])
    assert result.exit_code == 2


def test_spectrum_rejects_small_grid(runner):
    result = runner.invoke(cli, ["spectrum", "--n", "16"])
    assert result.exit_code == 2


def test_spectrum_basis_without_frequency(runner):
    result = runner.invoke(cli, ["spectrum", "--method", "basis", "--omega", "0"])
    assert result.exit_code == 2


def test_spectrum_grid(runner):
    result, report = invoke(runner, "spectrum", "--n", "512", "--k", "5")
    assert result.exit_code == 0, result.stdout
    levels = report["convergence"]["levels"]["grid"]
    assert len(levels) == 5
    assert levels[0] == pytest.approx(1.0, abs=1e-6)
    assert levels[1] == pytest.approx((1 + 2 * 0.1) ** 0.5, rel=1e-6)


def test_spectrum_records_seed(runner):
    result, report = invoke(runner, "spectrum", "--method", "basis", "--basis-size", "60", "--k", "3", "--seed", "7")
    assert result.exit_code == 0
    assert report["seed"] == 7


def test_spectrum_solver_failure_keeps_seed(runner, monkeypatch):
    def fail(*args, **kwargs):
        raise ConvergenceError("no convergence")

    monkeypatch.setattr("app.run_spectrum", fail)
    result, report = invoke(runner, "spectrum", "--seed", "11")
    assert result.exit_code == 1
    assert report["seed"] == 11
    assert report["checks"][0]["name"] == "eigen_solver"


def test_spectrum_basis_with_refinement(runner, tmp_path):
    csv_path = tmp_path / "levels.csv"
    json_path = tmp_path / "report.json"
    result = runner.invoke(cli, [
        "spectrum", "--method", "basis", "--basis-size", "60", "--k", "4", "--refine",
        "--csv", str(csv_path), "--json", str(json_path),
    ])
    assert result.exit_code == 0
    assert "report at" in result.stderr
    report = json.loads(json_path.read_text(encoding="utf-8"))
    assert "resolution_convergence [basis]" in [check["name"] for check in report["checks"]]
    frame = pd.read_csv(csv_path)
    assert sorted(frame["N_or_M"].unique().tolist()) == [60, 120]
    assert list(frame.columns) == ["index", "eigenvalue", "method", "N_or_M", "residual"]


def test_spectrum_plane_basis(runner):
    result, report = invoke(runner, "spectrum", "--dim", "2+1", "--method", "basis", "--basis-size", "12", "--k", "3")
    assert result.exit_code == 0
    levels = report["convergence"]["levels"]["basis"]
    assert len(levels) == 3
    assert levels[0] == pytest.approx(1.0, abs=1e-10)
    assert all(level >= 1.0 - 1e-10 for level in levels)


def test_verify_clifford(runner):
    result, report = invoke(runner, "verify-clifford", "--dim", "3+1")
    assert result.exit_code == 0
    assert set(statuses(report)) == {"pass"}


def test_verify_clifford_all_dimensions(runner):
    result, report = invoke(runner, "verify-clifford")
    assert result.exit_code == 0
    assert {check["dimension"] for check in report["checks"]} == {"1+1", "2+1", "3+1"}


@pytest.mark.parametrize("dim", ["1+1", "2+1"])
def test_verify_lagrangian(runner, dim):
    result, report = invoke(runner, "verify-lagrangian", "--dim", dim)
    assert result.exit_code == 0
    assert statuses(report) == ["pass"] * 7


def test_nonrel(runner):
    result, report = invoke(runner, "nonrel")
    assert result.exit_code == 0
    assert report["checks"][0]["name"] == "nonrelativistic_spacing"


def test_nonrel_rejects_strong_coupling(runner):
    result = runner.invoke(cli, ["nonrel", "--omega", "0.5"])
    assert result.exit_code == 2
