import io
import json

import numpy as np
import pandas as pd
import pytest
from pydantic import ValidationError

from components.results.reports import (
    CheckResult,
    ConvergenceReport,
    make_envelope,
    render_json,
    spectrum_frame,
    write_json,
    write_spectrum_csv,
)
from spectra.solver import SpectrumResult


def spectrum(method="grid", resolution=64):
    return SpectrumResult(
        eigenvalues=np.array([-1.5, -1.0, 1.0, 1.5]),
        residuals=np.array([1e-13, 2e-13, 1e-13, 3e-13]),
        method=method,
        resolution=resolution,
        size=2 * resolution,
        solver="dense",
    )


def test_failed_check_needs_values():
    with pytest.raises(ValidationError):
        CheckResult(name="hamiltonian", dimension="1+1", status="fail")
    skipped = CheckResult(name="chiral_symmetry", dimension="2+1", status="skip", detail="no gamma5")
    assert skipped.expected is None


def test_compare():
    assert CheckResult.compare("x", "1+1", "a", "a").status == "pass"
    failed = CheckResult.compare("x", "1+1", 1, 2)
    assert (failed.status, failed.expected, failed.actual) == ("fail", "1", "2")
    assert CheckResult.compare("x", "1+1", "a", "b", equal=True).status == "pass"


def test_envelope_exit_codes():
    ok = CheckResult.compare("a", "1+1", 1, 1)
    skip = CheckResult(name="b", dimension="2+1", status="skip")
    bad = CheckResult.compare("c", "1+1", 1, 2)
    assert make_envelope("verify-gauge", 0, [ok, skip]).exit_code == 0
    assert make_envelope("verify-gauge", 0, [ok, bad]).exit_code == 1
    assert make_envelope("verify-gauge", 0, []).passed


def test_pinned_timestamp(monkeypatch):
    monkeypatch.setenv("DIRAC_REPORT_TIMESTAMP", "2020-01-01T00:00:00+00:00")
    first = render_json(make_envelope("verify-clifford", 3, []))
    second = render_json(make_envelope("verify-clifford", 3, []))
    assert first == second
    assert json.loads(first)["timestamp"] == "2020-01-01T00:00:00+00:00"


def test_source_date_epoch(monkeypatch):
    monkeypatch.delenv("DIRAC_REPORT_TIMESTAMP", raising=False)
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "0")
    assert make_envelope("nonrel", 0, []).timestamp == "1970-01-01T00:00:00+00:00"


def test_envelope_json_layout(tmp_path):
    report = ConvergenceReport(dimension="1+1", m=1.0, omega=0.1, k=2, levels={"grid": [1.0, 1.095]})
    envelope = make_envelope("spectrum", 0, [CheckResult.compare("a", "1+1", 1, 1)], convergence=report)
    path = tmp_path / "report.json"
    write_json(envelope, path)
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["tool_version"] == "1.0.0"
    assert data["schema_version"] == 1
    assert data["command"] == "spectrum"
    assert data["symmetry"] is None
    assert data["convergence"]["levels"]["grid"] == [1.0, 1.095]


def test_spectrum_frame():
    frame = spectrum_frame([spectrum("grid", 64), spectrum("basis", 30)])
    assert list(frame.columns) == ["index", "eigenvalue", "method", "N_or_M", "residual"]
    assert len(frame) == 8
    assert frame.loc[frame.method == "basis", "N_or_M"].unique().tolist() == [30]
    assert frame["index"].tolist()[:4] == [0, 1, 2, 3]


def test_spectrum_csv_roundtrip():
    buffer = io.StringIO()
    write_spectrum_csv([spectrum()], buffer)
    buffer.seek(0)
    frame = pd.read_csv(buffer)
    assert frame["eigenvalue"].tolist() == [-1.5, -1.0, 1.0, 1.5]
    assert set(frame["method"]) == {"grid"}
