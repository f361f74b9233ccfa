"""
Report models and writers for verification and spectrum runs.
"""
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Literal, Optional, Sequence

import pandas as pd
from pydantic import BaseModel, Field, model_validator

import config
from spectra.solver import SpectrumResult


class CheckResult(BaseModel):
    """One named verification with its canonical expected and actual values."""

    name: str
    dimension: str
    status: Literal["pass", "fail", "skip"]
    expected: Optional[str] = None
    actual: Optional[str] = None
    tolerance: Optional[float] = None
    detail: Optional[str] = None

    @model_validator(mode="after")
    def _fail_has_values(self) -> "CheckResult":
        if self.status == "fail" and (self.expected is None or self.actual is None):
            raise ValueError(f"Failed check {self.name!r} must carry expected and actual values")
        return self

    @classmethod
    def compare(cls, name: str, dimension: str, expected, actual, equal: Optional[bool] = None, **extra) -> "CheckResult":
        """Build a pass/fail record from two values with canonical string forms."""
        ok = (expected == actual) if equal is None else equal
        return cls(
            name=name,
            dimension=dimension,
            status="pass" if ok else "fail",
            expected=str(expected),
            actual=str(actual),
            **extra,
        )


class SymmetryReport(BaseModel):
    symmetry: Literal["U1", "chiral"]
    dimension: str
    invariant: bool
    residual: Optional[str] = None
    gauge_shift: str


class ConvergenceReport(BaseModel):
    dimension: str
    m: float
    omega: float
    k: int
    levels: Dict[str, List[float]] = Field(default_factory=dict)
    resolution_deltas: Dict[str, List[float]] = Field(default_factory=dict)
    cross_method_deltas: Optional[List[float]] = None
    max_residual: float = 0.0
    artifacts: List[str] = Field(default_factory=list)


class ReportEnvelope(BaseModel):
    tool_version: str = config.TOOL_VERSION
    schema_version: int = config.REPORT_SCHEMA_VERSION
    timestamp: str
    command: str
    seed: int
    checks: List[CheckResult] = Field(default_factory=list)
    symmetry: Optional[SymmetryReport] = None
    convergence: Optional[ConvergenceReport] = None

    @property
    def passed(self) -> bool:
        return all(check.status != "fail" for check in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1


def make_envelope(command: str, seed: int, checks: Sequence[CheckResult], **sections) -> ReportEnvelope:
    """Envelope with the pinned timestamp when one is configured."""
    timestamp = config.get_report_timestamp() or datetime.now(timezone.utc).isoformat()
    return ReportEnvelope(timestamp=timestamp, command=command, seed=seed, checks=list(checks), **sections)


def render_json(envelope: ReportEnvelope) -> str:
    return envelope.model_dump_json(indent=2)


def write_json(envelope: ReportEnvelope, path: Path) -> None:
    Path(path).write_text(render_json(envelope) + "\n", encoding="utf-8")


def spectrum_frame(results: Sequence[SpectrumResult]) -> pd.DataFrame:
    """One row per eigenvalue: index, eigenvalue, method, N_or_M, residual."""
    rows = []
    for result in results:
        for index, (value, residual) in enumerate(zip(result.eigenvalues, result.residuals)):
            rows.append({
                "index": index,
                "eigenvalue": float(value),
                "method": result.method,
                "N_or_M": result.resolution,
                "residual": float(residual),
            })
    return pd.DataFrame(rows, columns=["index", "eigenvalue", "method", "N_or_M", "residual"])


def write_spectrum_csv(results: Sequence[SpectrumResult], path) -> None:
    """Write to a path, or to any writable text buffer."""
    spectrum_frame(results).to_csv(path, index=False, float_format="%.15g")
