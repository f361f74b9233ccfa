"""
Validated numeric parameters for the spectral solvers (natural units).
"""
import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

import config


class ParameterError(ValueError):
    """Numeric parameters are outside the range a method can handle."""


class NumericParams(BaseModel):
    """
    Mass, frequency and resolution of one spectral run.

    ``L`` is the half-width of the box [-L, L]; when omitted it is chosen
    as ten oscillator lengths or ten Compton wavelengths, whichever is larger.
    """

    model_config = ConfigDict(frozen=True)

    m: float = Field(ge=0)
    omega: float = Field(ge=0)
    L: Optional[float] = Field(default=None, gt=0)
    N: int = Field(default=config.GRID_SIZE_1D, ge=64)
    M: int = Field(default=config.BASIS_SIZE_1D, ge=2)
    k: int = Field(default=10, ge=1)
    stencil: Literal["spectral", "central4"] = "spectral"

    @model_validator(mode="after")
    def _check_counts(self) -> "NumericParams":
        if self.k > self.N:
            raise ValueError(f"k={self.k} exceeds the grid size N={self.N}")
        return self

    @classmethod
    def for_dim(cls, spatial: int, **values) -> "NumericParams":
        """Parameters with per-dimension default resolutions."""
        if spatial == 2:
            values.setdefault("N", config.GRID_SIZE_2D)
            values.setdefault("M", config.BASIS_SIZE_2D)
        return cls(**values)

    @property
    def half_width(self) -> float:
        if self.L is not None:
            return self.L
        scales = []
        if self.m * self.omega > 0:
            scales.append(10.0 / math.sqrt(self.m * self.omega))
        if self.m > 0:
            scales.append((10.0 if self.omega > 0 else 40.0) / self.m)
        return max(scales) if scales else 40.0

    @property
    def oscillator_length(self) -> float:
        if self.m * self.omega < config.MIN_OSCILLATOR_SCALE:
            raise ParameterError(
                f"m*omega={self.m * self.omega:g} is below {config.MIN_OSCILLATOR_SCALE:g}; "
                "the oscillator basis is ill-conditioned here, use the grid method"
            )
        return 1.0 / math.sqrt(self.m * self.omega)

    def constants(self):
        """Numeric values for the symbolic constants a Hamiltonian may carry."""
        values = {"m": self.m, "omega": self.omega}
        if self.m > 0:
            values["m_inv"] = 1.0 / self.m
        return values

    def with_resolution(self, method: str, factor: int = 2) -> "NumericParams":
        """Copy with N (grid) or M (basis) multiplied by ``factor``."""
        field = "N" if method == "grid" else "M"
        return self.model_copy(update={field: getattr(self, field) * factor})
