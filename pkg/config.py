"""
Configuration settings for the Dirac oscillator verification tool.
"""
import os
from datetime import datetime, timezone
from typing import Optional

import dotenv

dotenv.load_dotenv()

TOOL_VERSION = "1.0.0"
REPORT_SCHEMA_VERSION = 1

LOG_LEVEL = os.environ.get("DIRAC_LOG_LEVEL", "WARNING").upper()

# Tolerances
HERMITIAN_TOL = 1e-12
EIGEN_RESIDUAL_TOL = 1e-9
CROSS_METHOD_TOL = 1e-6
CROSS_METHOD_TOL_2D = 1e-5
REFINE_TOL = 1e-8
SYMMETRY_TOL = 1e-8
LADDER_TOL = 1e-4
NONREL_SPACING_TOL = 5e-3
NONREL_MAX_RATIO = 1e-2  # omega/m above this is not nonrelativistic

# Numeric defaults
GRID_SIZE_1D = 2048
GRID_SIZE_2D = 128
BASIS_SIZE_1D = 200
BASIS_SIZE_2D = 40
MIN_OSCILLATOR_SCALE = 1e-8  # smallest usable m*omega for the oscillator basis
DOUBLER_WEIGHT = 0.1  # outer-zone weight that marks a returned grid level as a doubler
DOUBLER_EDGE_FREQUENCY = 0.4  # band-edge peak frequency below this means the dispersion folds back
BLOCK_SOLVER_TOL = 1e-9
BLOCK_SOLVER_MAXITER = 500
GRID_STENCILS = ["spectral", "central4"]

# Randomized property checks
RANDOM_CASES = 200
RANDOM_PHASES = 50
DEFAULT_SEED = 0


def get_dense_limit() -> int:
    """Largest matrix dimension solved with a dense eigensolver."""
    raw = os.environ.get("DIRAC_DENSE_LIMIT", "8192")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"DIRAC_DENSE_LIMIT must be an integer, got {raw!r}. "
            "Unset it to use the default of 8192."
        ) from None
    if value < 1:
        raise ValueError("DIRAC_DENSE_LIMIT must be positive.")
    return value


def get_report_timestamp() -> Optional[str]:
    """
    Pinned report timestamp, if any.

    DIRAC_REPORT_TIMESTAMP is used verbatim; otherwise SOURCE_DATE_EPOCH
    (seconds since the epoch) is rendered as UTC ISO-8601.
    """
    pinned = os.environ.get("DIRAC_REPORT_TIMESTAMP")
    if pinned:
        return pinned
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if not epoch:
        return None
    try:
        seconds = int(epoch)
    except ValueError:
        raise ValueError(f"SOURCE_DATE_EPOCH must be an integer, got {epoch!r}.") from None
    return datetime.fromtimestamp(seconds, tz=timezone.utc).isoformat()
