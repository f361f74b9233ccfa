"""
Exact checks of the gamma-matrix algebra for every representation in use.
"""
from typing import List, Optional

from components.results.reports import CheckResult
from symbolic.clifford import (
    GammaRep,
    NoChiralityError,
    all_reps,
    anticommutation_holds,
    chiral_projectors,
    gamma5_anticommutes,
    hermiticity_holds,
    rep_label,
    sigma_adjoint_holds,
)
from symbolic.minkowski import Dim


def _boolean(name: str, rep: GammaRep, ok: bool) -> CheckResult:
    return CheckResult.compare(f"{name} [{rep_label(rep)}]", str(rep.dim), True, ok)


def projector_algebra_holds(rep: GammaRep) -> bool:
    """P_R + P_L = I, both idempotent, P_R P_L = P_L P_R = 0."""
    projectors = chiral_projectors(rep)
    right, left = projectors.right, projectors.left
    return (
        right + left == rep.identity()
        and right @ right == right
        and left @ left == left
        and (right @ left).is_zero()
        and (left @ right).is_zero()
    )


def verify_rep(rep: GammaRep) -> List[CheckResult]:
    checks = [
        _boolean("anticommutation", rep, anticommutation_holds(rep)),
        _boolean("hermiticity", rep, hermiticity_holds(rep)),
        _boolean("sigma_adjoint", rep, sigma_adjoint_holds(rep)),
    ]
    try:
        checks.append(_boolean("gamma5_anticommutes", rep, gamma5_anticommutes(rep)))
        checks.append(_boolean("chiral_projectors", rep, projector_algebra_holds(rep)))
    except NoChiralityError as error:
        for name in ("gamma5_anticommutes", "chiral_projectors"):
            checks.append(CheckResult(
                name=f"{name} [{rep_label(rep)}]", dimension=str(rep.dim), status="skip", detail=str(error),
            ))
    return checks


def verify_clifford(dim: Optional[Dim] = None) -> List[CheckResult]:
    """Checks for every representation, or only those of ``dim``."""
    checks: List[CheckResult] = []
    for rep in all_reps():
        if dim is None or rep.dim == dim:
            checks.extend(verify_rep(rep))
    return checks
