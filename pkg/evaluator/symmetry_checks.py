"""
Local U(1) invariance and chiral-symmetry breaking of the QED + oscillator density.
"""
import logging
from typing import List, Optional, Tuple

import numpy as np

import config
from components.results.reports import CheckResult, SymmetryReport
from symbolic.clifford import GammaRep, NoChiralityError, SpinorMatrix, make_rep
from symbolic.lagrangian import (
    PSI,
    PSI_BAR,
    FieldSymbol,
    LagrangianDensity,
    PhaseElement,
    Term,
    U1_SHIFTS,
    build_do_lagrangian,
    chiral_decompose,
    chiral_transform,
    densities_equal,
    density_text,
    is_null,
    residual,
    u1_transform,
)
from symbolic.minkowski import DIM_2_1, Dim
from symbolic.symbols import coordinate_names, phase_gradient_name, sym
from utils.random_polys import random_poly

logger = logging.getLogger(__name__)


def predicted_u1_residual(L: LagrangianDensity, gauge_shift: str) -> LagrangianDensity:
    """(1 - s) (d_mu theta) psibar gamma^mu psi for shift sign s."""
    weight = 1 - U1_SHIFTS[gauge_shift]
    kernel = SpinorMatrix.zeros(L.rep.size)
    for mu, gamma in enumerate(L.rep.gammas):
        kernel = kernel + gamma.scale(sym(phase_gradient_name(mu, "theta")) * weight)
    return LagrangianDensity(L.dim, L.rep, (Term("residual", PSI_BAR, PSI, ((None, kernel),)),))


def _symmetry_report(kind: str, dim: Dim, outcome: LagrangianDensity, gauge_shift: str) -> SymmetryReport:
    invariant = is_null(outcome)
    return SymmetryReport(
        symmetry=kind,
        dimension=str(dim),
        invariant=invariant,
        residual=None if invariant else density_text(outcome),
        gauge_shift=gauge_shift,
    )


def verify_u1(dim: Dim, seed: int = 0, gauge_shift: str = "compensating") -> Tuple[List[CheckResult], SymmetryReport]:
    """
    Transform the QED + oscillator density with a formal phase and with
    seeded polynomial phases; compare residuals to the predicted leftover.
    """
    L = build_do_lagrangian(dim, gauge_sector=True)
    label = str(dim)
    leftover = residual(u1_transform(L, "theta", gauge_shift), L)
    predicted = predicted_u1_residual(L, gauge_shift)
    checks = [CheckResult.compare(
        "u1_residual_formal_phase", label, density_text(predicted), density_text(leftover),
        densities_equal(leftover, predicted),
    )]

    if gauge_shift == "compensating":
        rng = np.random.default_rng(seed)
        names = coordinate_names(dim.spatial)
        failures = [
            index for index in range(config.RANDOM_PHASES)
            if not densities_equal(u1_transform(L, random_poly(rng, names), gauge_shift), L)
        ]
        checks.append(CheckResult.compare(
            "u1_invariant_polynomial_phases", label, "invariant",
            "invariant" if not failures else f"residual for cases {failures}",
            detail=f"{config.RANDOM_PHASES} cases, seed {seed}",
        ))

    return checks, _symmetry_report("U1", dim, leftover, gauge_shift)


def chiral_rep(dim: Dim, irreducible: bool = False) -> GammaRep:
    """(2+1) uses the reducible representation unless asked otherwise."""
    if dim == DIM_2_1 and not irreducible:
        return make_rep(dim, reducible=True)
    return make_rep(dim)


def predicted_chiral_residual(decomposed: LagrangianDensity, theta_r: Optional[str], theta_l: Optional[str]) -> LagrangianDensity:
    """Oscillator terms with phases exp[+-i(theta_R - theta_L)] minus their originals."""
    def phase(chirality: Optional[str], sign: int) -> PhaseElement:
        name = theta_r if chirality == "R" else theta_l
        return PhaseElement.of({name: sign}) if name else PhaseElement()

    terms = []
    for term in decomposed.terms:
        if term.label != "do":
            continue
        left = FieldSymbol(term.left.name, term.left.chirality, phase(term.left.chirality, 1))
        right = FieldSymbol(term.right.name, term.right.chirality, phase(term.right.chirality, -1))
        terms.append(Term("do", left, right, term.parts))
        negated = tuple((d, -k) for d, k in term.parts)
        terms.append(Term("do_original", term.left, term.right, negated))
    return LagrangianDensity(decomposed.dim, decomposed.rep, tuple(terms))


def verify_chiral(
    dim: Dim,
    theta_equal: bool = False,
    gauge_shift: str = "matching",
    irreducible: bool = False,
) -> Tuple[List[CheckResult], Optional[SymmetryReport]]:
    """
    Decompose the massless density by chirality and apply independent
    chiral phases. Representations without gamma^5 yield skip records.
    """
    label = str(dim)
    rep = chiral_rep(dim, irreducible)
    L = build_do_lagrangian(dim, massless=True, rep=rep, gauge_sector=True)
    try:
        decomposed = chiral_decompose(L)
    except NoChiralityError as error:
        logger.info("Chiral checks skipped in %s: %s", dim, error)
        return [CheckResult(name="chiral_symmetry", dimension=label, status="skip", detail=str(error))], None

    blocks = [(t.label, t.left.chirality, t.right.chirality) for t in decomposed.terms]
    expected_blocks = [
        ("do", "L", "R"), ("do", "R", "L"),
        ("kinetic", "L", "L"), ("kinetic", "R", "R"),
        ("qed", "L", "L"), ("qed", "R", "R"),
    ]
    checks = [
        CheckResult.compare("chiral_decomposition_blocks", label, expected_blocks, blocks),
        CheckResult.compare("chiral_decomposition_preserves_density", label, True, densities_equal(decomposed, L)),
    ]

    theta_r = "theta" if theta_equal else "theta_R"
    theta_l = "theta" if theta_equal else "theta_L"
    outcome = chiral_transform(decomposed, theta_r, theta_l, gauge_shift)
    if gauge_shift == "matching":
        predicted = predicted_chiral_residual(decomposed, theta_r, theta_l)
        checks.append(CheckResult.compare(
            "chiral_residual", label, density_text(predicted), density_text(outcome.residual),
            densities_equal(outcome.residual, predicted),
        ))
    checks.append(CheckResult.compare(
        "chiral_invariance", label, theta_equal, outcome.invariant,
        detail="phases coincide" if theta_equal else "independent phases theta_R, theta_L",
    ))
    return checks, _symmetry_report("chiral", dim, outcome.residual, gauge_shift)
