"""
Lagrangian verification suite: free reduction, sigma.F contraction,
Hamiltonian extraction and the Euler-Lagrange pair.
"""
from typing import List

from components.results.reports import CheckResult
from symbolic.clifford import GammaRep, SpinorMatrix, derived, make_rep, sigma
from symbolic.gaugefields import FieldTensor, covariant_field_tensor, field_constant
from symbolic.lagrangian import (
    DiracOperator,
    are_formal_adjoints,
    build_do_lagrangian,
    densities_equal,
    euler_lagrange_pair,
    free_dirac_lagrangian,
    hamiltonian_extract,
    interaction_contraction,
    reference_hamiltonian,
)
from symbolic.minkowski import Dim
from symbolic.symbols import const, coordinate_names, imag_unit, sym, zero


def contraction_entrywise(rep: GammaRep, F: FieldTensor) -> SpinorMatrix:
    """sum_{mu nu} sigma^{mu nu} F_{mu nu}, summed one matrix entry at a time."""
    size, total = rep.size, rep.dim.total
    rows = []
    for r in range(size):
        row = []
        for c in range(size):
            entry = zero()
            for mu in range(total):
                for nu in range(total):
                    entry = entry + sigma(rep, mu, nu).entry(r, c) * F[mu, nu]
            row.append(entry)
        rows.append(tuple(row))
    return SpinorMatrix(tuple(rows))


def expected_contraction(rep: GammaRep, constant: str) -> SpinorMatrix:
    """2 i c sum_j alpha_j x_j."""
    names = coordinate_names(rep.dim.spatial)
    total = SpinorMatrix.zeros(rep.size)
    for j, alpha in enumerate(derived(rep).alphas, start=1):
        total = total + alpha.scale(imag_unit() * sym(constant) * sym(names[j]) * 2)
    return total


def verify_lagrangian(dim: Dim) -> List[CheckResult]:
    rep = make_rep(dim)
    label = str(dim)
    checks = []

    literal = free_dirac_lagrangian(rep, form="bar")
    reduced = free_dirac_lagrangian(rep, form="dagger")
    checks.append(CheckResult.compare("free_lagrangian_reduction", label, True, densities_equal(literal, reduced)))

    constant = field_constant(dim)
    F = covariant_field_tensor(constant, dim)
    contraction = interaction_contraction(rep, F, const(1))
    checks.append(CheckResult.compare("sigma_contraction", label, expected_contraction(rep, constant), contraction))
    checks.append(CheckResult.compare(
        "sigma_contraction_entrywise", label, contraction_entrywise(rep, F), contraction,
    ))

    L = build_do_lagrangian(dim)
    H = hamiltonian_extract(L)
    checks.append(CheckResult.compare("hamiltonian", label, reference_hamiltonian(dim, rep), H))
    checks.append(CheckResult.compare("hamiltonian_hermitian", label, True, H.is_hermitian()))

    operator, adjoint = euler_lagrange_pair(L)
    checks.append(CheckResult.compare("euler_lagrange_adjoint_pair", label, True, are_formal_adjoints(operator, adjoint)))

    free = hamiltonian_extract(free_dirac_lagrangian(rep, massless=True, form="dagger"))
    free_expected = DiracOperator(
        dim, rep, rep.identity().scale(imag_unit()), derived(rep).alphas, SpinorMatrix.zeros(rep.size)
    )
    checks.append(CheckResult.compare("massless_free_hamiltonian", label, free_expected, free))
    return checks
