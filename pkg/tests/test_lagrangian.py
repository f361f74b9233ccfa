from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evaluator.lagrangian_checks import verify_lagrangian
from evaluator.symmetry_checks import verify_chiral, verify_u1
from symbolic.clifford import NoChiralityError, derived, make_rep
from symbolic.gaugefields import covariant_field_tensor
from symbolic.lagrangian import (
    PSI,
    PSI_BAR,
    LagrangianDensity,
    LagrangianFormError,
    PhaseElement,
    Term,
    build_do_lagrangian,
    chiral_decompose,
    chiral_transform,
    densities_equal,
    density_text,
    euler_lagrange_pair,
    are_formal_adjoints,
    free_dirac_lagrangian,
    hamiltonian_extract,
    interaction_contraction,
    is_null,
    reference_hamiltonian,
    residual,
    u1_transform,
    yang_mills,
)
from symbolic.minkowski import DIM_1_1, DIM_2_1, DIM_3_1
from symbolic.symbols import const, imag_unit, sym
from tests.strategies import polys

DIMS = [DIM_1_1, DIM_2_1]
PHASES = st.sampled_from(["theta", "theta_R", "theta_L", None])


@lru_cache(maxsize=None)
def massless_line_blocks():
    return chiral_decompose(build_do_lagrangian(DIM_1_1, massless=True, gauge_sector=True))


def test_phase_elements():
    right = PhaseElement.of({"theta_R": -1})
    left = PhaseElement.of({"theta_L": 1})
    assert (right * right.conjugate()).is_identity()
    assert str(left * right) == "exp[i(theta_L - theta_R)]"
    assert str(PhaseElement()) == "1"


def test_terms_must_be_bilinears():
    with pytest.raises(LagrangianFormError):
        Term("bad", PSI, PSI, ())


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_free_lagrangian_reduces_to_dagger_form(dim):
    rep = make_rep(dim)
    assert densities_equal(free_dirac_lagrangian(rep, form="bar"), free_dirac_lagrangian(rep, form="dagger"))
    assert free_dirac_lagrangian(rep, form="dagger").labels()[-1] == "time"
    with pytest.raises(ValueError):
        free_dirac_lagrangian(rep, form="other")


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_sigma_contraction(dim):
    rep = make_rep(dim)
    c = "zeta" if dim == DIM_1_1 else "rho"
    contraction = interaction_contraction(rep, covariant_field_tensor(c, dim), const(1))
    names = ("x", "y")
    expected = sum(
        (alpha.scale(imag_unit() * sym(c) * sym(names[j]) * 2) for j, alpha in enumerate(derived(rep).alphas)),
        start=rep.identity().scale(0),
    )
    assert contraction == expected


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_hamiltonian_extraction(dim):
    H = hamiltonian_extract(build_do_lagrangian(dim))
    assert H == reference_hamiltonian(dim)
    assert H.is_hermitian()
    assert str(H).startswith("H = ")


def test_massless_hamiltonian_keeps_oscillator_coupling():
    H = hamiltonian_extract(build_do_lagrangian(DIM_1_1, massless=True))
    assert H == reference_hamiltonian(DIM_1_1, massless=True)
    assert "m" in H.potential.entry(0, 1).symbols()


def test_dropping_the_i_breaks_hermiticity():
    L = build_do_lagrangian(DIM_1_1, coupling=sym("m") * sym("omega") * imag_unit())
    assert not hamiltonian_extract(L).is_hermitian()


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_euler_lagrange_pair_is_adjoint(dim):
    operator, adjoint = euler_lagrange_pair(build_do_lagrangian(dim))
    assert are_formal_adjoints(operator, adjoint)


def test_extraction_rejects_other_shapes():
    with pytest.raises(LagrangianFormError):
        build_do_lagrangian(DIM_3_1)
    rep = make_rep(DIM_1_1)
    scaled = LagrangianDensity(DIM_1_1, rep, tuple(
        Term(t.label, t.left, t.right, tuple((d, k.scale(2)) for d, k in t.parts))
        for t in free_dirac_lagrangian(rep, form="dagger").terms
    ))
    with pytest.raises(LagrangianFormError):
        hamiltonian_extract(scaled)
    decomposed = chiral_decompose(build_do_lagrangian(DIM_1_1, massless=True, gauge_sector=True))
    with pytest.raises(LagrangianFormError):
        hamiltonian_extract(chiral_transform(decomposed).transformed)


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_yang_mills_is_gauge_invariant(dim):
    L = build_do_lagrangian(dim, gauge_sector=True)
    assert L.gauge_kinetic == yang_mills(dim)
    assert u1_transform(L).gauge_kinetic == L.gauge_kinetic


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_u1_invariance_with_compensating_shift(dim):
    L = build_do_lagrangian(dim, gauge_sector=True)
    assert is_null(residual(u1_transform(L), L))


@pytest.mark.parametrize("shift, weight", [("as_printed", 2), ("none", 1)])
def test_u1_residual_without_compensation(shift, weight):
    L = build_do_lagrangian(DIM_2_1, gauge_sector=True)
    kernel = rep_current(L.rep, weight)
    expected = LagrangianDensity(DIM_2_1, L.rep, (Term("current", PSI_BAR, PSI, ((None, kernel),)),))
    assert densities_equal(residual(u1_transform(L, "theta", shift), L), expected)


def rep_current(rep, weight):
    total = rep.identity().scale(0)
    for mu, gamma in enumerate(rep.gammas):
        total = total + gamma.scale(sym(f"d{mu}_theta") * weight)
    return total


def test_u1_rejects_unknown_shift():
    with pytest.raises(ValueError):
        u1_transform(build_do_lagrangian(DIM_1_1, gauge_sector=True), "theta", "sideways")


@pytest.mark.parametrize("dim", DIMS, ids=str)
@settings(max_examples=15)
@given(theta=polys(names=("t", "x", "y")))
def test_u1_invariance_for_polynomial_phases(dim, theta):
    L = build_do_lagrangian(dim, gauge_sector=True)
    assert densities_equal(u1_transform(L, theta), L)


def test_chiral_decomposition_blocks():
    rep = make_rep(DIM_2_1, reducible=True)
    L = build_do_lagrangian(DIM_2_1, massless=True, rep=rep, gauge_sector=True)
    decomposed = chiral_decompose(L)
    assert len(decomposed.terms) == 6
    assert densities_equal(decomposed, L)
    with pytest.raises(NoChiralityError):
        chiral_decompose(build_do_lagrangian(DIM_2_1, massless=True, gauge_sector=True))
    with pytest.raises(LagrangianFormError):
        chiral_transform(L)


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_chiral_symmetry_is_broken_by_the_oscillator_term(dim):
    rep = make_rep(dim, reducible=dim == DIM_2_1)
    decomposed = chiral_decompose(build_do_lagrangian(dim, massless=True, rep=rep, gauge_sector=True))
    outcome = chiral_transform(decomposed)
    assert not outcome.invariant
    text = density_text(outcome.residual)
    assert "exp[i(theta_L - theta_R)]" in text
    assert "exp[i(-theta_L + theta_R)]" in text
    assert chiral_transform(decomposed, "theta", "theta").invariant


@settings(max_examples=16)
@given(theta_r=PHASES, theta_l=PHASES)
def test_chiral_residual_vanishes_only_for_equal_phases(theta_r, theta_l):
    outcome = chiral_transform(massless_line_blocks(), theta_r, theta_l)
    assert outcome.invariant == (theta_r == theta_l)


def test_one_sided_chiral_phase_breaks_only_the_oscillator_term():
    decomposed = massless_line_blocks()
    outcome = chiral_transform(decomposed, theta_r="theta", theta_l=None)
    assert not outcome.invariant
    oscillator = LagrangianDensity(
        decomposed.dim, decomposed.rep, tuple(t for t in decomposed.terms if t.label == "do"), decomposed.gauge_kinetic
    )
    assert oscillator.terms
    assert densities_equal(outcome.residual, chiral_transform(oscillator, "theta", None).residual)
    assert all(deriv is None for term in outcome.residual.terms for deriv, _ in term.parts)


def test_symmetry_suites():
    checks, report = verify_u1(DIM_2_1)
    assert all(check.status == "pass" for check in checks)
    assert report.invariant and report.residual is None

    checks, report = verify_u1(DIM_2_1, gauge_shift="as_printed")
    assert all(check.status == "pass" for check in checks)
    assert not report.invariant

    checks, report = verify_chiral(DIM_2_1)
    assert all(check.status == "pass" for check in checks)
    assert not report.invariant and report.residual

    checks, report = verify_chiral(DIM_1_1, theta_equal=True)
    assert all(check.status == "pass" for check in checks)
    assert report.invariant

    checks, report = verify_chiral(DIM_2_1, irreducible=True)
    assert [check.status for check in checks] == ["skip"]
    assert report is None


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_lagrangian_suite(dim):
    checks = verify_lagrangian(dim)
    assert len(checks) == 7
    assert all(check.status == "pass" for check in checks), [c for c in checks if c.status != "pass"]
