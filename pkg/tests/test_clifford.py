import pytest

from evaluator.clifford_checks import projector_algebra_holds, verify_clifford
from symbolic.clifford import (
    SIGMA_1,
    SIGMA_2,
    SIGMA_3,
    NoChiralityError,
    RepresentationError,
    SpinorMatrix,
    all_reps,
    anticommutation_holds,
    anticommutator,
    chiral_projectors,
    derived,
    gamma5,
    gamma5_anticommutes,
    hermiticity_holds,
    make_rep,
    sigma,
    sigma_adjoint_holds,
)
from symbolic.minkowski import DIM_1_1, DIM_2_1, DIM_3_1
from symbolic.symbols import imag_unit, sym


@pytest.mark.parametrize("rep", all_reps(), ids=lambda rep: f"{rep.dim}-{rep.reducible}-{rep.alternate}")
def test_algebra_identities(rep):
    assert anticommutation_holds(rep)
    assert hermiticity_holds(rep)
    assert sigma_adjoint_holds(rep)


def test_representation_sizes():
    assert make_rep(DIM_1_1).size == 2
    assert make_rep(DIM_2_1).size == 2
    assert make_rep(DIM_2_1, reducible=True).size == 4
    assert make_rep(DIM_3_1).size == 4


def test_fixed_planar_representation():
    rep = make_rep(DIM_2_1)
    assert rep.gammas == (SIGMA_3, SIGMA_1.scale(imag_unit()), SIGMA_2.scale(imag_unit()))
    assert make_rep(DIM_2_1, alternate=True).gammas[2] == -SIGMA_2.scale(imag_unit())


def test_option_combinations_that_do_not_exist():
    with pytest.raises(RepresentationError):
        make_rep(DIM_1_1, reducible=True)
    with pytest.raises(RepresentationError):
        make_rep(DIM_3_1, reducible=True)
    with pytest.raises(RepresentationError):
        make_rep(DIM_2_1, reducible=True, alternate=True)


def test_spatial_gammas_square_to_minus_identity():
    rep = make_rep(DIM_1_1)
    assert rep.gammas[1] @ rep.gammas[1] == -rep.identity()
    assert anticommutator(rep.gammas[0], rep.gammas[1]).is_zero()


def test_dirac_gammas_are_traceless():
    for gamma in make_rep(DIM_3_1).gammas:
        assert gamma.trace().is_zero()


@pytest.mark.parametrize("dim", [DIM_1_1, DIM_2_1, DIM_3_1], ids=str)
def test_derived_matrices(dim):
    rep = make_rep(dim)
    matrices = derived(rep)
    assert matrices.beta @ matrices.beta == rep.identity()
    for alpha in matrices.alphas:
        assert alpha.is_hermitian()
        assert alpha @ alpha == rep.identity()
        assert anticommutator(alpha, matrices.beta).is_zero()


@pytest.mark.parametrize("dim", [DIM_1_1, DIM_2_1, DIM_3_1], ids=str)
def test_sigma_structure(dim):
    rep = make_rep(dim)
    alphas = derived(rep).alphas
    assert sigma(rep, 0, 0).is_zero()
    for j in range(1, dim.total):
        assert sigma(rep, 0, j) == alphas[j - 1].scale(imag_unit())
    for mu in range(dim.total):
        for nu in range(dim.total):
            assert sigma(rep, mu, nu) == -sigma(rep, nu, mu)
    with pytest.raises(IndexError):
        sigma(rep, 0, dim.total)


def test_chirality_in_two_dimensions():
    rep = make_rep(DIM_1_1)
    g5 = gamma5(rep)
    assert g5 @ g5 == rep.identity()
    assert gamma5_anticommutes(rep)
    assert projector_algebra_holds(rep)


def test_reducible_planar_chirality():
    rep = make_rep(DIM_2_1, reducible=True)
    assert gamma5_anticommutes(rep)
    projectors = chiral_projectors(rep)
    assert projectors.right + projectors.left == rep.identity()
    assert (projectors.right @ projectors.left).is_zero()


def test_irreducible_planar_rep_has_no_chirality():
    rep = make_rep(DIM_2_1)
    product = rep.gammas[0] @ rep.gammas[1] @ rep.gammas[2]
    assert product == rep.identity().scale(product.entry(0, 0))
    with pytest.raises(NoChiralityError):
        chiral_projectors(rep)


def test_matrix_helpers():
    m = SpinorMatrix.of([[sym("x"), imag_unit()], [0, 1]])
    assert m.dagger() == SpinorMatrix.of([[sym("x"), 0], [-imag_unit(), 1]])
    assert not m.is_hermitian()
    assert SpinorMatrix.unit(2, 0, 1) @ SpinorMatrix.unit(2, 1, 0) == SpinorMatrix.unit(2, 0, 0)
    with pytest.raises(ValueError):
        SpinorMatrix.of([[1, 0]])
    with pytest.raises(ValueError):
        m + SpinorMatrix.identity(4)


def test_verify_clifford_report():
    checks = verify_clifford()
    assert all(check.status != "fail" for check in checks)
    skipped = [check.name for check in checks if check.status == "skip"]
    assert len(skipped) == 4
    assert all("2+1" in name for name in skipped)
    assert len(verify_clifford(DIM_3_1)) == 5
