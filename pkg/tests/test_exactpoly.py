from fractions import Fraction

import pytest
from hypothesis import given

from symbolic.exactpoly import (
    CyclicBindingError,
    GaussianRational,
    InvalidVariableError,
    PolyExpr,
    PolyParseError,
    Universe,
    UniverseMismatchError,
    arith,
    parse,
    partial,
    poly_equal,
    substitute,
    to_text,
)
from symbolic.symbols import STANDARD, const, imag_unit, sym, zero
from tests.strategies import polys

t, x, y = sym("t"), sym("x"), sym("y")


def test_gaussian_rational_arithmetic():
    i = GaussianRational(0, 1)
    assert i * i == GaussianRational(-1)
    assert GaussianRational.of("3/4") == GaussianRational(Fraction(3, 4))
    assert GaussianRational(1, -2).conjugate() == GaussianRational(1, 2)
    assert not GaussianRational()
    with pytest.raises(TypeError):
        GaussianRational.of(0.5)


def test_imaginary_unit_squares_to_minus_one():
    assert imag_unit() * imag_unit() == const(-1)


def test_cancellation_gives_canonical_zero():
    p = x * y + const(1, 3)
    assert (p - p).is_zero()
    assert p - p == zero()
    assert to_text(p - p) == "0"


def test_declared_inverse_cancels():
    assert sym("m") * sym("m_inv") == const(1)
    assert sym("m") ** 2 * sym("m_inv") == sym("m")


def test_arith_kinds():
    assert arith(x, y, "add") == x + y
    assert arith(x, y, "sub") == x - y
    assert arith(x, y, "mul") == x * y
    assert arith(x, Fraction(1, 2), "scale") == x * const(1, 2)
    with pytest.raises(ValueError):
        arith(x, y, "div")


@given(polys(), polys())
def test_addition_and_multiplication_commute(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(polys(), polys(), polys())
def test_addition_and_multiplication_associate(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)


@given(polys(), polys(), polys())
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


def test_partial_derivative():
    assert partial(x ** 2 * y, "x") == x * y * 2
    assert partial(x ** 2 * y, "t").is_zero()
    assert partial(sym("rho") * t * x, "t") == sym("rho") * x


def test_partial_rejects_constants():
    with pytest.raises(InvalidVariableError):
        partial(sym("rho") * x, "rho")


@given(polys(), polys())
def test_leibniz_rule(p, q):
    assert partial(p * q, "x") == partial(p, "x") * q + p * partial(q, "x")


@given(polys())
def test_mixed_partials_commute(p):
    assert partial(partial(p, "t"), "x") == partial(partial(p, "x"), "t")


def test_substitute_resolves_chains():
    p = sym("rho") * x
    result = substitute(p, {"rho": sym("B") * const(1, 2), "B": sym("m") * sym("omega")})
    assert result == sym("m") * sym("omega") * x * const(1, 2)


def test_simultaneous_substitution_allows_self_reference():
    A0 = sym("A_0")
    shifted = A0 + sym("e_inv") * sym("d0_theta")
    result = substitute(A0 * A0, {"A_0": shifted}, simultaneous=True)
    assert result == shifted * shifted
    with pytest.raises(CyclicBindingError):
        substitute(A0, {"A_0": shifted})


def test_simultaneous_substitution_does_not_chain():
    bindings = {"rho": sym("B"), "B": sym("m")}
    assert substitute(sym("rho") * sym("B"), bindings, simultaneous=True) == sym("B") * sym("m")
    assert substitute(sym("rho") * sym("B"), bindings) == sym("m") * sym("m")


def test_substitute_rejects_cycles_and_coordinates():
    with pytest.raises(CyclicBindingError):
        substitute(sym("rho"), {"rho": sym("B"), "B": sym("rho")})
    with pytest.raises(InvalidVariableError):
        substitute(x, {"x": y})
    with pytest.raises(InvalidVariableError):
        substitute(x, {"nope": y})


def test_canonical_text():
    assert to_text(x * 2 + 1) == "2*x + 1"
    assert to_text((x + y) ** 2) == "x^2 + 2*x*y + y^2"
    assert to_text(-x) == "-x"
    assert to_text(x - 1) == "x - 1"
    assert to_text(imag_unit() * x) == "i*x"
    assert to_text(const(1, 2)) == "1/2"
    assert to_text((const(1) + imag_unit()) * x) == "(1+i)*x"


def test_parse_inverts_canonical_text():
    for p in [x ** 2 * sym("rho") - const(3, 4), (const(1) - imag_unit() * 2) * t * y, -imag_unit() * x, zero()]:
        assert parse(STANDARD, to_text(p)) == p


@given(polys(names=("t", "x", "y", "zeta")))
def test_parse_property(p):
    assert poly_equal(parse(STANDARD, to_text(p)), p)


def test_parse_errors():
    with pytest.raises(PolyParseError):
        parse(STANDARD, "2*unknown")
    with pytest.raises(PolyParseError):
        parse(STANDARD, "(1+)*x")


def test_universe_mismatch():
    other = Universe(coordinates=("t", "x"), constants=("rho",))
    with pytest.raises(UniverseMismatchError):
        x + PolyExpr.symbol(other, "x")
    with pytest.raises(UniverseMismatchError):
        poly_equal(x, PolyExpr.symbol(other, "x"))


def test_universe_validation():
    with pytest.raises(ValueError):
        Universe(coordinates=("x",), constants=("x",))
    with pytest.raises(ValueError):
        Universe(coordinates=("t",), constants=("i",))
    with pytest.raises(InvalidVariableError):
        sym("not_declared")


def test_degree_symbols_and_conjugate():
    p = x ** 2 * sym("rho") + imag_unit() * t
    assert p.degree() == 3
    assert p.symbols() == ("t", "x", "rho")
    assert p.conjugate() == x ** 2 * sym("rho") - imag_unit() * t
    with pytest.raises(ValueError):
        x ** -1
