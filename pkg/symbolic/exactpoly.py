"""
Exact multivariate polynomial algebra over Gaussian-rational coefficients.

Every symbolic check in the project reduces to equality of canonical
PolyExpr values, so coefficients never pass through floating point.
Conversion to complex numbers happens only in the numeric solvers.
"""
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union


class UniverseMismatchError(ValueError):
    """Operands were declared over different symbol universes."""


class InvalidVariableError(ValueError):
    """A symbol is unknown, or is used where a coordinate is required."""


class CyclicBindingError(ValueError):
    """Substitution bindings refer to each other in a cycle."""


class PolyParseError(ValueError):
    """Canonical text could not be parsed back into a PolyExpr."""


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def of(cls, value: "Scalar") -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        if isinstance(value, str):
            return _parse_coefficient(value)
        raise TypeError(f"Cannot use {type(value).__name__} as an exact coefficient")

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_text(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{_imag_text(abs(self.im))})"


Scalar = Union[int, Fraction, GaussianRational, str]

ZERO_COEFF = GaussianRational()
ONE_COEFF = GaussianRational(Fraction(1))
I_COEFF = GaussianRational(Fraction(0), Fraction(1))


def _imag_text(value: Fraction) -> str:
    if value == 1:
        return "i"
    if value == -1:
        return "-i"
    return f"{value}i"


_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Universe:
    """
    Ordered set of symbols a PolyExpr may mention.

    Coordinates can be differentiated; constants cannot. Each pair in
    ``inverses`` declares ``(c, c_inv)`` with ``c * c_inv = 1`` applied
    during canonicalization.
    """

    coordinates: Tuple[str, ...]
    constants: Tuple[str, ...]
    inverses: Tuple[Tuple[str, str], ...] = ()
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)
    _partner: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = self.coordinates + self.constants
        if len(set(names)) != len(names):
            raise ValueError("Universe symbols must be unique")
        for name in names:
            if not _NAME_RE.match(name) or name == "i":
                raise ValueError(f"Invalid symbol name: {name!r}")
        index = {name: position for position, name in enumerate(names)}
        partner: Dict[int, int] = {}
        for base, inverse in self.inverses:
            if base not in self.constants or inverse not in self.constants:
                raise ValueError(f"Inverse pair ({base}, {inverse}) must name declared constants")
            partner[index[base]] = index[inverse]
            partner[index[inverse]] = index[base]
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_partner", partner)

    @property
    def names(self) -> Tuple[str, ...]:
        return self.coordinates + self.constants

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InvalidVariableError(f"Unknown symbol: {name!r}") from None

    def is_coordinate(self, name: str) -> bool:
        return name in self.coordinates

    def partner(self, position: int) -> Optional[int]:
        return self._partner.get(position)


# Sparse monomial: sorted ((symbol index, exponent), ...) with exponents > 0
Monomial = Tuple[Tuple[int, int], ...]


def _mul_monomials(left: Monomial, right: Monomial) -> Dict[int, int]:
    powers = dict(left)
    for position, exponent in right:
        powers[position] = powers.get(position, 0) + exponent
    return powers


def _canonical_monomial(universe: Universe, powers: Dict[int, int]) -> Monomial:
    for position in list(powers):
        other = universe.partner(position)
        if other is None or other not in powers:
            continue
        shared = min(powers[position], powers[other])
        powers[position] -= shared
        powers[other] -= shared
    return tuple(sorted((p, e) for p, e in powers.items() if e > 0))


@dataclass(frozen=True)
class PolyExpr:
    """
    Immutable polynomial in canonical form.

    Terms are sorted graded-lexicographically (highest degree first) and no
    stored coefficient is zero, so structural equality is exact equality.
    """

    universe: Universe
    terms: Tuple[Tuple[Monomial, GaussianRational], ...] = ()

    # Construction

    @classmethod
    def from_mapping(cls, universe: Universe, mapping: Mapping[Monomial, GaussianRational]) -> "PolyExpr":
        merged: Dict[Monomial, GaussianRational] = {}
        for monomial, coefficient in mapping.items():
            key = _canonical_monomial(universe, dict(monomial))
            merged[key] = merged.get(key, ZERO_COEFF) + coefficient
        size = len(universe.names)

        def order(item):
            monomial = item[0]
            dense = [0] * size
            for position, exponent in monomial:
                dense[position] = exponent
            return (-sum(dense), tuple(-e for e in dense))

        kept = sorted(((m, c) for m, c in merged.items() if c), key=order)
        return cls(universe, tuple(kept))

    @classmethod
    def zero(cls, universe: Universe) -> "PolyExpr":
        return cls(universe, ())

    @classmethod
    def constant(cls, universe: Universe, value: Scalar) -> "PolyExpr":
        return cls.from_mapping(universe, {(): GaussianRational.of(value)})

    @classmethod
    def symbol(cls, universe: Universe, name: str) -> "PolyExpr":
        return cls(universe, ((((universe.index(name), 1),), ONE_COEFF),))

    # Arithmetic

    def _coerce(self, other: Union["PolyExpr", Scalar]) -> "PolyExpr":
        if isinstance(other, PolyExpr):
            if other.universe is not self.universe and other.universe != self.universe:
                raise UniverseMismatchError("Operands belong to different symbol universes")
            return other
        return PolyExpr.constant(self.universe, other)

    def __add__(self, other):
        other = self._coerce(other)
        mapping: Dict[Monomial, GaussianRational] = dict(self.terms)
        for monomial, coefficient in other.terms:
            mapping[monomial] = mapping.get(monomial, ZERO_COEFF) + coefficient
        return PolyExpr.from_mapping(self.universe, mapping)

    __radd__ = __add__

    def __neg__(self):
        return PolyExpr(self.universe, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        mapping: Dict[Monomial, GaussianRational] = {}
        for left, a in self.terms:
            for right, b in other.terms:
                key = _canonical_monomial(self.universe, _mul_monomials(left, right))
                mapping[key] = mapping.get(key, ZERO_COEFF) + a * b
        return PolyExpr.from_mapping(self.universe, mapping)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative powers are not polynomial")
        result = PolyExpr.constant(self.universe, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # Inspection

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m, _ in self.terms), default=0)

    def symbols(self) -> Tuple[str, ...]:
        names = self.universe.names
        used = sorted({position for monomial, _ in self.terms for position, _ in monomial})
        return tuple(names[position] for position in used)

    def coefficients(self) -> List[GaussianRational]:
        return [c for _, c in self.terms]

    def conjugate(self) -> "PolyExpr":
        """Complex conjugate, treating every symbol as real."""
        return PolyExpr(self.universe, tuple((m, c.conjugate()) for m, c in self.terms))

    def __str__(self) -> str:
        return to_text(self)


# Operations


def arith(p: PolyExpr, q: Union[PolyExpr, Scalar], kind: str) -> PolyExpr:
    """
    Exact binary arithmetic.

    Args:
        p: Left operand
        q: Right operand; for ``scale`` any scalar or PolyExpr factor
        kind: One of ``add``, ``sub``, ``mul``, ``scale``

    Returns:
        Canonical result
    """
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind in ("mul", "scale"):
        return p * q
    raise ValueError(f"Unknown arithmetic kind: {kind}")


def partial(p: PolyExpr, var: str) -> PolyExpr:
    """Formal partial derivative with respect to a coordinate."""
    if not p.universe.is_coordinate(var):
        raise InvalidVariableError(f"Cannot differentiate with respect to non-coordinate {var!r}")
    target = p.universe.index(var)
    mapping: Dict[Monomial, GaussianRational] = {}
    for monomial, coefficient in p.terms:
        powers = dict(monomial)
        exponent = powers.get(target, 0)
        if not exponent:
            continue
        powers[target] = exponent - 1
        key = tuple(sorted((k, e) for k, e in powers.items() if e > 0))
        mapping[key] = mapping.get(key, ZERO_COEFF) + coefficient * GaussianRational(exponent)
    return PolyExpr.from_mapping(p.universe, mapping)


def poly_equal(p: PolyExpr, q: PolyExpr) -> bool:
    if p.universe is not q.universe and p.universe != q.universe:
        raise UniverseMismatchError("Operands belong to different symbol universes")
    return p.terms == q.terms


def _check_acyclic(bindings: Mapping[str, PolyExpr]) -> None:
    state: Dict[str, int] = {}

    def visit(name: str, trail: List[str]) -> None:
        if state.get(name) == 2:
            return
        if state.get(name) == 1:
            raise CyclicBindingError("Cyclic bindings: " + " -> ".join(trail + [name]))
        state[name] = 1
        for dependency in bindings[name].symbols():
            if dependency in bindings:
                visit(dependency, trail + [name])
        state[name] = 2

    for name in bindings:
        visit(name, [])


def substitute(p: PolyExpr, bindings: Mapping[str, PolyExpr], simultaneous: bool = False) -> PolyExpr:
    """
    Replace constants by polynomials, resolving chained bindings.

    With ``simultaneous`` every binding is applied once to the original
    symbols, so a value may mention its own key (A -> A + dA).

    Raises:
        InvalidVariableError: If a binding key is a coordinate or unknown
        CyclicBindingError: If chained bindings form a cycle
    """
    if not bindings:
        return p
    universe = p.universe
    for name, value in bindings.items():
        universe.index(name)
        if universe.is_coordinate(name):
            raise InvalidVariableError(f"Only constants can be substituted, got coordinate {name!r}")
        p._coerce(value)
    if simultaneous:
        return _substitute_once(p, bindings.get)
    _check_acyclic(bindings)

    resolved: Dict[str, PolyExpr] = {}

    def lookup(name: str) -> Optional[PolyExpr]:
        if name not in bindings:
            return None
        if name not in resolved:
            resolved[name] = _substitute_once(bindings[name], lookup)
        return resolved[name]

    return _substitute_once(p, lookup)


def _substitute_once(p: PolyExpr, lookup) -> PolyExpr:
    universe = p.universe
    names = universe.names
    result = PolyExpr.zero(universe)
    for monomial, coefficient in p.terms:
        term = PolyExpr.constant(universe, coefficient)
        for position, exponent in monomial:
            factor = lookup(names[position])
            if factor is None:
                factor = PolyExpr(universe, ((((position, 1),), ONE_COEFF),))
            term = term * factor ** exponent
        result = result + term
    return result


# Canonical text


def _monomial_text(universe: Universe, monomial: Monomial) -> str:
    names = universe.names
    parts = []
    for position, exponent in monomial:
        parts.append(names[position] if exponent == 1 else f"{names[position]}^{exponent}")
    return "*".join(parts)


def to_text(p: PolyExpr) -> str:
    """Canonical serialization; ``parse`` inverts it exactly."""
    if not p.terms:
        return "0"
    pieces = []
    for monomial, coefficient in p.terms:
        body = _monomial_text(p.universe, monomial)
        if not body:
            text = str(coefficient)
        elif coefficient == ONE_COEFF:
            text = body
        elif coefficient == -ONE_COEFF:
            text = "-" + body
        else:
            text = f"{coefficient}*{body}"
        pieces.append(text)
    out = pieces[0]
    for text in pieces[1:]:
        out += f" - {text[1:]}" if text.startswith("-") else f" + {text}"
    return out


_REAL_RE = re.compile(r"^\d+(?:/\d+)?$")
_IMAG_RE = re.compile(r"^(\d+(?:/\d+)?)?i$")
_COMPLEX_RE = re.compile(r"^(-?\d+(?:/\d+)?)([+-])(\d+(?:/\d+)?)?i$")


def _parse_coefficient(text: str) -> GaussianRational:
    text = text.strip()
    sign = 1
    if text.startswith("-") and not text.startswith("(-"):
        sign, text = -1, text[1:]
    if text.startswith("(") and text.endswith(")"):
        match = _COMPLEX_RE.match(text[1:-1])
        if not match:
            raise PolyParseError(f"Bad complex coefficient: {text!r}")
        imag = Fraction(match.group(3) or 1)
        value = GaussianRational(Fraction(match.group(1)), imag if match.group(2) == "+" else -imag)
    elif _REAL_RE.match(text):
        value = GaussianRational(Fraction(text))
    elif _IMAG_RE.match(text):
        value = GaussianRational(Fraction(0), Fraction(_IMAG_RE.match(text).group(1) or 1))
    else:
        raise PolyParseError(f"Bad coefficient: {text!r}")
    return value if sign > 0 else -value


def _split_terms(text: str) -> Iterable[Tuple[int, str]]:
    depth, start, sign = 0, 0, 1
    position = 0
    while position < len(text):
        char = text[position]
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif depth == 0 and text.startswith((" + ", " - "), position):
            yield sign, text[start:position]
            sign = 1 if text[position + 1] == "+" else -1
            position += 3
            start = position
            continue
        position += 1
    yield sign, text[start:]


def parse(universe: Universe, text: str) -> PolyExpr:
    """Parse canonical text produced by ``to_text``."""
    text = text.strip()
    if text == "0":
        return PolyExpr.zero(universe)
    result = PolyExpr.zero(universe)
    for sign, body in _split_terms(text):
        if body.startswith("-") and not body.startswith("(-"):
            sign, body = -sign, body[1:]
        if body.startswith("("):
            close = body.index(")")
            coefficient = _parse_coefficient(body[: close + 1])
            rest = body[close + 1:]
            if rest and not rest.startswith("*"):
                raise PolyParseError(f"Bad term: {body!r}")
            factors = rest[1:].split("*") if rest else []
        else:
            factors = body.split("*")
            head = factors[0]
            if _REAL_RE.match(head) or _IMAG_RE.match(head):
                coefficient = _parse_coefficient(head)
                factors = factors[1:]
            else:
                coefficient = ONE_COEFF
        term = PolyExpr.constant(universe, coefficient if sign > 0 else -coefficient)
        for factor in factors:
            name, _, power = factor.partition("^")
            try:
                term = term * PolyExpr.symbol(universe, name) ** (int(power) if power else 1)
            except InvalidVariableError as error:
                raise PolyParseError(str(error)) from error
        result = result + term
    return result
