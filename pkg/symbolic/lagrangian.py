"""
Symbolic Lagrangian densities for the Dirac oscillator coupled to QED.

A density is a list of bilinear terms  left^dag-or-bar  K  d_mu  right  plus
a Yang-Mills polynomial in the gauge-gradient symbols dA_{mu nu}. Gauge
fields A_mu enter matrix kernels as polynomial symbols. Local phases are
formal group elements exp[i sum n_k theta_k]; differentiating one yields the
opaque constants d{mu}_theta.

Two densities are compared through ``matrix_form``, which rewrites every
psibar as psi^dag gamma^0, folds chirality projectors into the kernels and
groups kernels by (total phase, derivative index). Equality of densities is
equality of these groupings, so it is exact and representation-aware.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

from symbolic.clifford import (
    GammaRep,
    SpinorMatrix,
    chiral_projectors,
    derived,
    make_rep,
    sigma,
)
from symbolic.exactpoly import PolyExpr, partial, substitute
from symbolic.gaugefields import FieldTensor
from symbolic.minkowski import DIM_1_1, DIM_2_1, Dim, DimensionMismatchError
from symbolic.symbols import (
    const,
    coordinate_names,
    gauge_field_name,
    gauge_gradient_name,
    imag_unit,
    phase_gradient_name,
    phase_hessian_name,
    sym,
    zero,
)

logger = logging.getLogger(__name__)


class LagrangianFormError(ValueError):
    """The density does not have the shape an operation requires."""


# Phases and fields


@dataclass(frozen=True, order=True)
class PhaseElement:
    """exp[i sum_k n_k theta_k] with the exponent stored as sorted (theta, n_k) pairs."""

    exponent: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[str, int]) -> "PhaseElement":
        return cls(tuple(sorted((name, n) for name, n in mapping.items() if n)))

    def __mul__(self, other: "PhaseElement") -> "PhaseElement":
        merged = dict(self.exponent)
        for name, n in other.exponent:
            merged[name] = merged.get(name, 0) + n
        return PhaseElement.of(merged)

    def conjugate(self) -> "PhaseElement":
        return PhaseElement(tuple((name, -n) for name, n in self.exponent))

    def is_identity(self) -> bool:
        return not self.exponent

    def __str__(self) -> str:
        if not self.exponent:
            return "1"
        pieces = []
        for name, n in self.exponent:
            magnitude = "" if abs(n) == 1 else f"{abs(n)}*"
            sign = "-" if n < 0 else "+"
            pieces.append(f"{sign} {magnitude}{name}")
        body = " ".join(pieces)
        body = body[2:] if body.startswith("+ ") else "-" + body[2:]
        return f"exp[i({body})]"


IDENTITY_PHASE = PhaseElement()

FIELD_NAMES = ("psi", "psi_dag", "psi_bar")
CHIRALITIES = (None, "R", "L")


@dataclass(frozen=True)
class FieldSymbol:
    """A matter field, optionally chirality-tagged and carrying a local phase."""

    name: str = "psi"
    chirality: Optional[str] = None
    phase: PhaseElement = IDENTITY_PHASE

    def __post_init__(self):
        if self.name not in FIELD_NAMES:
            raise ValueError(f"Unknown field {self.name!r}")
        if self.chirality not in CHIRALITIES:
            raise ValueError(f"Unknown chirality {self.chirality!r}")

    def with_phase(self, increment: PhaseElement) -> "FieldSymbol":
        return replace(self, phase=self.phase * increment)

    def __str__(self) -> str:
        base = {"psi": "psi", "psi_dag": "psi^dag", "psi_bar": "psibar"}[self.name]
        return base + (f"_{self.chirality}" if self.chirality else "")


PSI = FieldSymbol("psi")
PSI_DAG = FieldSymbol("psi_dag")
PSI_BAR = FieldSymbol("psi_bar")

# (derivative index acting on the right field or None, kernel)
Part = Tuple[Optional[int], SpinorMatrix]


@dataclass(frozen=True)
class Term:
    label: str
    left: FieldSymbol
    right: FieldSymbol
    parts: Tuple[Part, ...]

    def __post_init__(self):
        if self.left.name == "psi" or self.right.name != "psi":
            raise LagrangianFormError("Terms are bilinears psi^dag K psi or psibar K psi")

    def sort_key(self) -> Tuple[str, str, str]:
        return (self.label, self.left.chirality or "", self.right.chirality or "")

    @property
    def phase(self) -> PhaseElement:
        return self.left.phase * self.right.phase


@dataclass(frozen=True)
class LagrangianDensity:
    dim: Dim
    rep: GammaRep
    terms: Tuple[Term, ...]
    gauge_kinetic: PolyExpr = field(default_factory=zero)

    def __post_init__(self):
        if self.rep.dim != self.dim:
            raise DimensionMismatchError(f"Representation is {self.rep.dim}, density is {self.dim}")
        object.__setattr__(self, "terms", tuple(sorted(self.terms, key=Term.sort_key)))

    def labels(self) -> List[str]:
        return [t.label for t in self.terms]


# Canonical comparison

MatrixKey = Tuple[PhaseElement, int]


def _projector(rep: GammaRep, chirality: Optional[str]) -> SpinorMatrix:
    if chirality is None:
        return rep.identity()
    projectors = chiral_projectors(rep)
    return projectors.right if chirality == "R" else projectors.left


def _left_factor(rep: GammaRep, left: FieldSymbol) -> SpinorMatrix:
    if left.name == "psi_dag":
        return _projector(rep, left.chirality)
    # psibar_R = psibar P_L and psibar_L = psibar P_R
    flipped = {None: None, "R": "L", "L": "R"}[left.chirality]
    return rep.gammas[0] @ _projector(rep, flipped)


def fold_term(rep: GammaRep, term: Term) -> List[Tuple[int, SpinorMatrix]]:
    """Kernels of a term rewritten between untagged psi^dag and psi."""
    left = _left_factor(rep, term.left)
    right = _projector(rep, term.right.chirality)
    folded = []
    for deriv, kernel in term.parts:
        folded.append((-1 if deriv is None else deriv, left @ kernel @ right))
    return folded


def matrix_form(L: LagrangianDensity) -> Dict[MatrixKey, SpinorMatrix]:
    """Kernels grouped by (total phase, derivative index; -1 for none), zeros dropped."""
    grouped: Dict[MatrixKey, SpinorMatrix] = {}
    for term in L.terms:
        for deriv, matrix in fold_term(L.rep, term):
            key = (term.phase, deriv)
            grouped[key] = grouped[key] + matrix if key in grouped else matrix
    return {key: grouped[key] for key in sorted(grouped) if not grouped[key].is_zero()}


def densities_equal(a: LagrangianDensity, b: LagrangianDensity) -> bool:
    if a.rep != b.rep:
        raise ValueError("Densities use different gamma representations")
    return matrix_form(a) == matrix_form(b) and a.gauge_kinetic == b.gauge_kinetic


def residual(transformed: LagrangianDensity, original: LagrangianDensity) -> LagrangianDensity:
    """transformed - original as a canonical density."""
    after, before = matrix_form(transformed), matrix_form(original)
    terms = []
    for key in sorted(set(after) | set(before)):
        n = original.rep.size
        difference = after.get(key, SpinorMatrix.zeros(n)) - before.get(key, SpinorMatrix.zeros(n))
        if difference.is_zero():
            continue
        phase, deriv = key
        terms.append(Term(
            "residual",
            FieldSymbol("psi_dag", phase=phase),
            PSI,
            ((None if deriv < 0 else deriv, difference),),
        ))
    return LagrangianDensity(
        original.dim, original.rep, tuple(terms), transformed.gauge_kinetic - original.gauge_kinetic
    )


def is_null(L: LagrangianDensity) -> bool:
    return not matrix_form(L) and L.gauge_kinetic.is_zero()


def density_text(L: LagrangianDensity) -> str:
    """Canonical text of the folded density, one summand per line."""
    lines = []
    names = coordinate_names(L.dim.spatial)
    for (phase, deriv), matrix in matrix_form(L).items():
        prefix = "" if phase.is_identity() else f"{phase} "
        derivative = "" if deriv < 0 else f"d_{names[deriv]} "
        lines.append(f"{prefix}psi^dag {matrix} {derivative}psi")
    if L.gauge_kinetic:
        lines.append(f"YM: {L.gauge_kinetic}")
    return "\n".join(lines) if lines else "0"


# Builders


def yang_mills(dim: Dim) -> PolyExpr:
    """-(1/4) F_{mu nu} F^{mu nu} with F_{mu nu} = dA_{mu nu} - dA_{nu mu}."""
    total = zero()
    for mu in range(dim.total):
        for nu in range(dim.total):
            strength = sym(gauge_gradient_name(mu, nu)) - sym(gauge_gradient_name(nu, mu))
            total = total + strength * strength * (dim.metric(mu) * dim.metric(nu))
    return total * const(-1, 4)


def _check_supported(dim: Dim) -> None:
    if dim not in (DIM_1_1, DIM_2_1):
        raise LagrangianFormError(f"The oscillator Lagrangian is modeled in (1+1) and (2+1) only, got {dim}")


def free_dirac_lagrangian(rep: GammaRep, massless: bool = False, form: str = "bar") -> LagrangianDensity:
    """
    psibar(i gamma^mu d_mu - m)psi, either literally (``bar``) or reduced to
    psi^dag(i d_t + i alpha_j d_j - beta m)psi (``dagger``).
    """
    i = imag_unit()
    m = sym("m")
    if form == "bar":
        terms = [Term("kinetic", PSI_BAR, PSI, tuple((mu, g.scale(i)) for mu, g in enumerate(rep.gammas)))]
        if not massless:
            terms.append(Term("mass", PSI_BAR, PSI, ((None, rep.identity().scale(-m)),)))
    elif form == "dagger":
        matrices = derived(rep)
        terms = [Term("time", PSI_DAG, PSI, ((0, rep.identity().scale(i)),))]
        terms += [
            Term(f"kinetic_{j}", PSI_DAG, PSI, ((j, alpha.scale(i)),))
            for j, alpha in enumerate(matrices.alphas, start=1)
        ]
        if not massless:
            terms.append(Term("mass", PSI_DAG, PSI, ((None, matrices.beta.scale(-m)),)))
    else:
        raise ValueError(f"Unknown form {form!r}")
    return LagrangianDensity(rep.dim, rep, tuple(terms))


def build_do_lagrangian(
    dim: Dim,
    massless: bool = False,
    rep: Optional[GammaRep] = None,
    gauge_sector: bool = False,
    coupling: Optional[PolyExpr] = None,
) -> LagrangianDensity:
    """
    Dirac-oscillator Lagrangian density.

    Args:
        dim: (1+1) or (2+1)
        massless: Drop the mass term
        rep: Gamma representation; the default irreducible one when omitted
        gauge_sector: Build psibar(i gamma d - m)psi - e psibar gamma^mu A_mu psi + YM
            + e B_I psibar gamma^0 gamma^j r_j psi instead of the psi^dag expansion
        coupling: Prefactor c of c psi^dag(i beta alpha_j x_j)psi; defaults to -m omega

    Returns:
        LagrangianDensity with terms in canonical order

    Raises:
        LagrangianFormError: For unsupported dimensions
    """
    _check_supported(dim)
    rep = rep or make_rep(dim)
    if rep.dim != dim:
        raise DimensionMismatchError(f"Representation is {rep.dim}, requested {dim}")
    names = coordinate_names(dim.spatial)
    i = imag_unit()

    if not gauge_sector:
        base = free_dirac_lagrangian(rep, massless, form="dagger")
        c = coupling if coupling is not None else -(sym("m") * sym("omega"))
        matrices = derived(rep)
        do_terms = tuple(
            Term(f"do_{j}", PSI_DAG, PSI, ((None, (matrices.beta @ alpha).scale(i * c * sym(names[j]))),))
            for j, alpha in enumerate(matrices.alphas, start=1)
        )
        return LagrangianDensity(dim, rep, base.terms + do_terms)

    base = free_dirac_lagrangian(rep, massless, form="bar")
    e = sym("e")
    interaction = SpinorMatrix.zeros(rep.size)
    for mu, gamma in enumerate(rep.gammas):
        interaction = interaction + gamma.scale(-e * sym(gauge_field_name(mu)))
    strength = coupling if coupling is not None else e * sym("B_I")
    oscillator = SpinorMatrix.zeros(rep.size)
    for j in range(1, dim.total):
        oscillator = oscillator + (rep.gammas[0] @ rep.gammas[j]).scale(strength * sym(names[j]))
    terms = base.terms + (
        Term("qed", PSI_BAR, PSI, ((None, interaction),)),
        Term("do", PSI_BAR, PSI, ((None, oscillator),)),
    )
    return LagrangianDensity(dim, rep, terms, yang_mills(dim))


# sigma.F contraction


def interaction_contraction(rep: GammaRep, F: FieldTensor, coeff: PolyExpr) -> SpinorMatrix:
    """coeff * sum_{mu nu} sigma^{mu nu} F_{mu nu}."""
    if rep.dim != F.dim:
        raise DimensionMismatchError(f"Representation is {rep.dim}, tensor is {F.dim}")
    total = SpinorMatrix.zeros(rep.size)
    for mu in range(rep.dim.total):
        for nu in range(rep.dim.total):
            if F[mu, nu]:
                total = total + sigma(rep, mu, nu).scale(F[mu, nu])
    return total.scale(coeff)


# Hamiltonian extraction


@dataclass(frozen=True)
class DiracOperator:
    """
    i d_t - H with H = sum_j momentum_coeffs[j] p_j + potential and p_j = -i d_j.
    """

    dim: Dim
    rep: GammaRep
    time_coeff: SpinorMatrix
    momentum_coeffs: Tuple[SpinorMatrix, ...]
    potential: SpinorMatrix

    def is_hermitian(self) -> bool:
        """Exact check with p_j Hermitian and every symbol real."""
        return all(c.is_hermitian() for c in self.momentum_coeffs) and self.potential.is_hermitian()

    def derivative_kernels(self) -> Tuple[SpinorMatrix, ...]:
        """K_mu of the psi^dag-variation equation sum_mu K_mu d_mu psi + W psi = 0."""
        i = imag_unit()
        return (self.time_coeff,) + tuple(c.scale(i) for c in self.momentum_coeffs)

    def potential_kernel(self) -> SpinorMatrix:
        return -self.potential

    def __str__(self) -> str:
        pieces = [f"{c} p_{j}" for j, c in enumerate(self.momentum_coeffs, start=1)]
        pieces.append(str(self.potential))
        return "H = " + " + ".join(pieces)


def hamiltonian_extract(L: LagrangianDensity) -> DiracOperator:
    """
    Read H off the psi^dag-variation Euler-Lagrange equation i d_t psi = H psi.

    Raises:
        LagrangianFormError: If the time-derivative kernel is not i*I or a
            term still carries an uncancelled phase
    """
    form = matrix_form(L)
    n = L.rep.size
    i = imag_unit()
    if any(not phase.is_identity() for phase, _ in form):
        raise LagrangianFormError("Cannot extract a Hamiltonian from a density with local phases")
    time_kernel = form.get((IDENTITY_PHASE, 0))
    if time_kernel != L.rep.identity().scale(i):
        raise LagrangianFormError("Density is not first order in d_t with kernel i*I")

    momentum = tuple(
        form.get((IDENTITY_PHASE, j), SpinorMatrix.zeros(n)).scale(-i) for j in range(1, L.dim.total)
    )
    potential = -form.get((IDENTITY_PHASE, -1), SpinorMatrix.zeros(n))
    logger.debug("Extracted Hamiltonian in %s with %d momentum terms", L.dim, len(momentum))
    return DiracOperator(L.dim, L.rep, time_kernel, momentum, potential)


def reference_hamiltonian(dim: Dim, rep: Optional[GammaRep] = None, massless: bool = False) -> DiracOperator:
    """H = alpha_j(p_j - i m omega beta x_j) + beta m."""
    rep = rep or make_rep(dim)
    matrices = derived(rep)
    names = coordinate_names(dim.spatial)
    i = imag_unit()
    m, omega = sym("m"), sym("omega")
    potential = SpinorMatrix.zeros(rep.size) if massless else matrices.beta.scale(m)
    for j, alpha in enumerate(matrices.alphas, start=1):
        potential = potential + (alpha @ matrices.beta).scale(-i * m * omega * sym(names[j]))
    return DiracOperator(dim, rep, rep.identity().scale(i), matrices.alphas, potential)


@dataclass(frozen=True)
class AdjointEquation:
    """psi-variation equation sum_mu (d_mu psi^dag) Q_mu + psi^dag R = 0."""

    dim: Dim
    derivative_coeffs: Tuple[SpinorMatrix, ...]
    potential: SpinorMatrix


def euler_lagrange_pair(L: LagrangianDensity) -> Tuple[DiracOperator, AdjointEquation]:
    """Equations obtained by varying psi^dag and psi, named by the varied field."""
    operator = hamiltonian_extract(L)
    form = matrix_form(L)
    names = coordinate_names(L.dim.spatial)
    n = L.rep.size
    kernels = [form.get((IDENTITY_PHASE, mu), SpinorMatrix.zeros(n)) for mu in range(L.dim.total)]
    # Integrating psi^dag K_mu d_mu psi by parts moves the derivative onto psi^dag and K_mu
    potential = form.get((IDENTITY_PHASE, -1), SpinorMatrix.zeros(n))
    for mu, kernel in enumerate(kernels):
        potential = potential - SpinorMatrix(tuple(
            tuple(partial(entry, names[mu]) for entry in row) for row in kernel.rows
        ))
    return operator, AdjointEquation(L.dim, tuple(-k for k in kernels), potential)


def are_formal_adjoints(operator: DiracOperator, adjoint: AdjointEquation) -> bool:
    """Q_mu = K_mu^dag and R = W^dag exactly."""
    kernels = operator.derivative_kernels()
    if len(kernels) != len(adjoint.derivative_coeffs):
        return False
    return (
        all(q == k.dagger() for q, k in zip(adjoint.derivative_coeffs, kernels))
        and adjoint.potential == operator.potential_kernel().dagger()
    )


# Local transformations

PhaseSource = Union[str, PolyExpr]


def _gauge_bindings(dim: Dim, theta: str, sign: int) -> Dict[str, PolyExpr]:
    """A_mu -> A_mu + sign (1/e) d_mu theta."""
    e_inv = sym("e_inv")
    return {
        gauge_field_name(mu): sym(gauge_field_name(mu)) + e_inv * sym(phase_gradient_name(mu, theta)) * sign
        for mu in range(dim.total)
    }


def _gradient_bindings(dim: Dim, theta: str, sign: int) -> Dict[str, PolyExpr]:
    """d_mu A_nu -> d_mu A_nu + sign (1/e) d_mu d_nu theta."""
    e_inv = sym("e_inv")
    return {
        gauge_gradient_name(mu, nu): sym(gauge_gradient_name(mu, nu))
        + e_inv * sym(phase_hessian_name(mu, nu, theta)) * sign
        for mu in range(dim.total)
        for nu in range(dim.total)
    }


def _leibniz(dim: Dim, deriv: int, kernel: SpinorMatrix, increment: PhaseElement) -> SpinorMatrix:
    """Extra kernel from d_mu exp[i n theta] = i n (d_mu theta) exp[i n theta]."""
    factor = zero()
    for theta, n in increment.exponent:
        factor = factor + sym(phase_gradient_name(deriv, theta)) * n
    return kernel.scale(imag_unit() * factor)


def _substitute_matrix(matrix: SpinorMatrix, bindings: Mapping[str, PolyExpr]) -> SpinorMatrix:
    if not bindings:
        return matrix
    return SpinorMatrix(tuple(tuple(substitute(entry, bindings, simultaneous=True) for entry in row) for row in matrix.rows))


def _transform(
    L: LagrangianDensity,
    right_increment: Callable[[FieldSymbol], PhaseElement],
    term_bindings: Callable[[Term], Mapping[str, PolyExpr]],
    gauge_kinetic_bindings: Mapping[str, PolyExpr],
) -> LagrangianDensity:
    """
    Multiply each psi_a by its phase increment and each psibar_a / psi_a^dag
    by the conjugate, shift gauge symbols and apply the Leibniz rule.
    """
    terms = []
    for term in L.terms:
        inc_right = right_increment(term.right)
        inc_left = right_increment(FieldSymbol("psi", term.left.chirality)).conjugate()
        bindings = term_bindings(term)
        parts: List[Part] = []
        for deriv, kernel in term.parts:
            shifted = _substitute_matrix(kernel, bindings)
            parts.append((deriv, shifted))
            if deriv is not None and not inc_right.is_identity():
                parts.append((None, _leibniz(L.dim, deriv, shifted, inc_right)))
        terms.append(Term(term.label, term.left.with_phase(inc_left), term.right.with_phase(inc_right), tuple(parts)))
    gauge_kinetic = substitute(L.gauge_kinetic, gauge_kinetic_bindings, simultaneous=True) if L.gauge_kinetic else L.gauge_kinetic
    return LagrangianDensity(L.dim, L.rep, tuple(terms), gauge_kinetic)


def _derivative_bindings(dim: Dim, name: str, theta: PolyExpr) -> Dict[str, PolyExpr]:
    """Replace the opaque gradient and Hessian symbols of ``name`` by exact derivatives."""
    coords = coordinate_names(dim.spatial)
    bindings = {}
    for mu in range(dim.total):
        first = partial(theta, coords[mu])
        bindings[phase_gradient_name(mu, name)] = first
        for nu in range(mu, dim.total):
            bindings[phase_hessian_name(mu, nu, name)] = partial(first, coords[nu])
    return bindings


def _concretize(L: LagrangianDensity, name: str, theta: PolyExpr) -> LagrangianDensity:
    bindings = _derivative_bindings(L.dim, name, theta)
    terms = tuple(
        replace(term, parts=tuple((d, _substitute_matrix(k, bindings)) for d, k in term.parts))
        for term in L.terms
    )
    return LagrangianDensity(L.dim, L.rep, terms, substitute(L.gauge_kinetic, bindings))


U1_SHIFTS = {"compensating": 1, "as_printed": -1, "none": 0}


def u1_transform(L: LagrangianDensity, theta: PhaseSource = "theta", gauge_shift: str = "compensating") -> LagrangianDensity:
    """
    Local U(1): psi -> exp[-i theta] psi, psibar -> exp[i theta] psibar and
    A_mu -> A_mu + s (1/e) d_mu theta.

    Args:
        L: Density to transform
        theta: Formal phase name, or a polynomial in the coordinates whose
            derivatives replace the gradient symbols
        gauge_shift: ``compensating`` (s = +1), ``as_printed`` (s = -1) or ``none``

    Returns:
        Transformed density
    """
    if gauge_shift not in U1_SHIFTS:
        raise ValueError(f"Unknown gauge shift {gauge_shift!r}; choose from {sorted(U1_SHIFTS)}")
    sign = U1_SHIFTS[gauge_shift]
    name = theta if isinstance(theta, str) else "theta"
    increment = PhaseElement.of({name: -1})
    bindings = _gauge_bindings(L.dim, name, sign) if sign else {}
    gradient = _gradient_bindings(L.dim, name, sign) if sign else {}
    transformed = _transform(L, lambda _: increment, lambda _: bindings, gradient)
    if isinstance(theta, PolyExpr):
        transformed = _concretize(transformed, name, theta)
    return transformed


def chiral_decompose(L: LagrangianDensity) -> LagrangianDensity:
    """
    Split every untagged bilinear into its four chirality blocks and drop the
    blocks annihilated by P_R P_L = P_L P_R = 0.

    Raises:
        NoChiralityError: If the representation has no gamma^5
    """
    chiral_projectors(L.rep)
    terms = []
    for term in L.terms:
        if term.left.chirality or term.right.chirality:
            terms.append(term)
            continue
        for a in ("R", "L"):
            for b in ("R", "L"):
                candidate = replace(term, left=replace(term.left, chirality=a), right=replace(term.right, chirality=b))
                if any(not matrix.is_zero() for _, matrix in fold_term(L.rep, candidate)):
                    terms.append(candidate)
    logger.debug("Chiral decomposition kept %d of %d possible blocks", len(terms), 4 * len(L.terms))
    return LagrangianDensity(L.dim, L.rep, tuple(terms), L.gauge_kinetic)


@dataclass(frozen=True)
class SymmetryOutcome:
    transformed: LagrangianDensity
    residual: LagrangianDensity

    @property
    def invariant(self) -> bool:
        return is_null(self.residual)


CHIRAL_SHIFTS = ("matching", "right", "left")


def chiral_transform(
    L: LagrangianDensity,
    theta_r: Optional[str] = "theta_R",
    theta_l: Optional[str] = "theta_L",
    gauge_shift: str = "matching",
) -> SymmetryOutcome:
    """
    psi_R -> exp[-i theta_R] psi_R and psi_L -> exp[-i theta_L] psi_L.

    Args:
        L: Chirally decomposed density
        theta_r: Right phase name; None leaves psi_R untouched
        theta_l: Left phase name; None leaves psi_L untouched
        gauge_shift: ``matching`` shifts A_mu in each term by the phase of
            that term's chirality; ``right`` / ``left`` apply one shift to all

    Returns:
        SymmetryOutcome whose residual vanishes iff theta_R and theta_L coincide
    """
    if gauge_shift not in CHIRAL_SHIFTS:
        raise ValueError(f"Unknown gauge shift {gauge_shift!r}; choose from {list(CHIRAL_SHIFTS)}")
    if any(t.left.chirality is None or t.right.chirality is None for t in L.terms):
        raise LagrangianFormError("chiral_transform expects a chirally decomposed density")
    phases = {"R": theta_r, "L": theta_l}

    def increment(f: FieldSymbol) -> PhaseElement:
        name = phases[f.chirality]
        return PhaseElement.of({name: -1}) if name else IDENTITY_PHASE

    def shift_for(chirality: str) -> Dict[str, PolyExpr]:
        name = phases[chirality]
        return _gauge_bindings(L.dim, name, 1) if name else {}

    def bindings(term: Term) -> Dict[str, PolyExpr]:
        if gauge_shift == "right":
            return shift_for("R")
        if gauge_shift == "left":
            return shift_for("L")
        # mixed-chirality terms carry no gauge field
        return shift_for(term.right.chirality)

    ym_phase = theta_l if gauge_shift == "left" else theta_r
    ym_bindings = _gradient_bindings(L.dim, ym_phase, 1) if ym_phase else {}
    transformed = _transform(L, increment, bindings, ym_bindings)
    return SymmetryOutcome(transformed, residual(transformed, L))
