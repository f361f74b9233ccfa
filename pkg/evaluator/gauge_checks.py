"""
Gauge-field verification suite: field extraction, gauge transformation,
covariant potential and field tensor for the two oscillator derivations.
"""
import logging
from typing import List

import numpy as np

import config
from components.results.reports import CheckResult
from symbolic.gaugefields import (
    FieldPair,
    Potential,
    covariant_field_tensor,
    covariant_potential,
    electric_from_tensor,
    field_constant,
    field_relation,
    field_tensor_from_potential,
    fields_from_potential,
    gauge_transform,
    magnetic_from_tensor,
    reference_gauge,
    reference_potential,
    zeta_from_gradient,
)
from symbolic.minkowski import DIM_1_1, DIM_2_1, Dim
from symbolic.symbols import const, sym, zero
from utils.random_polys import random_gauge, random_potential

logger = logging.getLogger(__name__)


def _fields_text(fields: FieldPair) -> str:
    electric = ", ".join(str(e) for e in fields.electric)
    magnetic = fields.magnetic if not isinstance(fields.magnetic, tuple) else "(" + ", ".join(map(str, fields.magnetic)) + ")"
    return f"E=({electric}), B={magnetic}"


def _tensor_text(components) -> str:
    return "{" + ", ".join(f"F{mu}{nu}: {value}" for (mu, nu), value in components.items()) + "}"


class GaugeVerifier:
    """
    Runs the gauge checks of one dimension.

    Args:
        dim: (1+1) or (2+1)
        seed: Seed for the randomized gauge-invariance cases
        cases: Number of random (potential, gauge function) pairs
    """

    def __init__(self, dim: Dim, seed: int = config.DEFAULT_SEED, cases: int = config.RANDOM_CASES):
        if dim not in (DIM_1_1, DIM_2_1):
            raise ValueError(f"Gauge verification covers (1+1) and (2+1), got {dim}")
        self.dim = dim
        self.seed = seed
        self.cases = cases
        self.constant = field_constant(dim)
        self.potential = reference_potential(dim)
        self.gauge = reference_gauge(dim)

    def _check(self, name: str, expected, actual, equal=None, **extra) -> CheckResult:
        return CheckResult.compare(name, str(self.dim), expected, actual, equal, **extra)

    def check_reference_fields(self) -> CheckResult:
        c = sym(self.constant)
        x = sym("x")
        if self.dim == DIM_2_1:
            expected = FieldPair(self.dim, (zero(), zero()), c * -2)
        else:
            expected = FieldPair(self.dim, (-c * x,), zero())
        actual = fields_from_potential(self.potential)
        return self._check("fields_of_reference_potential", _fields_text(expected), _fields_text(actual))

    def check_magnetic_relation(self) -> CheckResult:
        """B = 2 rho turns the extracted field into -B."""
        magnetic = fields_from_potential(self.potential).magnetic
        return self._check("magnetic_field_relation", -sym("B"), field_relation(magnetic, "larmor"))

    def expected_transformed(self) -> Potential:
        t, x = sym("t"), sym("x")
        c = sym(self.constant)
        quarter = c * const(1, 4)
        if self.dim == DIM_1_1:
            return Potential.of(self.dim, [quarter * (t ** 2 + x ** 2), quarter * 2 * t * x])
        y = sym("y")
        half = c * const(1, 2)
        return Potential.of(self.dim, [
            quarter * (x ** 2 + y ** 2 + t ** 2),
            c * y - half * t * x,
            -c * x - half * t * y,
        ])

    def printed_transformed(self) -> Potential:
        """rho[-(1/4)(x^2+y^2+t^2), y + tx/2, -x + ty/2], reached with -Lambda."""
        t, x, y = sym("t"), sym("x"), sym("y")
        c = sym(self.constant)
        return Potential.of(self.dim, [
            -c * const(1, 4) * (x ** 2 + y ** 2 + t ** 2),
            c * y + c * const(1, 2) * t * x,
            -c * x + c * const(1, 2) * t * y,
        ])

    def check_gauge_transform(self) -> CheckResult:
        expected = self.expected_transformed()
        actual = gauge_transform(self.potential, self.gauge)
        equal = actual == expected
        detail = None
        if self.dim == DIM_2_1:
            mirrored = gauge_transform(self.potential, -self.gauge) == self.printed_transformed()
            equal = equal and mirrored
            detail = "printed form reproduced with the opposite gauge function" if mirrored else "printed form not reproduced"
        return self._check("gauge_transform", expected, actual, equal, detail=detail)

    def check_gauge_invariance(self) -> CheckResult:
        """Fields of A and of A - d Lambda agree for the reference and random cases."""
        rng = np.random.default_rng(self.seed)
        pairs = [(self.potential, self.gauge)]
        pairs += [(random_potential(rng, self.dim), random_gauge(rng, self.dim)) for _ in range(self.cases)]
        for index, (A, g) in enumerate(pairs):
            before = fields_from_potential(A)
            after = fields_from_potential(gauge_transform(A, g))
            if before != after:
                logger.warning("Gauge invariance failed on case %d", index)
                return self._check(
                    "fields_gauge_invariant", _fields_text(before), _fields_text(after), False,
                    detail=f"case {index}: A={A}, Lambda={g.lam}",
                )
        return self._check(
            "fields_gauge_invariant", "invariant", "invariant", True,
            detail=f"{len(pairs)} cases, seed {self.seed}",
        )

    def check_covariant_potential(self) -> CheckResult:
        actual = covariant_potential(self.constant, self.dim)
        if self.dim == DIM_1_1:
            expected = gauge_transform(self.potential, self.gauge)
            return self._check("covariant_potential_matches_transformed", expected, actual)
        t, x, y = sym("t"), sym("x"), sym("y")
        c = sym(self.constant)
        expected = Potential.of(self.dim, [
            c * const(1, 4) * (x ** 2 + y ** 2 + t ** 2),
            c * const(1, 2) * x * t,
            c * const(1, 2) * t * y,
        ])
        same_fields = fields_from_potential(actual) == fields_from_potential(self.potential)
        detail = "gauge-equivalent to the reference potential" if same_fields else (
            f"describes {_fields_text(fields_from_potential(actual))}, not gauge-equivalent to the reference potential"
        )
        return self._check("covariant_potential", expected, actual, detail=detail)

    def check_covariant_tensor(self) -> CheckResult:
        """Listed components, derivation agreement (sign map -1) and E/B consistency."""
        c = sym(self.constant)
        F = covariant_field_tensor(self.constant, self.dim)
        expected = {(0, 1): c * sym("x"), (1, 0): -c * sym("x")}
        if self.dim == DIM_2_1:
            expected.update({(0, 2): c * sym("y"), (2, 0): -c * sym("y")})
            expected = dict(sorted(expected.items()))
        listed = F.nonzero_components() == expected

        derived = field_tensor_from_potential(covariant_potential(self.constant, self.dim))
        agreement = derived == -F
        fields = fields_from_potential(covariant_potential(self.constant, self.dim))
        consistent = electric_from_tensor(derived) == fields.electric
        if self.dim == DIM_2_1:
            consistent = consistent and magnetic_from_tensor(derived) == fields.magnetic
        checks = {"components": listed, "derivation_agreement": agreement, "field_consistency": consistent}
        if self.dim == DIM_1_1:
            checks["zeta_gradient"] = zeta_from_gradient(fields_from_potential(self.potential).electric[0]) == c
        failed = [label for label, ok in checks.items() if not ok]
        return self._check(
            "covariant_field_tensor",
            _tensor_text(expected),
            _tensor_text(F.nonzero_components()),
            not failed,
            detail="all sub-checks pass" if not failed else "failed: " + ", ".join(failed),
        )

    def run(self) -> List[CheckResult]:
        if self.dim == DIM_2_1:
            checks = [
                self.check_reference_fields(),
                self.check_magnetic_relation(),
                self.check_gauge_transform(),
                self.check_gauge_invariance(),
                self.check_covariant_potential(),
                self.check_covariant_tensor(),
            ]
        else:
            checks = [
                self.check_reference_fields(),
                self.check_gauge_transform(),
                self.check_gauge_invariance(),
                self.check_covariant_potential(),
                self.check_covariant_tensor(),
            ]
        logger.info("Gauge checks in %s: %d of %d pass", self.dim, sum(c.status == "pass" for c in checks), len(checks))
        return checks
