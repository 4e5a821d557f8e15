"""Critical/ideal value bounds and satisfaction degrees of positioned optima.

The critical value is the positioned optimum at uniform coefficients
(0, 0, 1) (most pessimistic whitening) and the ideal value the optimum at
(1, 1, 0) (most optimistic).  Every positioned optimum lies between the two,
which makes them the natural normalization for judging how good a
positioned optimum is:

* the pleased degree ``0.5*(1 - critical/f) + 0.5*f/ideal`` never reaches
  0 or 1, even at the bounds themselves;
* the lambda-satisfaction degree blends a linear normalized degree (weight
  ``lam``) with a damped one (weight ``1-lam``) and spans [0, 1] exactly,
  hitting 0 at the critical value and 1 at the ideal value.  ``lam`` encodes
  the decision maker's attitude: 0 pessimistic, 1 optimistic.

A degree is then accepted against a grey target [mu0, 1].
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import (
    DegenerateBoundsWarning,
    DomainError,
    InconsistentInputsError,
    SolverFailure,
    UnboundedValueError,
    ValidationError,
)
from .grey_core import GreyLP, PositionCoefficients, build_positioned, uniform_coefficients, validate_problem
from .lp_solver import SolveStatus, solve_max

__all__ = [
    "ValueBounds",
    "DegreeQuery",
    "positioned_value",
    "bounds",
    "pleased_degree",
    "lambda_satisfaction",
    "is_pleased",
    "is_lambda_satisfactory",
]


@dataclass(frozen=True)
class ValueBounds:
    """The critical (pessimistic) and ideal (optimistic) optimal values."""

    critical: float
    ideal: float

    def __post_init__(self):
        object.__setattr__(self, "critical", float(self.critical))
        object.__setattr__(self, "ideal", float(self.ideal))
        if self.critical > self.ideal + _value_tol(self):
            raise InconsistentInputsError(
                f"critical value {self.critical} exceeds ideal value {self.ideal}"
            )

    @property
    def is_degenerate(self) -> bool:
        """True when the two bounds coincide up to solver noise (effectively
        white problem: every positioned optimum equals both bounds)."""
        return self.ideal - self.critical <= 1e-9 * max(1.0, self.ideal)


@dataclass(frozen=True)
class DegreeQuery:
    """One degree evaluation request: a positioned optimal value ``f``, the
    attitude weight ``lam``, and the grey-target threshold ``mu0``."""

    f: float
    lam: float
    mu0: float

    def __post_init__(self):
        for name, v in (("lam", self.lam), ("mu0", self.mu0)):
            if not (0.0 <= v <= 1.0):
                raise DomainError(f"{name} must be in [0, 1], got {v}")


def _value_tol(vb: ValueBounds) -> float:
    # Solver noise can place a positioned value marginally outside the
    # bounds; containment is mathematically guaranteed, so clamp within
    # this tolerance and reject beyond it.
    return 1e-6 * max(1.0, vb.ideal)


def _clamp(f: float, vb: ValueBounds) -> float:
    f = float(f)
    tol = _value_tol(vb)
    if f < vb.critical - tol or f > vb.ideal + tol:
        raise InconsistentInputsError(
            f"value {f} lies outside [{vb.critical}, {vb.ideal}] by more than {tol:g}"
        )
    return min(max(f, vb.critical), vb.ideal)


def _solve_positioned(p: GreyLP, k: PositionCoefficients) -> float:
    sol = solve_max(build_positioned(p, k))
    if sol.status is SolveStatus.UNBOUNDED:
        raise UnboundedValueError(
            "positioned program is unbounded; satisfaction analysis is undefined"
        )
    if sol.status is not SolveStatus.OPTIMAL:  # unreachable for valid problems
        raise SolverFailure(f"unexpected solver status {sol.status} for a whitened problem")
    return sol.objective


def positioned_value(p: GreyLP, k: PositionCoefficients) -> float:
    """Optimal value of the positioned program built from ``p`` with ``k``."""
    violations = validate_problem(p)
    if violations:
        raise ValidationError(violations)
    return _solve_positioned(p, k)


def bounds(p: GreyLP) -> ValueBounds:
    """Critical and ideal optimal values of ``p``."""
    violations = validate_problem(p)
    if violations:
        raise ValidationError(violations)
    critical = _solve_positioned(p, uniform_coefficients(0, 0, 1, p.m, p.n))
    ideal = _solve_positioned(p, uniform_coefficients(1, 1, 0, p.m, p.n))
    return ValueBounds(critical=critical, ideal=ideal)


def pleased_degree(f: float, vb: ValueBounds) -> float:
    """Prior satisfaction measure ``0.5*(1 - critical/f) + 0.5*f/ideal``.

    Stays strictly inside (0, 1): the critical value scores
    ``critical/(2*ideal)`` and the ideal value ``1 - critical/(2*ideal)``.
    ``f`` must be positive (zero is allowed only when the critical value is
    zero, where the vanishing ratio term is taken by continuity).
    """
    if vb.ideal <= 0.0:
        raise DomainError(f"pleased degree needs a positive ideal value, got {vb.ideal}")
    f = float(f)
    if f < min(vb.critical, 0.0) - _value_tol(vb):
        raise DomainError(f"pleased degree needs a positive value, got {f}")
    f = _clamp(f, vb)
    if f < 0.0:
        raise DomainError(f"pleased degree needs a nonnegative value, got {f}")
    if f == 0.0:
        if vb.critical == 0.0:
            ratio_term = 0.5  # limit of 0.5*(1 - 0/f) as f -> 0+
        else:
            raise DomainError("pleased degree is undefined at f = 0 with a positive critical value")
    else:
        ratio_term = 0.5 * (1.0 - vb.critical / f)
    return ratio_term + 0.5 * f / vb.ideal


def lambda_satisfaction(f: float, vb: ValueBounds, lam: float) -> float:
    """Attitude-weighted satisfaction degree of ``f`` between the bounds.

    Blends the linear normalized degree ``t = (f - critical)/(ideal -
    critical)`` (weight ``lam``) with the damped degree ``(f - critical) /
    (ideal - critical + (1 - lam)*(ideal - f))`` (weight ``1 - lam``).
    Equals 0 at the critical value, 1 at the ideal value, and is increasing
    in both ``f`` and ``lam`` in between.  ``lam = 1`` reduces to ``t``.

    Coinciding bounds make the ratios meaningless; every solution then
    attains the ideal, so the degree is reported as 1 with a
    :class:`DegenerateBoundsWarning`.
    """
    lam = float(lam)
    if not (0.0 <= lam <= 1.0):
        raise DomainError(f"lam must be in [0, 1], got {lam}")
    if vb.is_degenerate:
        warnings.warn(
            "critical and ideal values coincide (effectively white problem); "
            "reporting satisfaction degree 1",
            DegenerateBoundsWarning,
            stacklevel=2,
        )
        return 1.0
    f = _clamp(f, vb)
    spread = vb.ideal - vb.critical
    gain = f - vb.critical
    linear = gain / spread
    damped = gain / (spread + (1.0 - lam) * (vb.ideal - f))
    return lam * linear + (1.0 - lam) * damped


def is_pleased(mu: float, mu0: float) -> bool:
    """True iff the pleased degree lands in the grey target [mu0, 1]."""
    for name, v in (("mu", mu), ("mu0", mu0)):
        if not (0.0 <= v <= 1.0):
            raise DomainError(f"{name} must be in [0, 1], got {v}")
    return mu >= mu0


def is_lambda_satisfactory(mu_tilde: float, mu0: float) -> bool:
    """True iff the lambda-satisfaction degree lands in the grey target [mu0, 1]."""
    for name, v in (("mu_tilde", mu_tilde), ("mu0", mu0)):
        if not (0.0 <= v <= 1.0):
            raise DomainError(f"{name} must be in [0, 1], got {v}")
    return mu_tilde >= mu0
