"""Grey-problem data model and positioned whitening.

A grey parameter is a value known only to lie in a closed interval.  A grey
linear program carries one interval per objective coefficient, constraint
coefficient, and right-hand side.  Whitening replaces each interval by the
convex combination ``t*hi + (1-t)*lo`` for a position coefficient
``t in [0, 1]``, turning the grey problem into a concrete ("white") max-LP.

All types are immutable after construction and all operations are pure, so
everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, StructureError

__all__ = [
    "Interval",
    "GreyLP",
    "PositionCoefficients",
    "WhiteLP",
    "Violation",
    "whiten",
    "build_positioned",
    "uniform_coefficients",
    "theta_coefficients",
    "validate_problem",
]


@dataclass(frozen=True)
class Interval:
    """A closed real range [lo, hi] housing one grey parameter.

    Construction only coerces to float; whether the bounds are ordered and
    nonnegative is checked by :func:`validate_problem`, which collects every
    violation in a problem instead of failing on the first one.
    """

    lo: float
    hi: float

    def __post_init__(self):
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))

    @property
    def is_white(self) -> bool:
        """True when the interval is a single point (no greyness)."""
        return self.lo == self.hi


def _as_interval(value) -> Interval:
    if isinstance(value, Interval):
        return value
    lo, hi = value
    return Interval(lo, hi)


@dataclass(frozen=True)
class GreyLP:
    """A grey max-LP: maximize c(x)·x subject to A(x)·x <= b(x), x >= 0,
    with every coefficient an :class:`Interval`.

    ``objective`` has one entry per variable, ``matrix`` is an m-by-n grid
    (one row per constraint), ``rhs`` has one entry per constraint.  Entries
    may be ``Interval`` objects or ``(lo, hi)`` pairs.  Like
    :class:`Interval`, construction does not validate; use
    :func:`validate_problem`.
    """

    objective: tuple[Interval, ...]
    matrix: tuple[tuple[Interval, ...], ...]
    rhs: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "objective", tuple(_as_interval(iv) for iv in self.objective)
        )
        object.__setattr__(
            self,
            "matrix",
            tuple(tuple(_as_interval(iv) for iv in row) for row in self.matrix),
        )
        object.__setattr__(self, "rhs", tuple(_as_interval(iv) for iv in self.rhs))

    @property
    def n(self) -> int:
        """Number of variables."""
        return len(self.objective)

    @property
    def m(self) -> int:
        """Number of constraints."""
        return len(self.rhs)

    @property
    def is_white(self) -> bool:
        """True when every interval is a single point."""
        return all(
            iv.is_white
            for block in (self.objective, self.rhs)
            for iv in block
        ) and all(iv.is_white for row in self.matrix for iv in row)


@dataclass(frozen=True)
class PositionCoefficients:
    """Whitening weights: one alpha per objective entry, one beta per
    right-hand side entry, and an m-by-n grid of gammas for the matrix.

    Every entry must lie in [0, 1]; out-of-range or non-finite entries raise
    :class:`DomainError` at construction.  Whether the dimensions match a
    particular problem is checked by :func:`build_positioned`.
    """

    alphas: tuple[float, ...]
    betas: tuple[float, ...]
    gammas: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(float(b) for b in self.betas))
        object.__setattr__(
            self, "gammas", tuple(tuple(float(g) for g in row) for row in self.gammas)
        )
        for name, values in (
            ("alphas", self.alphas),
            ("betas", self.betas),
            ("gammas", tuple(g for row in self.gammas for g in row)),
        ):
            for v in values:
                if not (0.0 <= v <= 1.0):  # also rejects NaN
                    raise DomainError(
                        f"position coefficient in {name} must be in [0, 1], got {v}"
                    )
        widths = {len(row) for row in self.gammas}
        if len(widths) > 1:
            raise StructureError("gamma grid is ragged")


@dataclass(frozen=True)
class WhiteLP:
    """A concrete max-LP (c, A, b): maximize c·x subject to A·x <= b, x >= 0.

    Unlike the grey containers this type is strict: entries must be finite
    and the dimensions consistent, since a white problem is handed straight
    to the solver.
    """

    c: tuple[float, ...]
    A: tuple[tuple[float, ...], ...]
    b: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(float(v) for v in self.c))
        object.__setattr__(
            self, "A", tuple(tuple(float(v) for v in row) for row in self.A)
        )
        object.__setattr__(self, "b", tuple(float(v) for v in self.b))
        n, m = len(self.c), len(self.b)
        if n < 1 or m < 1:
            raise StructureError(f"need at least one variable and one constraint, got n={n}, m={m}")
        if len(self.A) != m or any(len(row) != n for row in self.A):
            raise StructureError(f"matrix must be {m}x{n}")
        for v in (*self.c, *self.b, *(x for row in self.A for x in row)):
            if not math.isfinite(v):
                raise DomainError(f"non-finite entry {v} in white problem")

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def m(self) -> int:
        return len(self.b)


@dataclass(frozen=True)
class Violation:
    """One validation finding: where it is, what kind, and a readable message."""

    location: str
    kind: str  # bounds_order | negative_lower | non_finite | dimension
    message: str = field(compare=False)

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


def whiten(iv: Interval, t: float) -> float:
    """White value of a grey parameter: ``t*hi + (1-t)*lo``.

    ``t=0`` selects the lower bound exactly and ``t=1`` the upper bound;
    every result lies in [lo, hi].
    """
    t = float(t)
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"position coefficient must be in [0, 1], got {t}")
    iv = _as_interval(iv)
    if not (math.isfinite(iv.lo) and math.isfinite(iv.hi)) or iv.lo > iv.hi:
        raise DomainError(f"cannot whiten invalid interval [{iv.lo}, {iv.hi}]")
    return t * iv.hi + (1.0 - t) * iv.lo


def build_positioned(p: GreyLP, k: PositionCoefficients) -> WhiteLP:
    """Whiten every grey parameter of ``p`` with the weights in ``k``,
    producing the positioned (white) program.

    Raises :class:`StructureError` when the coefficient block does not match
    the problem's dimensions.
    """
    if len(k.alphas) != p.n:
        raise StructureError(f"expected {p.n} alphas, got {len(k.alphas)}")
    if len(k.betas) != p.m:
        raise StructureError(f"expected {p.m} betas, got {len(k.betas)}")
    if len(k.gammas) != p.m or any(len(row) != p.n for row in k.gammas):
        raise StructureError(f"expected a {p.m}x{p.n} gamma grid")
    c = tuple(whiten(iv, a) for iv, a in zip(p.objective, k.alphas))
    b = tuple(whiten(iv, be) for iv, be in zip(p.rhs, k.betas))
    A = tuple(
        tuple(whiten(iv, g) for iv, g in zip(mrow, grow))
        for mrow, grow in zip(p.matrix, k.gammas)
    )
    return WhiteLP(c=c, A=A, b=b)


def uniform_coefficients(
    alpha: float, beta: float, gamma: float, m: int, n: int
) -> PositionCoefficients:
    """Coefficients with a single shared alpha, beta, and gamma.

    ``(1, 1, 0)`` selects the ideal endpoint (upper objective and rhs bounds,
    lower matrix bounds); ``(0, 0, 1)`` selects the critical endpoint.
    """
    if m < 1 or n < 1:
        raise StructureError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    return PositionCoefficients(
        alphas=(float(alpha),) * n,
        betas=(float(beta),) * m,
        gammas=((float(gamma),) * n,) * m,
    )


def theta_coefficients(theta: float, m: int, n: int) -> PositionCoefficients:
    """Single-parameter whitening: alpha = beta = gamma = theta."""
    return uniform_coefficients(theta, theta, theta, m, n)


def validate_problem(p: GreyLP) -> list[Violation]:
    """Collect every invariant violation in ``p``.

    Checks interval ordering (lo <= hi), the nonnegativity assumption
    (lo >= 0), finiteness of all bounds, and dimension consistency.  Returns
    an empty list iff the problem is valid.  Violations are data, not
    exceptions, so a CLI user sees every data problem in one pass.
    """
    violations: list[Violation] = []

    def check_interval(iv: Interval, location: str):
        bad_number = False
        for side, v in (("lower", iv.lo), ("upper", iv.hi)):
            if not math.isfinite(v):
                violations.append(
                    Violation(location, "non_finite", f"{side} bound {v} is not finite")
                )
                bad_number = True
        if bad_number:
            return
        if iv.lo > iv.hi:
            violations.append(
                Violation(
                    location,
                    "bounds_order",
                    f"lower bound {iv.lo:g} exceeds upper bound {iv.hi:g}",
                )
            )
        if iv.lo < 0:
            violations.append(
                Violation(
                    location,
                    "negative_lower",
                    f"negative lower bound {iv.lo:g} (all parameters must be >= 0)",
                )
            )

    n, m = p.n, p.m
    if n < 1:
        violations.append(Violation("objective", "dimension", "no variables"))
    if m < 1:
        violations.append(Violation("rhs", "dimension", "no constraints"))
    if len(p.matrix) != m:
        violations.append(
            Violation(
                "matrix",
                "dimension",
                f"{len(p.matrix)} matrix rows but {m} right-hand sides",
            )
        )
    for i, row in enumerate(p.matrix):
        if len(row) != n:
            violations.append(
                Violation(
                    f"matrix[{i}]",
                    "dimension",
                    f"{len(row)} entries but {n} objective coefficients",
                )
            )

    for j, iv in enumerate(p.objective):
        check_interval(iv, f"objective[{j}]")
    for i, row in enumerate(p.matrix):
        for j, iv in enumerate(row):
            check_interval(iv, f"matrix[{i}][{j}]")
    for i, iv in enumerate(p.rhs):
        check_interval(iv, f"rhs[{i}]")

    return violations
