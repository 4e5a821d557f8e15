"""Parameter sweeps, monotonicity verification, and report tables.

Sweeps explore uniform (alpha, beta, gamma) triples only: per-entry
coefficient sweeps are combinatorially explosive and uniform triples are
what decision makers actually compare.  Positioned optima are nondecreasing
in alpha and beta and nonincreasing in gamma; ``check_monotonicity``
verifies that ordering empirically on a grid, and every swept value must lie
between the critical and ideal bounds.

Tables render to CSV or Markdown with the presentation rounding used
throughout: optimal values to 2 decimals, degrees to 4.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass

from .errors import DomainError, ValidationError
from .grey_core import GreyLP, build_positioned, uniform_coefficients, validate_problem
from .lp_solver import SolveStatus, solve_max
from .satisfaction import ValueBounds, bounds, lambda_satisfaction, pleased_degree

__all__ = [
    "SatisfactionRecord",
    "SweepTable",
    "MonotonicityReport",
    "unit_grid",
    "lambda_sweep",
    "grid_sweep",
    "check_monotonicity",
    "find_satisfactory",
    "render_table",
]

Triple = tuple[float, float, float]


@dataclass(frozen=True)
class SatisfactionRecord:
    """One sweep row: a uniform coefficient triple, its positioned optimal
    value, its pleased degree, and its lambda-satisfaction degrees.

    ``error`` marks rows whose positioned program could not be evaluated
    (e.g. unbounded); such rows carry no values.  ``mu`` alone may be None
    when the pleased degree is undefined (ideal value zero).
    """

    coefficients: Triple
    f: float | None
    mu: float | None
    mu_tilde: tuple[tuple[float, float], ...] = ()
    error: str | None = None

    def mu_tilde_at(self, lam: float) -> float:
        for key, value in self.mu_tilde:
            if key == lam:
                return value
        raise KeyError(f"no satisfaction degree stored for lam={lam}")


@dataclass(frozen=True)
class SweepTable:
    """An ordered set of sweep records plus the labels they render under.

    ``axis_labels`` doubles as the rendering schema: a first label of
    ``"lambda"`` marks a table that renders pivoted, one row per lambda and
    one column per record (the shape of a satisfaction-degree report);
    otherwise each record renders as one row.
    """

    axis_labels: tuple[str, ...]
    rows: tuple[SatisfactionRecord, ...]
    lambdas: tuple[float, ...] = ()


@dataclass(frozen=True)
class MonotonicityReport:
    """Empirical check of the expected ordering of positioned optima along
    one coefficient axis.

    ``grid`` lists every probed pair of adjacent triples, ``violations``
    the pairs (with their two optimal values) whose ordering failed beyond
    tolerance, and ``skipped`` the pairs that could not be evaluated.
    An empty violation list means the ordering held everywhere probed.
    """

    axis: str
    direction: str  # nondecreasing | nonincreasing
    grid: tuple[tuple[Triple, Triple], ...]
    violations: tuple[tuple[tuple[Triple, Triple], tuple[float, float]], ...]
    skipped: tuple[tuple[Triple, Triple], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def unit_grid(step: float) -> tuple[float, ...]:
    """Grid {0, step, 2*step, ...} over [0, 1], always including 1.

    Values are rounded to 10 decimals so grid points like 3*0.1 come out as
    exact presentation values (0.3, not 0.30000000000000004).
    """
    step = float(step)
    if not (0.0 < step <= 0.5):
        raise DomainError(f"grid step must be in (0, 0.5], got {step}")
    count = int(math.floor(1.0 / step + 1e-9))
    values = [round(k * step, 10) for k in range(count + 1)]
    if values[-1] < 1.0:
        values.append(1.0)
    return tuple(values)


def _validated(p: GreyLP) -> None:
    violations = validate_problem(p)
    if violations:
        raise ValidationError(violations)


def _record(p: GreyLP, vb: ValueBounds, triple: Triple, lambdas) -> SatisfactionRecord:
    """Evaluate one uniform triple; solver trouble becomes an error marker so
    a sweep keeps going and partial reports stay useful."""
    k = uniform_coefficients(triple[0], triple[1], triple[2], p.m, p.n)
    sol = solve_max(build_positioned(p, k))
    if sol.status is not SolveStatus.OPTIMAL:
        return SatisfactionRecord(coefficients=triple, f=None, mu=None, error=str(sol.status))
    f = sol.objective
    try:
        mu = pleased_degree(f, vb)
    except DomainError:
        mu = None  # ideal value is zero; the ratio form has no meaning
    mu_tilde = tuple((lam, lambda_satisfaction(f, vb, lam)) for lam in lambdas)
    return SatisfactionRecord(coefficients=triple, f=f, mu=mu, mu_tilde=mu_tilde)


def _triple_label(triple: Triple) -> str:
    return "mu_tilde(%g,%g,%g)" % triple


def lambda_sweep(p: GreyLP, settings, lambdas) -> SweepTable:
    """Satisfaction degrees of each uniform triple in ``settings`` across the
    ``lambdas`` grid.

    Records are sorted lexicographically by triple.  The result renders
    pivoted: one row per lambda, one column per triple.
    """
    _validated(p)
    triples = sorted(tuple(float(v) for v in t) for t in settings)
    lambdas = tuple(float(v) for v in lambdas)
    vb = bounds(p)
    rows = tuple(_record(p, vb, t, lambdas) for t in triples)
    labels = ("lambda",) + tuple(_triple_label(t) for t in triples)
    return SweepTable(axis_labels=labels, rows=rows, lambdas=lambdas)


def grid_sweep(p: GreyLP, step: float, lambdas=()) -> SweepTable:
    """Positioned values and degrees for every uniform triple on the cubic
    grid with the given step, in lexicographic order.

    ``lambdas`` optionally adds a satisfaction-degree column per value.
    """
    _validated(p)
    grid = unit_grid(step)
    lambdas = tuple(float(v) for v in lambdas)
    vb = bounds(p)
    rows = tuple(
        _record(p, vb, triple, lambdas)
        for triple in itertools.product(grid, repeat=3)
    )
    labels = ("alpha", "beta", "gamma", "f", "mu") + tuple(
        "mu_tilde[%g]" % lam for lam in lambdas
    )
    return SweepTable(axis_labels=labels, rows=rows, lambdas=lambdas)


_AXES = {"alpha": 0, "beta": 1, "gamma": 2}


def check_monotonicity(p: GreyLP, axis: str, step: float) -> MonotonicityReport:
    """Probe adjacent grid values along one coefficient axis, holding the
    other two axes on their own grid.

    Expected ordering: optima nondecreasing in alpha and beta, nonincreasing
    in gamma.  Adjacent pairs suffice: transitivity extends them to the
    whole grid.  Violations beyond ``1e-6 * scale`` are reported, where
    ``scale`` is the largest optimum probed (at least 1).
    """
    if axis not in _AXES:
        raise DomainError(f"axis must be one of {sorted(_AXES)}, got {axis!r}")
    _validated(p)
    pos = _AXES[axis]
    direction = "nonincreasing" if axis == "gamma" else "nondecreasing"
    grid = unit_grid(step)

    values: dict[Triple, float | None] = {}
    for triple in itertools.product(grid, repeat=3):
        k = uniform_coefficients(triple[0], triple[1], triple[2], p.m, p.n)
        sol = solve_max(build_positioned(p, k))
        values[triple] = sol.objective if sol.status is SolveStatus.OPTIMAL else None

    finite = [v for v in values.values() if v is not None]
    scale = max(1.0, max((abs(v) for v in finite), default=1.0))
    tol = 1e-6 * scale

    probed: list[tuple[Triple, Triple]] = []
    violations: list[tuple[tuple[Triple, Triple], tuple[float, float]]] = []
    skipped: list[tuple[Triple, Triple]] = []
    for fixed in itertools.product(grid, repeat=2):
        for lo, hi in itertools.pairwise(grid):
            t_lo, t_hi = list(fixed), list(fixed)
            t_lo.insert(pos, lo)
            t_hi.insert(pos, hi)
            pair = (tuple(t_lo), tuple(t_hi))
            probed.append(pair)
            f_lo, f_hi = values[pair[0]], values[pair[1]]
            if f_lo is None or f_hi is None:
                skipped.append(pair)
                continue
            gap = f_hi - f_lo if direction == "nondecreasing" else f_lo - f_hi
            if gap < -tol:
                violations.append((pair, (f_lo, f_hi)))

    return MonotonicityReport(
        axis=axis,
        direction=direction,
        grid=tuple(probed),
        violations=tuple(violations),
        skipped=tuple(skipped),
    )


def find_satisfactory(p: GreyLP, mu0: float, lam: float, step: float) -> list[tuple[Triple, float]]:
    """All uniform grid triples whose satisfaction degree at ``lam`` reaches
    the grey target ``mu0``, best first (ties in lexicographic order)."""
    for name, v in (("mu0", mu0), ("lam", lam)):
        if not (0.0 <= float(v) <= 1.0):
            raise DomainError(f"{name} must be in [0, 1], got {v}")
    table = grid_sweep(p, step, lambdas=(float(lam),))
    hits = [
        (r.coefficients, r.mu_tilde[0][1])
        for r in table.rows
        if r.error is None and r.mu_tilde and r.mu_tilde[0][1] >= float(mu0)
    ]
    hits.sort(key=lambda item: (-item[1], item[0]))
    return hits


def _fmt_coeff(v: float) -> str:
    return "%g" % v


def _fmt_f(v: float | None, error: str | None) -> str:
    if error is not None:
        return error
    return "" if v is None else "%.2f" % v


def _fmt_degree(v: float | None, error: str | None) -> str:
    if error is not None:
        return error
    return "" if v is None else "%.4f" % v


def _table_cells(t: SweepTable) -> list[list[str]]:
    header = list(t.axis_labels)
    grid_rows: list[list[str]] = []
    if t.axis_labels and t.axis_labels[0] == "lambda":
        for lam in t.lambdas:
            cells = [_fmt_coeff(lam)]
            for r in t.rows:
                if r.error is not None:
                    cells.append(r.error)
                else:
                    cells.append(_fmt_degree(r.mu_tilde_at(lam), None))
            grid_rows.append(cells)
    else:
        for r in t.rows:
            cells = [_fmt_coeff(v) for v in r.coefficients]
            cells.append(_fmt_f(r.f, r.error))
            cells.append(_fmt_degree(r.mu, r.error))
            by_lam = dict(r.mu_tilde)
            for lam in t.lambdas:
                cells.append(_fmt_degree(by_lam.get(lam), r.error))
            grid_rows.append(cells)
    return [header] + grid_rows


def render_table(t: SweepTable, format: str) -> str:
    """Render a sweep table to ``csv`` or ``markdown`` text.

    Deterministic: identical tables produce identical bytes.  Optimal values
    round to 2 decimals and degrees to 4; CSV output is comma-separated with
    LF line endings and one header row.
    """
    if format not in ("csv", "markdown"):
        raise DomainError(f"format must be 'csv' or 'markdown', got {format!r}")
    cells = _table_cells(t)
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(cells)
        return buf.getvalue()
    header, *data = cells
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    for row in data:
        lines.append("| " + " | ".join(cell if cell else "-" for cell in row) + " |")
    return "\n".join(lines) + "\n"
