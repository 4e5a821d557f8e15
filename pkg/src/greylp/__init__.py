"""greylp: interval-coefficient linear programs, positioned and ranked.

The toolkit models linear programs whose objective, constraint-matrix, and
right-hand-side coefficients are only known as closed intervals.  Choosing a
position coefficient in [0, 1] for each interval whitens the problem into an
ordinary LP; the built-in simplex solver computes its optimum; and the
satisfaction layer grades that optimum between the problem's pessimistic
(critical) and optimistic (ideal) values so different positioned choices can
be ranked against a grey target.
"""

from .analysis import (
    MonotonicityReport,
    SatisfactionRecord,
    SweepTable,
    check_monotonicity,
    find_satisfactory,
    grid_sweep,
    lambda_sweep,
    render_table,
    unit_grid,
)
from .cli import ProblemFile, parse_problem, run, serialize_problem
from .errors import (
    DegenerateBoundsWarning,
    DomainError,
    GreyLPError,
    InconsistentInputsError,
    ParseError,
    SolverFailure,
    StructureError,
    UnboundedValueError,
    ValidationError,
)
from .grey_core import (
    GreyLP,
    Interval,
    PositionCoefficients,
    Violation,
    WhiteLP,
    build_positioned,
    theta_coefficients,
    uniform_coefficients,
    validate_problem,
    whiten,
)
from .lp_solver import LPSolution, SolveStatus, enumerate_vertices_oracle, solve_max
from .satisfaction import (
    DegreeQuery,
    ValueBounds,
    bounds,
    is_lambda_satisfactory,
    is_pleased,
    lambda_satisfaction,
    pleased_degree,
    positioned_value,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # grey_core
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
    # lp_solver
    "SolveStatus",
    "LPSolution",
    "solve_max",
    "enumerate_vertices_oracle",
    # satisfaction
    "ValueBounds",
    "DegreeQuery",
    "positioned_value",
    "bounds",
    "pleased_degree",
    "lambda_satisfaction",
    "is_pleased",
    "is_lambda_satisfactory",
    # analysis
    "SatisfactionRecord",
    "SweepTable",
    "MonotonicityReport",
    "unit_grid",
    "lambda_sweep",
    "grid_sweep",
    "check_monotonicity",
    "find_satisfactory",
    "render_table",
    # cli
    "ProblemFile",
    "parse_problem",
    "serialize_problem",
    "run",
    # errors
    "GreyLPError",
    "DomainError",
    "StructureError",
    "ValidationError",
    "ParseError",
    "UnboundedValueError",
    "InconsistentInputsError",
    "SolverFailure",
    "DegenerateBoundsWarning",
]
