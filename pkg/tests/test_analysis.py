"""Sweeps, monotonicity checks, satisfactory search, and table rendering."""

import csv
import io
import random

import pytest

from conftest import random_bounded_problem
from greylp import (
    DomainError,
    GreyLP,
    UnboundedValueError,
    SatisfactionRecord,
    SweepTable,
    ValidationError,
    bounds,
    check_monotonicity,
    find_satisfactory,
    grid_sweep,
    lambda_sweep,
    render_table,
    unit_grid,
)
from greylp.bundled import (
    REFERENCE_LAMBDA_GRID,
    REFERENCE_SATISFACTION,
)

TABLE_TRIPLES = tuple(trip for trip, _ in REFERENCE_SATISFACTION)


class TestUnitGrid:
    def test_quarter_grid(self):
        assert unit_grid(0.25) == (0.0, 0.25, 0.5, 0.75, 1.0)

    def test_tenth_grid_is_presentation_exact(self):
        grid = unit_grid(0.1)
        assert len(grid) == 11
        assert grid[3] == 0.3
        assert grid[-1] == 1.0

    def test_non_divisor_step_still_reaches_one(self):
        assert unit_grid(0.3) == (0.0, 0.3, 0.6, 0.9, 1.0)

    def test_half_step(self):
        assert unit_grid(0.5) == (0.0, 0.5, 1.0)

    @pytest.mark.parametrize("bad", [0.0, -0.1, 0.6, 1.0])
    def test_rejects_bad_step(self, bad):
        with pytest.raises(DomainError):
            unit_grid(bad)


@pytest.fixture(scope="module")
def table(demo_problem):
    return lambda_sweep(demo_problem, TABLE_TRIPLES, REFERENCE_LAMBDA_GRID)


class TestLambdaSweep:
    def test_reproduces_reference_grid(self, table):
        by_triple = {r.coefficients: r for r in table.rows}
        for triple, refs in REFERENCE_SATISFACTION:
            record = by_triple[triple]
            for lam, ref in zip(REFERENCE_LAMBDA_GRID, refs):
                assert record.mu_tilde_at(lam) == pytest.approx(ref, abs=2e-4)

    def test_rows_sorted_lexicographically(self, table):
        coeffs = [r.coefficients for r in table.rows]
        assert coeffs == sorted(coeffs)

    def test_axis_labels_mark_pivot_layout(self, table):
        assert table.axis_labels[0] == "lambda"
        assert len(table.axis_labels) == 1 + len(TABLE_TRIPLES)
        assert table.lambdas == tuple(REFERENCE_LAMBDA_GRID)

    def test_missing_lambda_lookup_raises(self, table):
        with pytest.raises(KeyError):
            table.rows[0].mu_tilde_at(0.123)

    def test_rejects_invalid_problem(self):
        bad = GreyLP(objective=((2, 1),), matrix=(((1, 2),),), rhs=((3, 4),))
        with pytest.raises(ValidationError):
            lambda_sweep(bad, ((0.5, 0.5, 0.5),), (0.5,))


class TestGridSweep:
    def test_half_step_covers_cube(self, demo_problem):
        table = grid_sweep(demo_problem, 0.5)
        assert len(table.rows) == 27
        coeffs = [r.coefficients for r in table.rows]
        assert coeffs == sorted(coeffs)
        by_triple = {r.coefficients: r for r in table.rows}
        assert by_triple[(1.0, 1.0, 0.0)].f == pytest.approx(74783.51, abs=0.01)
        assert by_triple[(0.0, 0.0, 1.0)].f == pytest.approx(20657.71, abs=0.01)
        assert table.axis_labels == ("alpha", "beta", "gamma", "f", "mu")

    def test_lambda_columns(self, demo_problem):
        table = grid_sweep(demo_problem, 0.5, lambdas=(0.5, 1.0))
        assert table.axis_labels[-2:] == ("mu_tilde[0.5]", "mu_tilde[1]")
        record = next(r for r in table.rows if r.coefficients == (1.0, 1.0, 0.0))
        assert record.mu_tilde_at(1.0) == pytest.approx(1.0, abs=1e-12)

    def test_white_problem_sweeps_flat(self):
        p = GreyLP(objective=((2, 2),), matrix=(((1, 1),),), rhs=((4, 4),))
        table = grid_sweep(p, 0.5)
        values = {r.f for r in table.rows}
        assert len(values) == 1
        assert values.pop() == pytest.approx(8.0, rel=1e-12)

    def test_unbounded_ideal_rejects_the_sweep(self):
        # Unboundedness at any whitening implies the loosest whitening is
        # unbounded too, so no degree is definable and the sweep must refuse.
        p = GreyLP(objective=((1, 2),), matrix=(((0, 1),),), rhs=((5, 6),))
        with pytest.raises(UnboundedValueError):
            grid_sweep(p, 0.5)


class TestCheckMonotonicity:
    @pytest.mark.parametrize("axis", ["alpha", "beta", "gamma"])
    def test_demo_problem_ordering_holds(self, demo_problem, axis):
        report = check_monotonicity(demo_problem, axis, 0.25)
        assert report.ok
        assert report.violations == ()
        assert report.skipped == ()
        assert len(report.grid) == 100  # 4 adjacent pairs x 25 fixed settings
        expected = "nonincreasing" if axis == "gamma" else "nondecreasing"
        assert report.direction == expected

    def test_rejects_unknown_axis(self, demo_problem):
        with pytest.raises(DomainError):
            check_monotonicity(demo_problem, "delta", 0.25)

    def test_unbounded_settings_are_skipped(self):
        p = GreyLP(objective=((1, 2),), matrix=(((0, 1),),), rhs=((5, 6),))
        report = check_monotonicity(p, "gamma", 0.5)
        assert report.ok
        assert report.skipped  # pairs touching the uncapped settings

    def test_random_problems_hold_ordering(self):
        rng = random.Random(99)
        for _ in range(5):
            p = random_bounded_problem(rng, n=2, m=2)
            for axis in ("alpha", "beta", "gamma"):
                assert check_monotonicity(p, axis, 0.5).ok


class TestFindSatisfactory:
    def test_demo_search(self, demo_problem):
        hits = find_satisfactory(demo_problem, mu0=0.5, lam=0.8, step=0.5)
        assert len(hits) == 9
        assert hits[0][0] == (1.0, 1.0, 0.0)
        assert hits[0][1] == pytest.approx(1.0, abs=1e-12)
        values = [value for _, value in hits]
        assert values == sorted(values, reverse=True)
        assert all(value >= 0.5 for value in values)

    def test_zero_target_accepts_everything(self, demo_problem):
        hits = find_satisfactory(demo_problem, mu0=0.0, lam=1.0, step=0.5)
        assert len(hits) == 27

    def test_impossible_target(self, demo_problem):
        # Degrees below 1 everywhere except the loosest corner.
        hits = find_satisfactory(demo_problem, mu0=1.0, lam=1.0, step=0.5)
        assert [triple for triple, _ in hits] == [(1.0, 1.0, 0.0)]

    @pytest.mark.parametrize("kwargs", [{"mu0": 1.5}, {"lam": -0.2}])
    def test_rejects_bad_thresholds(self, demo_problem, kwargs):
        merged = {"mu0": 0.5, "lam": 0.5, "step": 0.5, **kwargs}
        with pytest.raises(DomainError):
            find_satisfactory(demo_problem, **merged)


class TestRenderTable:
    def test_lambda_table_renders_pivoted_csv(self, demo_problem):
        table = lambda_sweep(demo_problem, TABLE_TRIPLES, REFERENCE_LAMBDA_GRID)
        text = render_table(table, "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert len(rows) == 1 + 11
        assert rows[0][0] == "lambda"
        assert len(rows[0]) == 1 + 4
        # Spot-check a reference cell: the (0.6, 0.6, 0.6) column at lam=0.5.
        col = rows[0].index("mu_tilde(0.6,0.6,0.6)")
        lam_row = next(r for r in rows[1:] if r[0] == "0.5")
        assert lam_row[col] == "0.3659"
        assert text.endswith("\n") and "\r" not in text

    def test_grid_table_renders_one_row_per_record(self, demo_problem):
        table = grid_sweep(demo_problem, 0.5)
        text = render_table(table, "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert len(rows) == 1 + 27
        assert rows[0] == ["alpha", "beta", "gamma", "f", "mu"]
        first = rows[1]
        assert first[:3] == ["0", "0", "0"]
        assert first[3] == "35704.92"

    def test_markdown_layout(self, demo_problem):
        table = grid_sweep(demo_problem, 0.5)
        text = render_table(table, "markdown")
        lines = text.splitlines()
        assert lines[0].startswith("| alpha | beta | gamma |")
        assert set(lines[1].replace("|", "").split()) == {"---"}
        assert len(lines) == 2 + 27

    def test_error_rows_render_their_marker(self):
        record = SatisfactionRecord(
            coefficients=(0.0, 0.0, 0.0), f=None, mu=None, error="unbounded"
        )
        table = SweepTable(axis_labels=("alpha", "beta", "gamma", "f", "mu"), rows=(record,))
        rows = list(csv.reader(io.StringIO(render_table(table, "csv"))))
        assert rows[1] == ["0", "0", "0", "unbounded", "unbounded"]

    def test_empty_table(self):
        table = SweepTable(axis_labels=("alpha", "beta", "gamma", "f", "mu"), rows=())
        assert render_table(table, "csv") == "alpha,beta,gamma,f,mu\n"

    def test_rejects_unknown_format(self, demo_problem):
        table = grid_sweep(demo_problem, 0.5)
        with pytest.raises(DomainError):
            render_table(table, "tsv")

    def test_rendering_is_deterministic(self, demo_problem):
        table = grid_sweep(demo_problem, 0.5, lambdas=(0.5,))
        assert render_table(table, "csv") == render_table(table, "csv")
