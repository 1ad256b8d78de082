"""Tests for grid parsing, expansion and sweeps."""

import pytest

from src.core.config import get_settings
from src.core.errors import DomainError
from src.harness.schemas import IdentityId
from src.harness.sweep import (
    expand_grid,
    parse_grid,
    run_sweep,
    summarize,
    sweep,
)


def test_parse_grid_ranges():
    grid = parse_grid("n=0:5:6, lambda=0.25:2.5:3, x=0.1")

    assert grid["n"] == [0.0, 1.0, 2.0, 3.0, 4.0, 5.0]
    assert grid["lambda"] == pytest.approx([0.25, 1.375, 2.5])
    assert grid["x"] == [0.1]


def test_parse_grid_count_one():
    assert parse_grid("z=2:9:1") == {"z": [2.0]}


def test_parse_grid_rounds_degrees():
    assert parse_grid("n=0:3:3")["n"] == [0.0, 2.0, 3.0]


@pytest.mark.parametrize("text", ["q=1", "n", "x=0:1", "x=0:1:0", "x=a:1:2"])
def test_parse_grid_errors(text):
    with pytest.raises(DomainError):
        parse_grid(text)


def test_empty_grid():
    assert sweep("eq2.7", {}) == []
    assert expand_grid("eq2.7", {"n": []}) == ([], 0)


def test_missing_axis():
    with pytest.raises(DomainError, match="needs axes: x"):
        expand_grid("eq2.7", {"n": [0], "lambda": [0.5], "kappa": [0.0]})


def test_lexicographic_order():
    grid = {"x": [0.5, -0.5], "n": [1, 0], "lambda": [0.5], "kappa": [0.0]}
    points, skipped = expand_grid("eq2.7", grid)

    assert skipped == 0
    assert [(p.params.n, p.params.x) for p in points] == [(1, 0.5), (1, -0.5), (0, 0.5), (0, -0.5)]


def test_clipping_recorded():
    grid = {"n": [0], "lambda": [0.5], "kappa": [0.6], "x": [0.0]}
    reports = sweep("eq2.7", grid)

    margin = get_settings().DOMAIN_MARGIN
    assert reports[0].params.kappa == 0.5 - margin
    assert reports[0].diagnostics["clipped_from"] == {"kappa": 0.6}


def test_offcut_kappa_not_clipped():
    points, _ = expand_grid("eq1.1", {"n": [0], "lambda": [0.5], "kappa": [1.2], "z": [2.0]})

    assert points[0].params.kappa == 1.2
    assert not points[0].clipped


def test_series_exclusion_skipped():
    grid = {"lambda": [0.5], "kappa": [0.0], "x": [-0.1, 0.4], "t": [-0.1, 0.4]}
    points, skipped = expand_grid("eq3.2", grid)

    assert skipped == 2
    assert len(points) == 2


def test_gamma_pole_points_skipped():
    """Second-kind series at kappa = -1/2 are outside the domain and counted as skipped."""
    grid = {"lambda": [0.5], "kappa": [-0.5], "x": [0.4], "t": [-0.6]}
    reports, summary = run_sweep("eq3.3", grid)

    assert reports == []
    assert summary.skipped == 1
    assert summary.total == 0


def test_sweep_counts_and_summary():
    grid = {"n": [0, 1], "lambda": [0.25, 1.0], "kappa": [0.0], "x": [-0.7, 0.7]}
    reports, summary = run_sweep("eq2.7", grid, max_workers=2)

    assert len(reports) == 8
    assert summary.total == 8
    assert summary.passed == 8
    assert summary.failed == 0
    assert summary.worst_rel_err == max(r.rel_err for r in reports)


def test_sweep_is_deterministic():
    grid = {"n": [0, 2], "z": [1.5, 3.0]}
    first = sweep("eq1.3", grid, max_workers=4)
    second = sweep("eq1.3", grid, max_workers=1)

    assert [r.model_dump() for r in first] == [r.model_dump() for r in second]


def test_summarize_empty():
    summary = summarize([])

    assert summary.total == 0
    assert summary.worst_rel_err == 0.0


@pytest.mark.slow
def test_right_integral_acceptance_grid():
    grid = {
        "n": list(range(6)),
        "lambda": [0.25, 1.0, 2.5],
        "kappa": [-0.5, 0.0, 0.3],
        "x": [-0.7, 0.0, 0.7],
    }
    reports, summary = run_sweep(IdentityId.RIGHT_INTEGRAL, grid, 1e-7)

    assert len(reports) == 6 * 3 * 3 * 3
    assert summary.failed == 0


@pytest.mark.slow
def test_q_plus_series_grid():
    values = [-0.6, -0.1, 0.4, 0.8]
    grid = {"lambda": [0.5, 1.25], "kappa": [0.0], "x": values, "t": values}
    reports, summary = run_sweep(IdentityId.Q_PLUS_SERIES, grid, 1e-3)

    assert summary.skipped == 2 * len(values)
    assert len(reports) == 2 * 12
    assert summary.failed == 0
