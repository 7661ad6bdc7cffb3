"""Tests for the exhaustive, grid, and random-sampling speed searches."""

import numpy as np
import pytest

from manhattan_pursuit import (
    BRUTE_FORCE_LIMIT,
    IN_RECT,
    METHOD_EXTREMES,
    METHOD_GRID,
    METHOD_SAMPLING,
    Point2,
    Rectangle,
    Scenario,
    SpeedBounds,
    brute_force_extremes,
    generate_random_scenario,
    grid_search,
    optimal_single,
    random_sampling_baseline,
    sample_count,
    total_intercept_time,
)

BOUNDS = SpeedBounds(0.2, 0.8)
ORIGIN = Point2(0.0, 0.0)


def _scenario(pursuer, evaders, bounds=BOUNDS):
    return Scenario(pursuer=pursuer, evaders=tuple(evaders), bounds=bounds)


def _golden_scenario():
    return _scenario(ORIGIN, [Point2(1.0, -0.5), Point2(2.0, 0.0)])


def _random_scenario(rng, n):
    return generate_random_scenario(
        n, Rectangle(1, 1), IN_RECT, BOUNDS, seed=int(rng.integers(1 << 30))
    )


# ---------------------------------------------------------------------------
# exhaustive corner search
# ---------------------------------------------------------------------------

def test_brute_force_golden():
    report = brute_force_extremes(_golden_scenario())
    assert report.best_assignment.speeds == (0.2, 0.8)
    assert report.best_time == pytest.approx(12.5, abs=1e-9)
    assert report.evaluations == 4
    assert report.method == METHOD_EXTREMES
    assert report.samples == 0


def test_brute_force_golden_corner_table():
    scenario = _golden_scenario()
    expected = {
        (0.2, 0.2): 3.125,
        (0.2, 0.8): 12.5,
        (0.8, 0.2): 25.0 / 6.0,  # 4.1666...
        (0.8, 0.8): 10.0,
    }
    for speeds, total in expected.items():
        assert total_intercept_time(scenario, speeds).total_time == pytest.approx(
            total, abs=1e-9
        )
    assert brute_force_extremes(scenario).best_time == pytest.approx(
        max(expected.values()), abs=1e-9
    )


def test_brute_force_single_evader_matches_optimal_single():
    rng = np.random.default_rng(3)
    for _ in range(50):
        scenario = _random_scenario(rng, 1)
        report = brute_force_extremes(scenario)
        assert report.evaluations == 2
        assert report.best_assignment.speeds[0] == optimal_single(
            scenario.pursuer, scenario.evaders[0], BOUNDS
        )


def test_brute_force_size_limit():
    evaders = [Point2(0.1 * i, -0.1 * i) for i in range(BRUTE_FORCE_LIMIT + 1)]
    with pytest.raises(ValueError, match="limit"):
        brute_force_extremes(_scenario(ORIGIN, evaders))


def test_brute_force_tie_resolves_to_lex_smallest():
    # The first evader starts on the pursuer: its leg is zero whatever its
    # speed, so both of its corners tie exactly and u_min must be reported.
    pursuer = Point2(0.3, 0.4)
    scenario = _scenario(pursuer, [Point2(0.3, 0.4), Point2(1.0, 0.0)])
    report = brute_force_extremes(scenario)
    assert report.best_assignment.speeds[0] == 0.2


def test_brute_force_report_time_matches_assignment():
    rng = np.random.default_rng(7)
    for _ in range(50):
        scenario = _random_scenario(rng, int(rng.integers(1, 7)))
        report = brute_force_extremes(scenario)
        recomputed = total_intercept_time(scenario, report.best_assignment)
        assert report.best_time == recomputed.total_time


# ---------------------------------------------------------------------------
# grid search
# ---------------------------------------------------------------------------

def test_grid_with_two_points_is_the_corner_search():
    rng = np.random.default_rng(11)
    for _ in range(50):
        scenario = _random_scenario(rng, int(rng.integers(1, 7)))
        corner = brute_force_extremes(scenario)
        grid = grid_search(scenario, points_per_evader=2)
        assert grid.best_assignment.speeds == corner.best_assignment.speeds
        assert grid.best_time == corner.best_time
        assert grid.evaluations == corner.evaluations
        assert grid.method == METHOD_GRID


def test_grid_never_beats_corners():
    rng = np.random.default_rng(13)
    for _ in range(50):
        scenario = _random_scenario(rng, int(rng.integers(1, 4)))
        corner = brute_force_extremes(scenario).best_time
        grid = grid_search(scenario, points_per_evader=11).best_time
        assert grid <= corner + 1e-9


def test_grid_single_evader_peaks_at_an_endpoint():
    rng = np.random.default_rng(17)
    for _ in range(20):
        scenario = _random_scenario(rng, 1)
        report = grid_search(scenario, points_per_evader=101)
        assert report.evaluations == 101
        assert report.best_assignment.speeds[0] in (0.2, 0.8)
        assert report.best_time == brute_force_extremes(scenario).best_time


def test_grid_validates_points_and_budget():
    scenario = _golden_scenario()
    with pytest.raises(ValueError):
        grid_search(scenario, points_per_evader=1)
    big = _scenario(ORIGIN, [Point2(0.1 * i, -0.1 * i) for i in range(1, 9)])
    with pytest.raises(ValueError, match="budget"):
        grid_search(big, points_per_evader=11)  # 11^8 > 10^7


# ---------------------------------------------------------------------------
# random sampling
# ---------------------------------------------------------------------------

def test_sample_count_reference_values():
    assert sample_count(10, 0.1) == 300
    assert sample_count(2, 0.1) == 60


@pytest.mark.parametrize("delta", [0.0, 1.0, -0.5, 2.0])
def test_sample_count_rejects_bad_delta(delta):
    with pytest.raises(ValueError):
        sample_count(5, delta)


def test_sampling_golden_finds_the_optimum():
    # 60 draws over 4 corners: every corner appears, so the exact optimum is hit.
    report = random_sampling_baseline(_golden_scenario(), delta=0.1, seed=0)
    assert report.samples == 60
    assert report.method == METHOD_SAMPLING
    assert report.best_time == pytest.approx(12.5, abs=1e-9)
    assert report.evaluations <= 4  # caching collapses repeats


def test_sampling_is_deterministic():
    scenario = _golden_scenario()
    a = random_sampling_baseline(scenario, delta=0.1, seed=123)
    b = random_sampling_baseline(scenario, delta=0.1, seed=123)
    assert a == b
    c = random_sampling_baseline(scenario, delta=0.1, seed=124)
    assert c.samples == a.samples  # same budget, independent draws


def test_sampling_never_beats_brute_force():
    rng = np.random.default_rng(19)
    for _ in range(50):
        scenario = _random_scenario(rng, int(rng.integers(1, 7)))
        corner = brute_force_extremes(scenario).best_time
        sampled = random_sampling_baseline(
            scenario, delta=0.1, seed=int(rng.integers(1 << 30))
        ).best_time
        assert sampled <= corner


def test_sampling_cache_changes_work_not_answers():
    rng = np.random.default_rng(23)
    for _ in range(20):
        scenario = _random_scenario(rng, int(rng.integers(1, 6)))
        seed = int(rng.integers(1 << 30))
        cached = random_sampling_baseline(scenario, delta=0.1, seed=seed, cache=True)
        raw = random_sampling_baseline(scenario, delta=0.1, seed=seed, cache=False)
        assert cached.best_time == raw.best_time
        assert cached.best_assignment.speeds == raw.best_assignment.speeds
        assert raw.evaluations == raw.samples
        assert cached.evaluations <= min(raw.samples, 2 ** scenario.n)


def test_sampling_budget_growth_never_hurts():
    # Draws form a prefix-stable stream: the first m rows of a 2m-sample run
    # are exactly the m-sample run, so the best can only improve.
    rng = np.random.default_rng(29)
    for _ in range(20):
        scenario = _random_scenario(rng, int(rng.integers(2, 8)))
        seed = int(rng.integers(1 << 30))
        small = random_sampling_baseline(scenario, delta=0.1, seed=seed, num_samples=8)
        large = random_sampling_baseline(scenario, delta=0.1, seed=seed, num_samples=16)
        assert large.best_time >= small.best_time


def test_sampling_continuous_draws():
    scenario = _golden_scenario()
    report = random_sampling_baseline(scenario, delta=0.1, seed=5, continuous=True)
    for v in report.best_assignment.speeds:
        assert 0.2 <= v <= 0.8
    # Interior speeds cannot beat the exact corner optimum.
    assert report.best_time <= brute_force_extremes(scenario).best_time + 1e-9
    again = random_sampling_baseline(scenario, delta=0.1, seed=5, continuous=True)
    assert again == report


def test_sampling_num_samples_override_and_validation():
    scenario = _golden_scenario()
    report = random_sampling_baseline(scenario, delta=0.1, seed=0, num_samples=3)
    assert report.samples == 3
    with pytest.raises(ValueError):
        random_sampling_baseline(scenario, delta=0.1, seed=0, num_samples=0)


def test_report_to_dict_schema():
    report = brute_force_extremes(_golden_scenario())
    data = report.to_dict()
    assert data == {
        "method": METHOD_EXTREMES,
        "speeds": [0.2, 0.8],
        "total": report.best_time,
        "evaluations": 4,
        "samples": 0,
    }
