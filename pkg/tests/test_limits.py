"""Tests for the closed-form capture-time ceiling and its optimal split."""

import math

import numpy as np
import pytest

from manhattan_pursuit import (
    FIRST_GROUP_FAST,
    FIRST_GROUP_SLOW,
    IN_RECT,
    BoundInputs,
    Point2,
    Rectangle,
    SpeedBounds,
    bound_inputs_from_scenario,
    bound_sweep,
    generate_random_scenario,
    optimal_nmax,
    upper_bound_time,
)

BOUNDS = SpeedBounds(0.2, 0.8)


def _inputs(**overrides):
    base = dict(n=100, n_max=63, a_max=1.0, a_min=1.0,
                delta_x=1.0, delta_y=0.0, bounds=BOUNDS)
    base.update(overrides)
    return BoundInputs(**base)


# ---------------------------------------------------------------------------
# the three-phase ceiling
# ---------------------------------------------------------------------------

def test_upper_bound_reference_breakdown():
    result = upper_bound_time(_inputs())
    assert result.t_nmax == pytest.approx(24.152, abs=1e-2)
    assert result.t_handoff == pytest.approx(12.110, abs=1e-2)
    assert result.t_nmin == pytest.approx(8.749, abs=1e-2)
    assert result.total == pytest.approx(45.01, abs=1e-2)
    assert result.total == result.t_nmax + result.t_handoff + result.t_nmin


def test_upper_bound_to_dict():
    result = upper_bound_time(_inputs())
    assert result.to_dict() == {
        "t_nmax": result.t_nmax,
        "t_handoff": result.t_handoff,
        "t_nmin": result.t_nmin,
        "total": result.total,
    }


def test_upper_bound_phase_formulas():
    # Cross-check each phase against a direct evaluation.
    inputs = _inputs(n=40, n_max=11, a_max=2.0, a_min=3.0, delta_x=0.5, delta_y=0.25)
    result = upper_bound_time(inputs)
    q1 = 1.0 - 0.8**2
    q2 = 1.0 - 0.2**2
    t1 = math.sqrt(2.0 * 2.0 * 11 / q1**1.5)
    z = 0.25 + (0.2 - 0.8) * t1
    handoff = 0.2 * z / q2 + math.sqrt(0.5**2 / q2 + z**2 / q2**2)
    t2 = math.sqrt(2.0 * 3.0 * (29 - 1) / q2**1.5)
    assert result.t_nmax == pytest.approx(t1, rel=1e-12)
    assert result.t_handoff == pytest.approx(handoff, rel=1e-12)
    assert result.t_nmin == pytest.approx(t2, rel=1e-12)


@pytest.mark.parametrize(
    "overrides",
    [
        {"n_max": 100},          # no slow group left
        {"n_max": 0},            # no fast group
        {"n_max": -3},
        {"n": 1, "n_max": 1},    # nothing to split
        {"a_max": -1.0},
        {"a_min": math.nan},
        {"delta_x": math.inf},
        {"bounds": SpeedBounds(0.8, 0.2)},
    ],
)
def test_upper_bound_precondition_errors(overrides):
    with pytest.raises(ValueError):
        upper_bound_time(_inputs(**overrides))


def test_upper_bound_rejects_unknown_first_group():
    with pytest.raises(ValueError):
        upper_bound_time(_inputs(), first_group="fastest")


def test_upper_bound_near_equal_speeds_limit():
    # With u_min -> u_max and delta_y = 0 the handoff leg degenerates to the
    # straight crossing delta_x / sqrt(1 - u^2).
    bounds = SpeedBounds(0.5, 0.500001)
    inputs = _inputs(n=10, n_max=5, delta_x=2.0, delta_y=0.0, bounds=bounds)
    result = upper_bound_time(inputs)
    assert result.t_handoff == pytest.approx(2.0 / math.sqrt(1.0 - 0.5**2), abs=1e-3)


def test_slow_group_first_never_cheaper_in_the_operating_regime():
    # Clearing the slow group first lets the fast group run away, so the
    # swapped ordering's ceiling is at least as large.  This holds in the
    # regime the harness actually uses — equal group areas, the recommended
    # split, offsets within a unit-square handoff — not for arbitrarily
    # lopsided areas.
    rng = np.random.default_rng(61)
    for _ in range(300):
        n = int(rng.integers(10, 200))
        area = float(rng.uniform(0.2, 2.0))
        inputs = _inputs(
            n=n,
            n_max=optimal_nmax(n, BOUNDS),
            a_max=area,
            a_min=area,
            delta_x=float(rng.uniform(0.0, 2.0)),
            delta_y=float(rng.uniform(0.0, 1.0)),
        )
        fast_first = upper_bound_time(inputs, first_group=FIRST_GROUP_FAST)
        slow_first = upper_bound_time(inputs, first_group=FIRST_GROUP_SLOW)
        assert slow_first.total >= fast_first.total


# ---------------------------------------------------------------------------
# optimal split size
# ---------------------------------------------------------------------------

def test_optimal_nmax_reference_values():
    assert optimal_nmax(1000, BOUNDS) == 630
    assert optimal_nmax(100, BOUNDS) == 63


def test_optimal_nmax_clamps_when_speeds_coincide():
    assert optimal_nmax(1000, SpeedBounds(0.5, 0.500001)) == 1


def test_optimal_nmax_validation_and_range():
    with pytest.raises(ValueError):
        optimal_nmax(1, BOUNDS)
    with pytest.raises(ValueError):
        optimal_nmax(100, SpeedBounds(0.9, 0.1))
    rng = np.random.default_rng(67)
    for _ in range(200):
        n = int(rng.integers(2, 5000))
        u_min = float(rng.uniform(0.01, 0.9))
        u_max = float(rng.uniform(u_min + 0.01, 0.99))
        k = optimal_nmax(n, SpeedBounds(u_min, u_max))
        assert 1 <= k <= n - 1


def test_optimal_nmax_scales_linearly():
    # The recommended split is a fixed fraction of n (up to rounding).
    k1 = optimal_nmax(1000, BOUNDS)
    k2 = optimal_nmax(10_000, BOUNDS)
    assert abs(k2 - 10 * k1) <= 5


# ---------------------------------------------------------------------------
# sweeps over the split size
# ---------------------------------------------------------------------------

def test_bound_sweep_matches_pointwise_evaluation():
    sweep = bound_sweep(12, BOUNDS, a_max=1.0, a_min=1.0, delta_x=0.3, delta_y=0.1)
    assert len(sweep) == 11
    for k, entry in enumerate(sweep, start=1):
        direct = upper_bound_time(
            BoundInputs(n=12, n_max=k, a_max=1.0, a_min=1.0,
                        delta_x=0.3, delta_y=0.1, bounds=BOUNDS)
        )
        assert entry == direct


def test_bound_sweep_large_n_is_unimodal():
    totals = [b.total for b in bound_sweep(1000, BOUNDS, delta_x=0.1)]
    increasing = True
    switches = 0
    for a, b in zip(totals, totals[1:]):
        if increasing and b < a:
            increasing = False
            switches += 1
        elif not increasing and b > a:
            increasing = True
            switches += 1
    assert switches <= 1  # rises to a single peak, then falls


# ---------------------------------------------------------------------------
# scenario-driven inputs
# ---------------------------------------------------------------------------

def test_bound_inputs_from_scenario_defaults():
    scenario = generate_random_scenario(
        50, Rectangle(1, 1), IN_RECT, BOUNDS, seed=42
    )
    inputs = bound_inputs_from_scenario(scenario)
    assert inputs.n == 50
    assert inputs.n_max == optimal_nmax(50, BOUNDS)
    assert inputs.bounds == BOUNDS
    assert inputs.delta_x >= 0.0
    assert math.isfinite(inputs.delta_y)
    # Default group areas are the evader bounding box.
    xs = [e.x for e in scenario.evaders]
    ys = [e.y for e in scenario.evaders]
    box = (max(xs) - min(xs)) * (max(ys) - min(ys))
    assert inputs.a_max == pytest.approx(box, rel=1e-12)
    assert inputs.a_min == pytest.approx(box, rel=1e-12)
    upper_bound_time(inputs)  # evaluates cleanly


def test_bound_inputs_from_scenario_overrides():
    scenario = generate_random_scenario(
        20, Rectangle(1, 1), IN_RECT, BOUNDS, seed=7
    )
    inputs = bound_inputs_from_scenario(scenario, n_max=4, a_max=2.0, a_min=3.0)
    assert inputs.n_max == 4
    assert inputs.a_max == 2.0
    assert inputs.a_min == 3.0


def test_bound_inputs_from_scenario_needs_two_evaders():
    scenario = generate_random_scenario(1, Rectangle(1, 1), IN_RECT, BOUNDS, seed=0)
    with pytest.raises(ValueError):
        bound_inputs_from_scenario(scenario)


def test_bound_inputs_handoff_offsets_are_initial_coordinates():
    # delta_x/delta_y measure the gap between the last fast capture target and
    # the first slow target, both at their starting positions.
    pursuer = Point2(0.0, 0.0)
    evaders = (Point2(0.1, 0.0), Point2(0.9, 0.4))
    scenario = generate_random_scenario(2, Rectangle(1, 1), IN_RECT, BOUNDS, seed=0)
    scenario = type(scenario)(pursuer=pursuer, evaders=evaders, bounds=BOUNDS)
    inputs = bound_inputs_from_scenario(scenario, n_max=1, a_max=1.0, a_min=1.0)
    assert inputs.delta_x == pytest.approx(0.8, abs=1e-12)
    assert inputs.delta_y == pytest.approx(0.4, abs=1e-12)
