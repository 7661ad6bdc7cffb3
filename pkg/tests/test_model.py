"""Tests for the core geometry, speed-bound, and scenario types."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from manhattan_pursuit import (
    ABOVE_RECT,
    IN_RECT,
    Point2,
    Rectangle,
    Scenario,
    SpeedAssignment,
    SpeedBounds,
    generate_random_scenario,
    require_valid_scenario,
    scenario_from_dict,
    scenario_to_dict,
    validate_scenario,
)


def test_point_basics():
    p = Point2(1.5, -2.0)
    assert p.as_tuple() == (1.5, -2.0)
    assert p.is_finite()
    assert not Point2(math.nan, 0.0).is_finite()
    assert not Point2(0.0, math.inf).is_finite()


def test_rectangle_area_and_validation():
    assert Rectangle(2.0, 3.0).area == 6.0
    Rectangle(1.0, 1.0).require_valid()
    with pytest.raises(ValueError):
        Rectangle(0.0, 1.0).require_valid()
    with pytest.raises(ValueError):
        Rectangle(1.0, -2.0).require_valid()


def test_derived_constants_reference_values():
    b = SpeedBounds(0.2, 0.8)
    assert b.V == pytest.approx(5.0 / 7.0, abs=1e-12)
    assert b.U == pytest.approx(10.0 / 7.0, abs=1e-12)


def test_derived_constant_between_bounds():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        u_min = float(rng.uniform(1e-3, 0.98))
        u_max = float(rng.uniform(u_min + 1e-3, 0.999))
        b = SpeedBounds(u_min, u_max)
        assert u_min < b.V < u_max
        assert 1.0 < b.U < 2.0


@pytest.mark.parametrize(
    "u_min, u_max, expected_violation",
    [
        (0.8, 0.2, "u_min < u_max"),
        (0.5, 0.5, "u_min < u_max"),
        (0.2, 1.0, "u_max < 1"),
        (0.0, 0.5, "u_min > 0"),
        (-0.1, 0.5, "u_min > 0"),
    ],
)
def test_speed_bounds_violations(u_min, u_max, expected_violation):
    assert expected_violation in SpeedBounds(u_min, u_max).violations()


def test_speed_bounds_valid_has_no_violations():
    assert SpeedBounds(0.2, 0.8).violations() == []
    SpeedBounds(0.2, 0.8).require_valid()


def test_speed_bounds_require_valid_message_lists_violations():
    with pytest.raises(ValueError, match="u_min < u_max"):
        SpeedBounds(0.8, 0.2).require_valid()
    with pytest.raises(ValueError, match="u_max < 1"):
        SpeedBounds(0.2, 1.5).require_valid()


def test_scenario_validation():
    good = Scenario(
        pursuer=Point2(0.0, 0.0),
        evaders=(Point2(1.0, -0.5), Point2(2.0, 0.0)),
        bounds=SpeedBounds(0.2, 0.8),
    )
    assert validate_scenario(good) == []
    require_valid_scenario(good)

    no_evaders = Scenario(Point2(0, 0), (), SpeedBounds(0.2, 0.8))
    assert "evader list non-empty" in validate_scenario(no_evaders)

    bad_coord = Scenario(Point2(0, math.nan), (Point2(1, 0),), SpeedBounds(0.2, 0.8))
    assert "coordinates finite" in validate_scenario(bad_coord)

    bad_bounds = Scenario(Point2(0, 0), (Point2(1, 0),), SpeedBounds(0.9, 0.1))
    with pytest.raises(ValueError, match="u_min < u_max"):
        require_valid_scenario(bad_bounds)


def test_speed_assignment_label_length_check():
    SpeedAssignment(speeds=(0.2, 0.8), labels=("Cooperative", "Greedy"))
    with pytest.raises(ValueError):
        SpeedAssignment(speeds=(0.2, 0.8), labels=("Greedy",))


def test_generation_is_deterministic():
    rect = Rectangle(1.0, 1.0)
    bounds = SpeedBounds(0.2, 0.8)
    a = generate_random_scenario(5, rect, IN_RECT, bounds, seed=42)
    b = generate_random_scenario(5, rect, IN_RECT, bounds, seed=42)
    assert a == b
    c = generate_random_scenario(5, rect, IN_RECT, bounds, seed=43)
    assert a != c


def test_generation_containment_and_modes():
    rect = Rectangle(10.0, 4.0)
    bounds = SpeedBounds(0.3, 0.6)
    s = generate_random_scenario(100, rect, IN_RECT, bounds, seed=1)
    assert s.n == 100
    assert s.bounds == bounds
    for p in (s.pursuer, *s.evaders):
        assert 0.0 <= p.x <= rect.l
        assert 0.0 <= p.y <= rect.h

    top = generate_random_scenario(100, rect, ABOVE_RECT, bounds, seed=1)
    assert top.pursuer.y == rect.h
    assert 0.0 <= top.pursuer.x <= rect.l


def test_generation_sort_by_x():
    s = generate_random_scenario(
        50, Rectangle(1, 1), IN_RECT, SpeedBounds(0.2, 0.8), seed=9, sort_by_x=True
    )
    xs = [e.x for e in s.evaders]
    assert xs == sorted(xs)


def test_generation_rejects_bad_arguments():
    rect = Rectangle(1.0, 1.0)
    bounds = SpeedBounds(0.2, 0.8)
    with pytest.raises(ValueError):
        generate_random_scenario(0, rect, IN_RECT, bounds, seed=0)
    with pytest.raises(ValueError):
        generate_random_scenario(3, Rectangle(-1.0, 1.0), IN_RECT, bounds, seed=0)
    with pytest.raises(ValueError):
        generate_random_scenario(3, rect, "Sideways", bounds, seed=0)
    with pytest.raises(ValueError):
        generate_random_scenario(3, rect, IN_RECT, SpeedBounds(0.8, 0.2), seed=0)


def test_scenario_dict_round_trip():
    s = generate_random_scenario(
        7, Rectangle(2.0, 3.0), ABOVE_RECT, SpeedBounds(0.25, 0.75), seed=5
    )
    data = scenario_to_dict(s)
    assert set(data) == {"pursuer", "evaders", "u_min", "u_max"}
    assert data["pursuer"] == [s.pursuer.x, s.pursuer.y]
    assert json.loads(json.dumps(data)) == data  # JSON-serializable as-is
    assert scenario_from_dict(data) == s


@pytest.mark.parametrize("missing", ["pursuer", "evaders", "u_min", "u_max"])
def test_scenario_from_dict_names_missing_field(missing):
    data = scenario_to_dict(
        Scenario(Point2(0, 0), (Point2(1, 0),), SpeedBounds(0.2, 0.8))
    )
    del data[missing]
    with pytest.raises(ValueError, match=missing):
        scenario_from_dict(data)


def test_scenario_from_dict_rejects_malformed_fields():
    base = {"pursuer": [0, 0], "evaders": [[1, 0]], "u_min": 0.2, "u_max": 0.8}
    with pytest.raises(ValueError, match="pursuer"):
        scenario_from_dict({**base, "pursuer": [0]})
    with pytest.raises(ValueError, match="evaders"):
        scenario_from_dict({**base, "evaders": []})
    with pytest.raises(ValueError, match="u_min"):
        scenario_from_dict({**base, "u_min": "fast"})
    with pytest.raises(ValueError):
        scenario_from_dict([1, 2, 3])


@settings(max_examples=200, deadline=None)
@given(
    u_min=st.floats(min_value=1e-3, max_value=0.97),
    gap=st.floats(min_value=1e-3, max_value=0.5),
)
def test_v_betweenness_property(u_min, gap):
    u_max = min(u_min + gap, 0.999)
    b = SpeedBounds(u_min, u_max)
    assert u_min < b.V < u_max
