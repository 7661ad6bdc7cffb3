"""Closed-form ceilings on total capture time for two-speed evader splits.

A population of n evaders is split into a fast group (n_max evaders that
will run at u_max, scattered over area a_max) and a slow group (the
remaining n - n_max at u_min, over area a_min).  The pursuer clears the
fast group first, hands off, then clears the slow group.  Each group phase
is bounded by the area-based path-length ceiling through the conversion map
(see `tours`), and the handoff is a single straight-line intercept over the
offset (delta_x, delta_y) between the last fast target and the first slow
target, with the slow target drifting during the entire fast phase.

`optimal_nmax` gives the split size minimizing the resulting total in the
large-n regime, and `bound_sweep` evaluates the bound at every split size.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Point2, Scenario, SpeedBounds
from .tours import tmhp_time

FIRST_GROUP_FAST = "u_max"
FIRST_GROUP_SLOW = "u_min"


@dataclass(frozen=True)
class BoundInputs:
    """Everything the closed-form ceiling needs: population split, group
    areas, handoff offset, and the speed bounds."""

    n: int
    n_max: int
    a_max: float
    a_min: float
    delta_x: float
    delta_y: float
    bounds: SpeedBounds

    def validate(self) -> None:
        self.bounds.require_valid()
        if self.n < 2:
            raise ValueError(f"need at least two evaders to split, got n={self.n}")
        if not (1 <= self.n_max <= self.n - 1):
            raise ValueError(
                f"n_max must lie in [1, n-1] = [1, {self.n - 1}], got {self.n_max}")
        for name, value in (("a_max", self.a_max), ("a_min", self.a_min)):
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value >= 0.0):
                raise ValueError(f"{name} must be finite and >= 0, got {value!r}")
        for name, value in (("delta_x", self.delta_x), ("delta_y", self.delta_y)):
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class BoundBreakdown:
    """The three phases of the ceiling and their sum."""

    t_nmax: float
    t_handoff: float
    t_nmin: float
    total: float

    def to_dict(self) -> dict:
        return {
            "t_nmax": self.t_nmax,
            "t_handoff": self.t_handoff,
            "t_nmin": self.t_nmin,
            "total": self.total,
        }


def _phase_times(count1: int, area1: float, v1: float,
                 count2: int, area2: float, v2: float,
                 delta_x: float, delta_y: float) -> BoundBreakdown:
    """Bound for clearing group 1 (count1 targets at speed v1) first, handing
    off over (delta_x, delta_y), then clearing group 2.  The handoff leg is
    the first capture of group 2, so the second area term covers count2 - 1."""
    q1 = 1.0 - v1 * v1
    q2 = 1.0 - v2 * v2
    t1 = math.sqrt(2.0 * area1 * count1 / q1 ** 1.5)
    z = delta_y + (v2 - v1) * t1
    t_handoff = v2 * z / q2 + math.sqrt(delta_x ** 2 / q2 + z ** 2 / q2 ** 2)
    t2 = math.sqrt(2.0 * area2 * (count2 - 1) / q2 ** 1.5)
    return BoundBreakdown(t_nmax=t1, t_handoff=t_handoff, t_nmin=t2,
                          total=t1 + t_handoff + t2)


def upper_bound_time(inputs: BoundInputs, first_group: str = FIRST_GROUP_FAST) -> BoundBreakdown:
    """Closed-form ceiling on total capture time for the given split.

    ``first_group`` selects which group the pursuer clears first: ``"u_max"``
    (the default, fast group first) or ``"u_min"`` (slow group first, used to
    compare split orderings).  Field names in the returned breakdown always
    refer to the first-phase / handoff / second-phase structure.
    """
    inputs.validate()
    b = inputs.bounds
    n_min = inputs.n - inputs.n_max
    if first_group == FIRST_GROUP_FAST:
        return _phase_times(inputs.n_max, inputs.a_max, b.u_max,
                            n_min, inputs.a_min, b.u_min,
                            inputs.delta_x, inputs.delta_y)
    if first_group == FIRST_GROUP_SLOW:
        return _phase_times(n_min, inputs.a_min, b.u_min,
                            inputs.n_max, inputs.a_max, b.u_max,
                            inputs.delta_x, inputs.delta_y)
    raise ValueError(f"first_group must be 'u_max' or 'u_min', got {first_group!r}")


def optimal_nmax(n: int, bounds: SpeedBounds) -> int:
    """Split size minimizing the large-n leading terms of the ceiling:
    round(w^2 n / (sqrt(1-u_min^2) (1-u_max^2)^{3/2} + w^2)) with
    w = u_max - u_min, clamped to [1, n-1]."""
    bounds.require_valid()
    if n < 2:
        raise ValueError(f"need at least two evaders to split, got n={n}")
    w2 = (bounds.u_max - bounds.u_min) ** 2
    denom = math.sqrt(1.0 - bounds.u_min ** 2) * (1.0 - bounds.u_max ** 2) ** 1.5 + w2
    k = math.floor(w2 * n / denom + 0.5)
    return int(min(max(k, 1), n - 1))


def bound_sweep(n: int, bounds: SpeedBounds, a_max: float = 1.0, a_min: float = 1.0,
                delta_x: float = 0.0, delta_y: float = 0.0) -> list[BoundBreakdown]:
    """Evaluate the ceiling at every split size n_max = 1 .. n-1 (in order)."""
    return [
        upper_bound_time(BoundInputs(n=n, n_max=k, a_max=a_max, a_min=a_min,
                                     delta_x=delta_x, delta_y=delta_y, bounds=bounds))
        for k in range(1, n)
    ]


def bound_inputs_from_scenario(scenario: Scenario, n_max: int | None = None,
                               a_max: float | None = None,
                               a_min: float | None = None) -> BoundInputs:
    """Derive ceiling inputs from a concrete scenario.

    The first ``n_max`` evaders (list order) form the fast group, the rest
    the slow group; ``n_max`` defaults to `optimal_nmax`.  The handoff offset
    is measured between the initial positions of the last fast-group target
    captured (under the minimum-time capture order from the pursuer) and the
    first slow-group target captured (under the capture order recomputed
    from the fast phase's final position, with slow targets advanced by the
    fast phase's duration).  Group areas default to the bounding box of the
    whole evader set, for both groups.
    """
    scenario.bounds.require_valid()
    n = scenario.n
    if n < 2:
        raise ValueError(f"need at least two evaders to split, got n={n}")
    k = optimal_nmax(n, scenario.bounds) if n_max is None else n_max
    if not (1 <= k <= n - 1):
        raise ValueError(f"n_max must lie in [1, n-1] = [1, {n - 1}], got {k}")
    if a_max is None or a_min is None:
        xs = [e.x for e in scenario.evaders]
        ys = [e.y for e in scenario.evaders]
        box = (max(xs) - min(xs)) * (max(ys) - min(ys))
        a_max = box if a_max is None else a_max
        a_min = box if a_min is None else a_min

    fast = list(scenario.evaders[:k])
    slow = list(scenario.evaders[k:])
    u_min, u_max = scenario.bounds.u_min, scenario.bounds.u_max

    fast_tour = tmhp_time(scenario.pursuer, fast, u_max)
    last_fast = fast[fast_tour.order[-1]]
    t_fast = fast_tour.time
    handoff_start = Point2(last_fast.x, last_fast.y + u_max * t_fast)

    drifted = [Point2(p.x, p.y + u_min * t_fast) for p in slow]
    slow_tour = tmhp_time(handoff_start, drifted, u_min)
    first_slow = slow[slow_tour.order[0]]

    return BoundInputs(n=n, n_max=k, a_max=float(a_max), a_min=float(a_min),
                       delta_x=abs(first_slow.x - last_fast.x),
                       delta_y=first_slow.y - last_fast.y,
                       bounds=scenario.bounds)
