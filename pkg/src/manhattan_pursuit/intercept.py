"""Exact intercept-time computation for the two-stage axis-aligned pursuit.

All closed forms are written in the "current state" formulation: the pursuer
sits at the previous intercept point with the running clock carried along,
and each evader's position is reconstructed from its initial coordinates plus
its speed times the clock.  This composes over a capture chain without
re-deriving cumulative sums, and is algebraically identical to writing every
leg in initial coordinates.

A time-stepped simulator (`step_simulate`) integrates the same motion rules
directly and serves as an independent numerical oracle for the closed forms.
"""
from __future__ import annotations

import math
from collections.abc import Sequence

from .model import (
    ABOVE,
    BELOW,
    ChainState,
    InterceptRecord,
    Point2,
    PursuitTrace,
    Scenario,
    SpeedAssignment,
)


def _require_speed(v: float) -> None:
    if not (isinstance(v, (int, float)) and 0.0 < v < 1.0 and math.isfinite(v)):
        raise ValueError(f"evader speed must lie strictly inside (0, 1), got {v!r}")


def _leg(px: float, py: float, elapsed: float, ex: float, ey: float, v: float):
    """One pursuit leg from pursuer (px, py) at clock `elapsed` to the evader
    whose initial position is (ex, ey) and speed is v.

    Returns ``(leg_time, branch, intercept_y)``.  The X stage takes exactly
    dx = |px - ex| time units; if the evader sits above the pursuer when the
    X stage completes (branch Above) the pursuer chases upward at closing
    speed 1 - v, otherwise (branch Below, ties included) they approach head-on
    at closing speed 1 + v.
    """
    dx = abs(px - ex)
    y_align = ey + v * (elapsed + dx)
    if y_align > py:
        leg_time = dx + (y_align - py) / (1.0 - v)
        branch = ABOVE
    else:
        leg_time = dx + (py - y_align) / (1.0 + v)
        branch = BELOW
    return leg_time, branch, ey + v * (elapsed + leg_time)


def intercept_time_first(pursuer: Point2, evader: Point2, v: float):
    """Leg time for the first capture in a chain.

    Returns ``(leg_time, branch, intercept_point)``.
    """
    _require_speed(v)
    leg_time, branch, iy = _leg(pursuer.x, pursuer.y, 0.0, evader.x, evader.y, v)
    return leg_time, branch, Point2(evader.x, iy)


def intercept_time_next(state: ChainState, evader_initial: Point2, v: float):
    """Leg time for the next capture given the chain state after the previous one.

    Returns ``(leg_time, branch, intercept_point, new_state)``.  With the
    initial chain state this coincides with `intercept_time_first`.
    """
    _require_speed(v)
    leg_time, branch, iy = _leg(
        state.position.x, state.position.y, state.elapsed,
        evader_initial.x, evader_initial.y, v,
    )
    point = Point2(evader_initial.x, iy)
    new_state = ChainState(
        position=point,
        elapsed=state.elapsed + leg_time,
        last_evader_speed=v,
        last_evader_initial=evader_initial,
    )
    return leg_time, branch, point, new_state


def total_intercept_time(scenario: Scenario,
                         speeds: SpeedAssignment | Sequence[float]) -> PursuitTrace:
    """Fold the leg formula over the evader list in capture order.

    ``speeds`` may be a `SpeedAssignment` or any sequence of per-evader speeds.
    """
    values = tuple(speeds.speeds if isinstance(speeds, SpeedAssignment) else speeds)
    if len(values) != len(scenario.evaders):
        raise ValueError(
            f"speed count {len(values)} does not match evader count "
            f"{len(scenario.evaders)}"
        )
    for v in values:
        _require_speed(v)
    state = ChainState.initial(scenario.pursuer)
    legs = []
    for evader, v in zip(scenario.evaders, values):
        leg_time, branch, point, state = intercept_time_next(state, evader, v)
        legs.append(InterceptRecord(
            leg_time=leg_time,
            cumulative_time=state.elapsed,
            intercept_point=point,
            branch=branch,
        ))
    return PursuitTrace(legs=tuple(legs), total_time=state.elapsed)


def euclidean_intercept_time(pursuer: Point2, evader: Point2, v: float) -> float:
    """Capture time when the pursuer instead runs straight at the moving evader.

    For a target at (x1, y1) drifting +Y at speed v and a unit-speed pursuer
    at (X, Y), the straight-line intercept takes

        (y1 - Y) * v / (1 - v^2) + sqrt((X - x1)^2 / (1 - v^2)
                                        + (Y - y1)^2 / (1 - v^2)^2).
    """
    _require_speed(v)
    q = 1.0 - v * v
    dx = pursuer.x - evader.x
    dy = pursuer.y - evader.y
    return (evader.y - pursuer.y) * v / q + math.sqrt(dx * dx / q + dy * dy / (q * q))


def step_simulate(scenario: Scenario, speeds: SpeedAssignment | Sequence[float],
                  dt: float) -> PursuitTrace:
    """Integrate the two-stage pursuit with a fixed time step.

    The pursuer moves parallel to X at unit speed until aligned with the
    current target, then parallel to Y until contact.  A capture event fires
    when the pursuer-evader distance drops below ``max(2 * dt, 1e-6)``; the
    recorded capture instant is then refined to the exact contact time of the
    piecewise-linear motion (stage transitions likewise use fractional final
    steps), so the reported times are step-size independent up to float
    rounding.  This routine never evaluates the closed-form leg expressions;
    it exists as an independent oracle for them.
    """
    if not (isinstance(dt, (int, float)) and dt > 0 and math.isfinite(dt)):
        raise ValueError(f"time step must be positive, got {dt!r}")
    values = tuple(speeds.speeds if isinstance(speeds, SpeedAssignment) else speeds)
    if len(values) != len(scenario.evaders):
        raise ValueError(
            f"speed count {len(values)} does not match evader count "
            f"{len(scenario.evaders)}"
        )
    for v in values:
        _require_speed(v)

    radius = max(2.0 * dt, 1e-6)
    px, py = scenario.pursuer.x, scenario.pursuer.y
    clock = 0.0
    legs = []
    for evader, v in zip(scenario.evaders, values):
        ex = evader.x
        ey = evader.y + v * clock  # current target height at leg start
        leg_start = clock
        captured = False

        # Stage 1: close the X gap at unit speed; the target is at fixed x,
        # so its distance to the pursuer is at least |px - ex| and a capture
        # can only trigger once that gap is inside the capture radius.
        while px != ex:
            step = min(dt, abs(ex - px))
            px = ex if step == abs(ex - px) else px + math.copysign(step, ex - px)
            ey += v * step
            clock += step
            if abs(px - ex) < radius and abs(py - ey) < radius \
                    and math.hypot(px - ex, py - ey) < radius:
                # Refine: finish the X stage, then close the residual Y gap.
                rest_x = abs(ex - px)
                gap = (ey + v * rest_x) - py
                rest_y = gap / (1.0 - v) if gap > 0 else -gap / (1.0 + v)
                clock += rest_x + rest_y
                ey += v * (rest_x + rest_y)
                px, py = ex, ey
                branch = ABOVE if gap > 0 else BELOW
                captured = True
                break

        # Stage 2: close the Y gap; the branch is which side of the pursuer
        # the target is on when alignment completes.
        if not captured:
            branch = ABOVE if ey > py else BELOW
            while True:
                gap = ey - py
                if abs(gap) < radius:
                    rest = gap / (1.0 - v) if gap > 0 else -gap / (1.0 + v)
                    clock += rest
                    ey += v * rest
                    py = ey
                    break
                py += math.copysign(dt, gap)
                ey += v * dt
                clock += dt

        legs.append(InterceptRecord(
            leg_time=clock - leg_start,
            cumulative_time=clock,
            intercept_point=Point2(ex, ey),
            branch=branch,
        ))
    return PursuitTrace(legs=tuple(legs), total_time=clock)
