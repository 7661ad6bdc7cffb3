"""Closed-form speed selection for the evaders.

Three layers, all driven by the derived constants V and U of the speed
bounds:

* `optimal_single` / `greedy_speed_k` — the per-evader rule that maximizes
  that evader's own leg time: pick u_max when the evader sits at or above a
  placement threshold, u_min below it.  At the threshold both choices give
  exactly the same leg time, so ties go to u_max.
* `cooperation_case` — the closed-form test for when slowing down (or
  speeding up) evader k-1 away from its greedy choice lengthens the TOTAL
  capture time by stretching the next leg more than it shortens its own.
* `seq_grec` — the two-pass assignment: start from all-greedy, then scan the
  pairs left to right, flipping an evader to its cooperative speed when the
  closed-form test fires, the previous pair did not already fire (a
  "sandwiched" evader stays greedy), and a whole-chain comparison confirms
  the flip does not lose time downstream.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .intercept import _leg, total_intercept_time
from .model import (
    COOPERATIVE,
    EPS,
    GREEDY,
    ChainState,
    Point2,
    PursuitTrace,
    Scenario,
    SpeedAssignment,
    SpeedBounds,
    require_valid_scenario,
)

CASE1 = "Case1"
CASE2 = "Case2"
CASE_NONE = "None"


@dataclass(frozen=True)
class CooperationCase:
    """Diagnostic record of the pairwise cooperation test for pair index k.

    The pair is (evader k-1, evader k) counting evaders from 1; in list
    coordinates those are ``evaders[k-2]`` and ``evaders[k-1]``.  The test
    first checks which placement band the leading evader's y falls in
    (``case1_low..case1_high`` or ``case2_low..case2_high``), then compares
    the follower gap ``gap = y_k - y_{k-1}`` against ``gap_threshold``:
    Case1 fires when the gap exceeds it, Case2 when the gap falls below it.
    ``gap_threshold`` is NaN when the leading evader sits in neither band.
    """

    pair_index: int
    case: str
    case1_low: float
    case1_high: float
    case2_low: float
    case2_high: float
    gap: float
    gap_threshold: float

    def to_dict(self) -> dict:
        return {
            "pair_index": self.pair_index,
            "case": self.case,
            "case1_interval": [self.case1_low, self.case1_high],
            "case2_interval": [self.case2_low, self.case2_high],
            "gap": self.gap,
            "gap_threshold": self.gap_threshold,
        }


@dataclass(frozen=True)
class PassEvent:
    """One cooperation decision taken while scanning a pass.

    ``action`` is "cooperate" (the evader flipped to its cooperative speed),
    "sandwich" (the pair fired but the previous pair had already fired, so
    the evader stays greedy), or "blocked" (the pair fired but the
    whole-chain comparison showed no improvement).
    """

    pass_index: int
    evader_index: int
    pair_index: int
    case: str
    action: str

    def to_dict(self) -> dict:
        return {
            "pass": self.pass_index,
            "evader": self.evader_index,
            "pair": self.pair_index,
            "case": self.case,
            "action": self.action,
        }


@dataclass(frozen=True)
class StrategyResult:
    """An assignment, its capture trace, and the per-pass decision log."""

    assignment: SpeedAssignment
    trace: PursuitTrace
    pass_log: tuple[PassEvent, ...]

    def to_dict(self) -> dict:
        return {
            "speeds": list(self.assignment.speeds),
            "labels": list(self.assignment.labels or ()),
            "trace": self.trace.to_dict(),
            "pass_log": [e.to_dict() for e in self.pass_log],
        }


def _greedy_from_state(px: float, py: float, elapsed: float,
                       ex: float, ey: float, bounds: SpeedBounds) -> float:
    """The leg-maximizing speed for an evader given the pursuer state.

    The placement threshold is ``py - V * (elapsed + dx)``: at or above it
    (within EPS) the slow escape upward wins, i.e. u_max; below it the evader
    gains more by meeting the pursuer late, i.e. u_min.  At the exact
    threshold both leg times coincide.
    """
    dx = abs(px - ex)
    threshold = py - bounds.V * (elapsed + dx)
    return bounds.u_max if ey >= threshold - EPS else bounds.u_min


def optimal_single(pursuer: Point2, evader: Point2, bounds: SpeedBounds) -> float:
    """The exact best speed for a lone evader (ties resolve to u_max)."""
    bounds.require_valid()
    return _greedy_from_state(pursuer.x, pursuer.y, 0.0, evader.x, evader.y, bounds)


def greedy_speed_k(state: ChainState, evader: Point2, bounds: SpeedBounds) -> float:
    """The leg-maximizing speed for the next evader in a chain.

    With the initial chain state this reduces to `optimal_single`.
    """
    bounds.require_valid()
    return _greedy_from_state(state.position.x, state.position.y, state.elapsed,
                              evader.x, evader.y, bounds)


def _greedy_fold(scenario: Scenario) -> list[float]:
    """Greedy speeds for every evader, folding the chain forward."""
    bounds = scenario.bounds
    px, py, elapsed = scenario.pursuer.x, scenario.pursuer.y, 0.0
    speeds: list[float] = []
    for evader in scenario.evaders:
        v = _greedy_from_state(px, py, elapsed, evader.x, evader.y, bounds)
        speeds.append(v)
        leg_time, _, iy = _leg(px, py, elapsed, evader.x, evader.y, v)
        px, py, elapsed = evader.x, iy, elapsed + leg_time
    return speeds


def _greedy_continue(px: float, py: float, elapsed: float,
                     evaders: tuple[Point2, ...], start: int,
                     bounds: SpeedBounds) -> float:
    """Total elapsed time after playing evaders[start:] greedily from a state."""
    for i in range(start, len(evaders)):
        ex, ey = evaders[i].x, evaders[i].y
        v = _greedy_from_state(px, py, elapsed, ex, ey, bounds)
        leg_time, _, iy = _leg(px, py, elapsed, ex, ey, v)
        px, py, elapsed = ex, iy, elapsed + leg_time
    return elapsed


def greedy_assignment(scenario: Scenario) -> StrategyResult:
    """Assign every evader its own leg-maximizing speed."""
    require_valid_scenario(scenario)
    speeds = _greedy_fold(scenario)
    assignment = SpeedAssignment(speeds=tuple(speeds),
                                 labels=tuple(GREEDY for _ in speeds))
    trace = total_intercept_time(scenario, assignment)
    return StrategyResult(assignment=assignment, trace=trace, pass_log=())


def _case_from_state(px: float, py: float, elapsed: float,
                     leader: Point2, follower: Point2,
                     bounds: SpeedBounds, pair_index: int) -> CooperationCase:
    """Evaluate the pairwise cooperation test from the pursuer state before
    the leading evader of the pair."""
    u_min, u_max, V, U = bounds.u_min, bounds.u_max, bounds.V, bounds.U
    x1, y1 = leader.x, leader.y
    dx1 = abs(px - x1)
    dx2 = abs(x1 - follower.x)
    reach = elapsed + dx1
    mid = py - V * reach        # the greedy placement threshold of the leader
    case1_high = py - u_min * reach
    case2_low = py - u_max * reach
    gap = follower.y - y1

    # Case 1: the leader's greedy choice is u_max; slowing to u_min stretches
    # the follower's leg when the follower sits far enough above the leader.
    if mid - EPS <= y1 <= case1_high - EPS:
        g1, _, _ = _leg(px, py, elapsed, x1, y1, u_max)
        rhs = -dx2 * V + (u_max - V) * (elapsed + g1) + U * (u_min * reach + y1 - py)
        case = CASE1 if gap > rhs + EPS else CASE_NONE
        return CooperationCase(pair_index, case, mid, case1_high,
                               case2_low, mid, gap, rhs)

    # Case 2: the leader's greedy choice is u_min; speeding to u_max stretches
    # the follower's leg when the follower sits far enough below the leader.
    if case2_low + EPS <= y1 <= mid + EPS:
        b1, _, _ = _leg(px, py, elapsed, x1, y1, u_min)
        rhs = -dx2 * V + (u_min - V) * (elapsed + b1) + U * (u_max * reach + y1 - py)
        case = CASE2 if gap < rhs - EPS else CASE_NONE
        return CooperationCase(pair_index, case, mid, case1_high,
                               case2_low, mid, gap, rhs)

    return CooperationCase(pair_index, CASE_NONE, mid, case1_high,
                           case2_low, mid, gap, math.nan)


def cooperation_case(scenario: Scenario, current: SpeedAssignment, k: int) -> CooperationCase:
    """Evaluate the cooperation test for pair index k (evaders k-1 and k,
    counting from 1).

    The pursuer state before the pair is recomputed by folding the chain over
    ``current`` speeds for the first k-2 evaders.
    """
    require_valid_scenario(scenario)
    n = len(scenario.evaders)
    if not 2 <= k <= n:
        raise ValueError(f"pair index must satisfy 2 <= k <= {n}, got {k}")
    if len(current.speeds) != n:
        raise ValueError("assignment length does not match evader count")
    px, py, elapsed = scenario.pursuer.x, scenario.pursuer.y, 0.0
    for i in range(k - 2):
        ex, ey = scenario.evaders[i].x, scenario.evaders[i].y
        leg_time, _, iy = _leg(px, py, elapsed, ex, ey, current.speeds[i])
        px, py, elapsed = ex, iy, elapsed + leg_time
    return _case_from_state(px, py, elapsed, scenario.evaders[k - 2],
                            scenario.evaders[k - 1], scenario.bounds, k)


def cooperative_speed(case: CooperationCase, bounds: SpeedBounds) -> float:
    """The speed a cooperating leader adopts: u_min for Case1, u_max for Case2."""
    if case.case == CASE1:
        return bounds.u_min
    if case.case == CASE2:
        return bounds.u_max
    raise ValueError("cooperative_speed requires a fired case, got None")


def seq_grec(scenario: Scenario, passes: int = 2) -> StrategyResult:
    """Two-pass sequential greedy-with-cooperation assignment.

    Start from the all-greedy assignment, then run ``passes`` identical
    scans.  Each scan walks the evaders in capture order, re-deriving every
    evader's greedy choice against the current upstream chain, and flips an
    evader to its cooperative speed when all three hold:

    * the pairwise closed-form test with its follower fires (Case1/Case2),
    * the previous pair did not fire in this scan (a sandwiched evader —
      one whose predecessor already cooperates with it — stays greedy), and
    * replaying the remaining chain greedily from both candidate speeds
      confirms the flip strictly increases the total capture time.

    The last check makes the returned total no worse than all-greedy on
    every input, and it never rejects a flip on two-evader instances, where
    the pairwise test alone is exact.  Decisions are determined by the
    already-scanned prefix, so the second pass is a deterministic replay of
    the first; it is kept (and logged) as a self-check.
    """
    require_valid_scenario(scenario)
    if passes < 1:
        raise ValueError(f"pass count must be >= 1, got {passes}")
    bounds = scenario.bounds
    evaders = scenario.evaders
    n = len(evaders)
    speeds = _greedy_fold(scenario)
    labels = [GREEDY] * n
    log: list[PassEvent] = []

    for pass_index in range(passes):
        px, py, elapsed = scenario.pursuer.x, scenario.pursuer.y, 0.0
        prev_fired = False
        for i in range(n):
            ex, ey = evaders[i].x, evaders[i].y
            greedy_v = _greedy_from_state(px, py, elapsed, ex, ey, bounds)
            fired = False
            case = None
            if i < n - 1:
                case = _case_from_state(px, py, elapsed, evaders[i], evaders[i + 1],
                                        bounds, pair_index=i + 2)
            if case is not None and case.case != CASE_NONE:
                if prev_fired:
                    log.append(PassEvent(pass_index, i, i + 2, case.case, "sandwich"))
                else:
                    coop_v = bounds.u_min if case.case == CASE1 else bounds.u_max
                    t_c, _, cy = _leg(px, py, elapsed, ex, ey, coop_v)
                    total_coop = _greedy_continue(ex, cy, elapsed + t_c,
                                                  evaders, i + 1, bounds)
                    t_g, _, gy = _leg(px, py, elapsed, ex, ey, greedy_v)
                    total_greedy = _greedy_continue(ex, gy, elapsed + t_g,
                                                    evaders, i + 1, bounds)
                    if total_coop > total_greedy:
                        speeds[i] = coop_v
                        labels[i] = COOPERATIVE
                        fired = True
                        log.append(PassEvent(pass_index, i, i + 2, case.case, "cooperate"))
                    else:
                        log.append(PassEvent(pass_index, i, i + 2, case.case, "blocked"))
            if not fired:
                speeds[i] = greedy_v
                labels[i] = GREEDY
            prev_fired = fired
            leg_time, _, iy = _leg(px, py, elapsed, ex, ey, speeds[i])
            px, py, elapsed = ex, iy, elapsed + leg_time

    assignment = SpeedAssignment(speeds=tuple(speeds), labels=tuple(labels))
    trace = total_intercept_time(scenario, assignment)
    return StrategyResult(assignment=assignment, trace=trace, pass_log=tuple(log))
