"""Exhaustive and sampling baselines for the speed-assignment problem.

All three searches maximize the total capture time over candidate speed
vectors, evaluating candidates with a vectorized replica of the leg fold (one
numpy pass over a matrix of assignments, identical arithmetic to the scalar
engine).  Ties are broken toward the lexicographically smallest speed vector.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .intercept import total_intercept_time
from .model import Scenario, SpeedAssignment, require_valid_scenario

BRUTE_FORCE_LIMIT = 24
GRID_BUDGET = 10_000_000

METHOD_EXTREMES = "Extremes"
METHOD_GRID = "Grid"
METHOD_SAMPLING = "RandomSampling"


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a search: the best assignment found and how hard we looked.

    ``evaluations`` counts total-time computations actually performed;
    ``samples`` counts draws for the sampling baseline (0 for the others —
    with caching enabled, repeated draws are evaluated once).
    """

    best_assignment: SpeedAssignment
    best_time: float
    evaluations: int
    method: str
    samples: int = 0

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "speeds": list(self.best_assignment.speeds),
            "total": self.best_time,
            "evaluations": self.evaluations,
            "samples": self.samples,
        }


def _batch_total_times(scenario: Scenario, speeds: np.ndarray) -> np.ndarray:
    """Total capture times for a (M, n) matrix of speed assignments.

    Same fold and same arithmetic as `total_intercept_time`, vectorized over
    rows.  The pursuer's x after each leg equals the evader's x regardless of
    speeds, so only the y-position and the clock vary per row.
    """
    m = speeds.shape[0]
    px = scenario.pursuer.x
    py = np.full(m, scenario.pursuer.y)
    elapsed = np.zeros(m)
    for j, evader in enumerate(scenario.evaders):
        v = speeds[:, j]
        dx = abs(px - evader.x)
        y_align = evader.y + v * (elapsed + dx)
        above = y_align > py
        leg = dx + np.where(above,
                            (y_align - py) / (1.0 - v),
                            (py - y_align) / (1.0 + v))
        elapsed = elapsed + leg
        py = evader.y + v * elapsed
        px = evader.x
    return elapsed


def _lex_first_argmax(speeds: np.ndarray, totals: np.ndarray) -> int:
    """Index of the maximal total; among exact ties, the lexicographically
    smallest speed row."""
    best = np.flatnonzero(totals == totals.max())
    if len(best) == 1:
        return int(best[0])
    rows = speeds[best]
    order = np.lexsort(rows.T[::-1])
    return int(best[order[0]])


def _report(scenario: Scenario, speeds_row: np.ndarray, evaluations: int,
            method: str, samples: int = 0) -> SearchReport:
    assignment = SpeedAssignment(speeds=tuple(float(v) for v in speeds_row))
    trace = total_intercept_time(scenario, assignment)
    return SearchReport(best_assignment=assignment, best_time=trace.total_time,
                        evaluations=evaluations, method=method, samples=samples)


def brute_force_extremes(scenario: Scenario) -> SearchReport:
    """Exact maximum over the 2^n corner assignments {u_min, u_max}^n."""
    require_valid_scenario(scenario)
    n = len(scenario.evaders)
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"evader count {n} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}"
        )
    u = np.array([scenario.bounds.u_min, scenario.bounds.u_max])
    total = 1 << n
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)  # MSB first: index order is lex order
    chunk = 1 << 18
    best_time = -math.inf
    best_row: np.ndarray | None = None
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        bits = (idx[:, None] >> shifts[None, :]) & 1
        speeds = u[bits]
        totals = _batch_total_times(scenario, speeds)
        pick = int(np.argmax(totals))  # first max = lex smallest within the chunk
        if totals[pick] > best_time:
            best_time = float(totals[pick])
            best_row = speeds[pick]
    assert best_row is not None
    return _report(scenario, best_row, evaluations=total, method=METHOD_EXTREMES)


def grid_search(scenario: Scenario, points_per_evader: int) -> SearchReport:
    """Exact maximum over a uniform speed grid with p points per evader."""
    require_valid_scenario(scenario)
    n = len(scenario.evaders)
    p = points_per_evader
    if p < 2:
        raise ValueError(f"grid needs at least 2 points per evader, got {p}")
    total = p ** n
    if total > GRID_BUDGET:
        raise ValueError(
            f"grid of {p}^{n} = {total} assignments exceeds the budget {GRID_BUDGET}"
        )
    values = np.linspace(scenario.bounds.u_min, scenario.bounds.u_max, p)
    radix = (p ** np.arange(n - 1, -1, -1, dtype=np.int64))  # MSB first: lex order
    chunk = 1 << 18
    best_time = -math.inf
    best_row: np.ndarray | None = None
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // radix[None, :]) % p
        speeds = values[digits]
        totals = _batch_total_times(scenario, speeds)
        pick = int(np.argmax(totals))
        if totals[pick] > best_time:
            best_time = float(totals[pick])
            best_row = speeds[pick]
    assert best_row is not None
    return _report(scenario, best_row, evaluations=total, method=METHOD_GRID)


def sample_count(n: int, delta: float) -> int:
    """The number of uniform draws guaranteeing a small violation probability:
    ceil(10 * n * ln(2 / delta))."""
    if not 0.0 < delta < 1.0:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    return math.ceil(10.0 * n * math.log(2.0 / delta))


def random_sampling_baseline(
    scenario: Scenario,
    delta: float,
    seed: int,
    num_samples: int | None = None,
    cache: bool = True,
    continuous: bool = False,
) -> SearchReport:
    """Best of ceil(10 n ln(2/delta)) assignments drawn uniformly with
    replacement from the corner lattice {u_min, u_max}^n.

    ``cache`` evaluates each distinct draw once (the reported best is
    unchanged); ``continuous`` draws from the full interval [u_min, u_max]^n
    instead of the corners; ``num_samples`` overrides the sample count, and
    draws are a prefix-stable stream, so growing the count never loses
    earlier draws.  Deterministic under ``seed``.
    """
    require_valid_scenario(scenario)
    n = len(scenario.evaders)
    m = sample_count(n, delta) if num_samples is None else int(num_samples)
    if m < 1:
        raise ValueError(f"sample count must be >= 1, got {m}")
    rng = np.random.default_rng(seed)
    draws = rng.random((m, n))
    u_min, u_max = scenario.bounds.u_min, scenario.bounds.u_max
    if continuous:
        speeds = u_min + draws * (u_max - u_min)
    else:
        speeds = np.where(draws < 0.5, u_min, u_max)
    if cache:
        rows = np.unique(speeds, axis=0)
    else:
        rows = speeds
    totals = _batch_total_times(scenario, rows)
    pick = _lex_first_argmax(rows, totals)
    return _report(scenario, rows[pick], evaluations=rows.shape[0],
                   method=METHOD_SAMPLING, samples=m)
