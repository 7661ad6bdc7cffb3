"""Monte Carlo experiment harness with deterministic seeding and CSV output.

Two experiment families:

* `run_experiment_fig3` benchmarks the two-pass assignment against the
  all-greedy assignment, the random-sampling baseline, and (for small n)
  exhaustive search over extreme speeds, across seeded random scenarios.
* `run_experiment_fig4` measures the realized capture-all time of the
  two-group pursuit (fast group first, then handoff to the slow group) for a
  uniformly random split size, against the closed-form ceiling evaluated at
  the optimal split.

Per-trial seeds are derived from ``(master_seed, n, trial)`` through
`numpy.random.SeedSequence`, so every row is reproducible in isolation and
adding new n values never perturbs existing rows.  Trials are independent
and could run concurrently; rows are produced in sorted (n, trial) order so
output is deterministic either way.
"""
from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass, field

import numpy as np

from .limits import bound_inputs_from_scenario, optimal_nmax, upper_bound_time
from .model import (
    ABOVE_RECT,
    IN_RECT,
    Point2,
    Rectangle,
    Scenario,
    SpeedBounds,
    generate_random_scenario,
    scenario_from_dict,
    scenario_to_dict,
)
from .search import random_sampling_baseline, brute_force_extremes
from .strategy import greedy_assignment, seq_grec
from .tours import tmhp_time

CSV_HEADER = ["n", "trial", "seed", "seq_grec", "greedy", "sampling",
              "brute_force", "wall_ms"]
BOUND_CSV_HEADER = ["n", "trial", "seed", "n_max", "realized", "bound"]
BRUTE_CUTOFF = 20


@dataclass(frozen=True)
class ExperimentConfig:
    """Knobs for one experiment run."""

    n_values: tuple[int, ...]
    trials: int = 50
    delta: float = 0.1
    rect: Rectangle = field(default_factory=lambda: Rectangle(1.0, 1.0))
    bounds: SpeedBounds = field(default_factory=lambda: SpeedBounds(0.2, 0.8))
    master_seed: int = 0
    output_path: str | None = None
    pursuer_mode: str = IN_RECT
    brute_cutoff: int = BRUTE_CUTOFF

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))

    def validate(self) -> None:
        if len(self.n_values) == 0:
            raise ValueError("n_values must be non-empty")
        if any(n < 1 for n in self.n_values):
            raise ValueError(f"evader counts must be >= 1, got {list(self.n_values)}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not (0.0 < self.delta < 1.0):
            raise ValueError(f"delta must lie in (0, 1), got {self.delta!r}")
        if self.pursuer_mode not in (IN_RECT, ABOVE_RECT):
            raise ValueError(f"unknown pursuer mode {self.pursuer_mode!r}")
        if self.brute_cutoff < 0:
            raise ValueError(f"brute_cutoff must be >= 0, got {self.brute_cutoff}")
        self.rect.require_valid()
        self.bounds.require_valid()


@dataclass(frozen=True)
class ExperimentRow:
    """One trial of the assignment benchmark.  ``brute_force_time`` is None
    above the brute-force cutoff; ``wall_ms`` is the trial's wall time."""

    n: int
    trial: int
    seed: int
    seq_grec_time: float
    greedy_time: float
    random_sampling_time: float
    brute_force_time: float | None
    wall_ms: float


@dataclass(frozen=True)
class BoundExperimentRow:
    """One trial of the two-group pursuit vs the closed-form ceiling."""

    n: int
    trial: int
    seed: int
    n_max: int
    realized_time: float
    bound_time: float


def trial_seeds(master_seed: int, n: int, trial: int) -> tuple[int, int]:
    """Derive (scenario_seed, sampling_seed) for one trial.

    Uses a splittable counter scheme so each (n, trial) cell is independent
    of every other and of the set of n values requested.
    """
    state = np.random.SeedSequence([master_seed, n, trial]).generate_state(2)
    return int(state[0]), int(state[1])


def run_experiment_fig3(config: ExperimentConfig, timer=time.perf_counter
                        ) -> tuple[list[ExperimentRow], dict[int, dict[str, float]]]:
    """Benchmark the assignment algorithms across seeded random scenarios.

    Returns ``(rows, means)`` where ``means[n]`` holds the per-n trial means
    for keys ``seq_grec``, ``greedy``, ``sampling`` and (below the cutoff)
    ``brute_force``.  ``timer`` is injectable so determinism tests can pin
    the wall-time column.
    """
    config.validate()
    rows: list[ExperimentRow] = []
    for n in config.n_values:
        for trial in range(config.trials):
            scenario_seed, sampling_seed = trial_seeds(config.master_seed, n, trial)
            t0 = timer()
            scenario = generate_random_scenario(
                n, config.rect, config.pursuer_mode, config.bounds, seed=scenario_seed)
            seq_time = seq_grec(scenario).trace.total_time
            greedy_time = greedy_assignment(scenario).trace.total_time
            sampling_time = random_sampling_baseline(
                scenario, config.delta, seed=sampling_seed).best_time
            brute_time = (brute_force_extremes(scenario).best_time
                          if n <= config.brute_cutoff else None)
            wall_ms = (timer() - t0) * 1000.0
            rows.append(ExperimentRow(
                n=n, trial=trial, seed=scenario_seed,
                seq_grec_time=seq_time, greedy_time=greedy_time,
                random_sampling_time=sampling_time, brute_force_time=brute_time,
                wall_ms=wall_ms))
    rows.sort(key=lambda r: (r.n, r.trial))

    means: dict[int, dict[str, float]] = {}
    for n in config.n_values:
        sub = [r for r in rows if r.n == n]
        entry = {
            "seq_grec": float(np.mean([r.seq_grec_time for r in sub])),
            "greedy": float(np.mean([r.greedy_time for r in sub])),
            "sampling": float(np.mean([r.random_sampling_time for r in sub])),
        }
        if n <= config.brute_cutoff:
            entry["brute_force"] = float(np.mean([r.brute_force_time for r in sub]))
        means[n] = entry
    return rows, means


def two_group_capture_time(scenario: Scenario, n_max: int) -> float:
    """Realized capture-all time when the first ``n_max`` evaders run at u_max
    (captured first, in minimum-time order) and the rest at u_min.

    The slow group's tour starts from the last fast capture point with the
    slow targets advanced by the fast phase's duration, so its first leg is
    exactly the Euclidean handoff intercept.
    """
    n = scenario.n
    if not (1 <= n_max <= n - 1):
        raise ValueError(f"n_max must lie in [1, n-1] = [1, {n - 1}], got {n_max}")
    u_min, u_max = scenario.bounds.u_min, scenario.bounds.u_max
    fast = list(scenario.evaders[:n_max])
    slow = list(scenario.evaders[n_max:])

    fast_tour = tmhp_time(scenario.pursuer, fast, u_max)
    t_fast = fast_tour.time
    last_fast = fast[fast_tour.order[-1]]
    handoff_start = Point2(last_fast.x, last_fast.y + u_max * t_fast)

    drifted = [Point2(p.x, p.y + u_min * t_fast) for p in slow]
    slow_tour = tmhp_time(handoff_start, drifted, u_min)
    return t_fast + slow_tour.time


def run_experiment_fig4(config: ExperimentConfig
                        ) -> tuple[list[BoundExperimentRow], dict[int, dict[str, float]]]:
    """Two-group pursuit with uniformly random split size vs the ceiling.

    Per trial: draw a scenario, sample n_max uniformly from [1, n-1], realize
    the two-group capture time, and evaluate the closed-form ceiling at the
    optimal split with rectangle-area group areas and scenario-driven handoff
    offsets.  Returns rows plus per-n summaries (mean/std of realized times
    and mean ceiling).
    """
    config.validate()
    if any(n < 2 for n in config.n_values):
        raise ValueError("two-group pursuit needs n >= 2 for every n value")
    rows: list[BoundExperimentRow] = []
    for n in config.n_values:
        k_star = optimal_nmax(n, config.bounds)
        for trial in range(config.trials):
            scenario_seed, sampling_seed = trial_seeds(config.master_seed, n, trial)
            scenario = generate_random_scenario(
                n, config.rect, config.pursuer_mode, config.bounds, seed=scenario_seed)
            rng = np.random.default_rng(sampling_seed)
            n_max = int(rng.integers(1, n))  # uniform over [1, n-1]
            realized = two_group_capture_time(scenario, n_max)
            inputs = bound_inputs_from_scenario(
                scenario, n_max=k_star,
                a_max=config.rect.area, a_min=config.rect.area)
            bound = upper_bound_time(inputs).total
            rows.append(BoundExperimentRow(
                n=n, trial=trial, seed=scenario_seed,
                n_max=n_max, realized_time=realized, bound_time=bound))
    rows.sort(key=lambda r: (r.n, r.trial))

    summary: dict[int, dict[str, float]] = {}
    for n in config.n_values:
        realized = np.array([r.realized_time for r in rows if r.n == n])
        bounds_arr = np.array([r.bound_time for r in rows if r.n == n])
        summary[n] = {
            "realized_mean": float(realized.mean()),
            "realized_std": float(realized.std()),
            "bound_mean": float(bounds_arr.mean()),
        }
    return rows, summary


def _format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)  # shortest representation that round-trips exactly
    return str(value)


def save_results(rows: list[ExperimentRow], path: str) -> None:
    """Write benchmark rows as CSV with the fixed header
    ``n,trial,seed,seq_grec,greedy,sampling,brute_force,wall_ms``."""
    try:
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for r in rows:
                writer.writerow([_format_value(v) for v in (
                    r.n, r.trial, r.seed, r.seq_grec_time, r.greedy_time,
                    r.random_sampling_time, r.brute_force_time, r.wall_ms)])
    except OSError as exc:
        raise OSError(f"could not write results to {path!r}: {exc}") from exc


def save_bound_results(rows: list[BoundExperimentRow], path: str) -> None:
    """Write two-group rows as CSV with header
    ``n,trial,seed,n_max,realized,bound``."""
    try:
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(BOUND_CSV_HEADER)
            for r in rows:
                writer.writerow([_format_value(v) for v in (
                    r.n, r.trial, r.seed, r.n_max, r.realized_time, r.bound_time)])
    except OSError as exc:
        raise OSError(f"could not write results to {path!r}: {exc}") from exc


def save_scenario(scenario: Scenario, path: str) -> None:
    """Write a scenario as JSON (see `model.scenario_to_dict` for the schema)."""
    try:
        with open(path, "w") as handle:
            json.dump(scenario_to_dict(scenario), handle, indent=2)
            handle.write("\n")
    except OSError as exc:
        raise OSError(f"could not write scenario to {path!r}: {exc}") from exc


def load_scenario(path: str) -> Scenario:
    """Read a scenario from JSON, naming the file and offending field in errors."""
    try:
        with open(path) as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise OSError(f"could not read scenario from {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"invalid JSON in {path!r} at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from exc
    try:
        return scenario_from_dict(payload)
    except ValueError as exc:
        raise ValueError(f"invalid scenario in {path!r}: {exc}") from exc


def load_experiment_config(path: str) -> ExperimentConfig:
    """Read an `ExperimentConfig` from JSON.

    Recognized fields: ``n_values`` (required), ``trials``, ``delta``,
    ``rect`` as ``{"l": ..., "h": ...}``, ``bounds`` as ``{"u_min": ...,
    "u_max": ...}``, ``master_seed``, ``output_path``, ``pursuer_mode``,
    ``brute_cutoff``.  Missing optional fields take the dataclass defaults.
    """
    try:
        with open(path) as handle:
            payload = json.load(handle)
    except OSError as exc:
        raise OSError(f"could not read config from {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"invalid JSON in {path!r} at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from exc
    if not isinstance(payload, dict):
        raise ValueError(f"invalid config in {path!r}: expected a JSON object")
    if "n_values" not in payload:
        raise ValueError(f'invalid config in {path!r}: missing field "n_values"')
    known = {"n_values", "trials", "delta", "rect", "bounds", "master_seed",
             "output_path", "pursuer_mode", "brute_cutoff"}
    unknown = sorted(set(payload) - known)
    if unknown:
        raise ValueError(f"invalid config in {path!r}: unknown fields {unknown}")
    kwargs: dict = {"n_values": tuple(payload["n_values"])}
    for name in ("trials", "delta", "master_seed", "output_path",
                 "pursuer_mode", "brute_cutoff"):
        if name in payload:
            kwargs[name] = payload[name]
    try:
        if "rect" in payload:
            kwargs["rect"] = Rectangle(float(payload["rect"]["l"]),
                                       float(payload["rect"]["h"]))
        if "bounds" in payload:
            kwargs["bounds"] = SpeedBounds(float(payload["bounds"]["u_min"]),
                                           float(payload["bounds"]["u_max"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"invalid config in {path!r}: {exc!r}") from exc
    config = ExperimentConfig(**kwargs)
    config.validate()
    return config
