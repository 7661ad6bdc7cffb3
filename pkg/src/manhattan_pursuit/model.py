"""Domain types, scenario validation, and seeded random scenario generation.

The game instance is a single pursuer of unit speed against an ordered list
of evaders.  Each evader moves in the +Y direction at a constant speed chosen
from a closed interval [u_min, u_max] with 0 < u_min < u_max < 1.  The
pursuer captures the evaders in list order using a two-stage axis-aligned
pursuit: move parallel to the X axis until aligned with the target, then
parallel to the Y axis until contact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Strategy labels for assigned speeds.
GREEDY = "Greedy"
COOPERATIVE = "Cooperative"

# Branches of the closed-form leg time (which side of the pursuer the evader
# is on when the pursuer reaches X alignment).
ABOVE = "Above"
BELOW = "Below"

# Pursuer placement modes for random scenario generation.
IN_RECT = "InRect"
ABOVE_RECT = "AboveRect"

# Absolute tolerance for geometric threshold comparisons.  Ties resolve to
# the ">=" branch of each decision rule, so a value within EPS below a
# threshold is treated as sitting on it.
EPS = 1e-9


@dataclass(frozen=True)
class Point2:
    """A point in the plane."""

    x: float
    y: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


@dataclass(frozen=True)
class Rectangle:
    """An axis-aligned l-by-h rectangle anchored at the origin."""

    l: float
    h: float

    @property
    def area(self) -> float:
        return self.l * self.h

    def require_valid(self) -> None:
        if not (self.l > 0 and self.h > 0):
            raise ValueError(f"rectangle sides must be positive, got l={self.l}, h={self.h}")


@dataclass(frozen=True)
class SpeedBounds:
    """The admissible evader speed interval [u_min, u_max].

    Two derived constants appear throughout the threshold formulas:

    * ``V = (u_min + u_max) / (2 + u_min - u_max)`` — the critical slope that
      separates "fast is better" from "slow is better" placements; it always
      lies strictly between u_min and u_max.
    * ``U = 2 / (2 + u_min - u_max)`` — the coupling factor between an
      evader's placement and the next leg's duration; it always lies in
      (1, 2).
    """

    u_min: float
    u_max: float

    @property
    def V(self) -> float:
        return (self.u_min + self.u_max) / (2.0 + self.u_min - self.u_max)

    @property
    def U(self) -> float:
        return 2.0 / (2.0 + self.u_min - self.u_max)

    def violations(self) -> list[str]:
        """Names of the invariants this pair of bounds violates (empty if valid)."""
        out = []
        if not (math.isfinite(self.u_min) and math.isfinite(self.u_max)):
            out.append("speed bounds finite")
            return out
        if not self.u_min > 0:
            out.append("u_min > 0")
        if not self.u_min < self.u_max:
            out.append("u_min < u_max")
        if not self.u_max < 1:
            out.append("u_max < 1")
        if not out and not (self.u_min < self.V < self.u_max):
            out.append("u_min < V < u_max")
        return out

    def require_valid(self) -> None:
        bad = self.violations()
        if bad:
            raise ValueError("invalid speed bounds: " + "; ".join(bad))


@dataclass(frozen=True)
class Scenario:
    """A complete game instance.

    ``evaders`` is ordered: the pursuer captures them in list order.
    """

    pursuer: Point2
    evaders: tuple[Point2, ...]
    bounds: SpeedBounds

    def __post_init__(self) -> None:
        object.__setattr__(self, "evaders", tuple(self.evaders))

    @property
    def n(self) -> int:
        return len(self.evaders)


@dataclass(frozen=True)
class SpeedAssignment:
    """Chosen speeds (and optional strategy labels) for every evader in order."""

    speeds: tuple[float, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "speeds", tuple(float(v) for v in self.speeds))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(self.speeds):
                raise ValueError("labels and speeds must have equal length")


@dataclass(frozen=True)
class InterceptRecord:
    """One captured evader: leg duration, running clock, contact point, branch."""

    leg_time: float
    cumulative_time: float
    intercept_point: Point2
    branch: str


@dataclass(frozen=True)
class PursuitTrace:
    """Per-evader intercept records plus the total capture time."""

    legs: tuple[InterceptRecord, ...]
    total_time: float

    def to_dict(self) -> dict:
        return {
            "legs": [
                {
                    "t": leg.leg_time,
                    "cum": leg.cumulative_time,
                    "x": leg.intercept_point.x,
                    "y": leg.intercept_point.y,
                    "branch": leg.branch,
                }
                for leg in self.legs
            ],
            "total": self.total_time,
        }


@dataclass(frozen=True)
class ChainState:
    """Pursuer state between legs of a capture chain.

    ``position`` is the pursuer location (the previous intercept point),
    ``elapsed`` the running clock.  The previous target's chosen speed and
    initial location are carried for diagnostics; for the initial state they
    are 0 and the pursuer start.
    """

    position: Point2
    elapsed: float
    last_evader_speed: float
    last_evader_initial: Point2

    @classmethod
    def initial(cls, pursuer: Point2) -> "ChainState":
        return cls(position=pursuer, elapsed=0.0, last_evader_speed=0.0,
                   last_evader_initial=pursuer)


def validate_scenario(scenario: Scenario) -> list[str]:
    """Check every type invariant; return the names of violated ones.

    An empty list means the scenario is valid.  Violations are data, not
    errors: callers that require validity should raise on a non-empty result.
    """
    out: list[str] = []
    if not scenario.pursuer.is_finite():
        out.append("coordinates finite")
    elif any(not e.is_finite() for e in scenario.evaders):
        out.append("coordinates finite")
    if len(scenario.evaders) == 0:
        out.append("evader list non-empty")
    out.extend(scenario.bounds.violations())
    return out


def require_valid_scenario(scenario: Scenario) -> None:
    bad = validate_scenario(scenario)
    if bad:
        raise ValueError("invalid scenario: " + "; ".join(bad))


def generate_random_scenario(
    n: int,
    rect: Rectangle,
    pursuer_mode: str,
    bounds: SpeedBounds,
    seed: int,
    sort_by_x: bool = False,
) -> Scenario:
    """Draw a scenario with ``n`` evaders i.i.d. uniform in the rectangle.

    The pursuer is uniform inside the rectangle (``IN_RECT``) or at uniform x
    on the top edge y = h (``ABOVE_RECT``).  Identical arguments reproduce an
    identical scenario bit for bit.  ``sort_by_x`` optionally pre-sorts the
    evaders by x-coordinate to fix the capture order geometrically; it is off
    by default because the capture order is part of the problem input.
    """
    if n < 1:
        raise ValueError(f"evader count must be >= 1, got {n}")
    rect.require_valid()
    bounds.require_valid()
    if pursuer_mode not in (IN_RECT, ABOVE_RECT):
        raise ValueError(f"unknown pursuer mode {pursuer_mode!r}")
    rng = np.random.default_rng(seed)
    xs = rng.uniform(0.0, rect.l, size=n)
    ys = rng.uniform(0.0, rect.h, size=n)
    px = float(rng.uniform(0.0, rect.l))
    py = float(rng.uniform(0.0, rect.h)) if pursuer_mode == IN_RECT else float(rect.h)
    evaders = [Point2(float(x), float(y)) for x, y in zip(xs, ys)]
    if sort_by_x:
        evaders.sort(key=lambda p: (p.x, p.y))
    return Scenario(pursuer=Point2(px, py), evaders=tuple(evaders), bounds=bounds)


def scenario_to_dict(scenario: Scenario) -> dict:
    """The JSON-serializable form of a scenario.

    Schema: ``{"pursuer": [x, y], "evaders": [[x, y], ...], "u_min": r,
    "u_max": r}``; the order of the "evaders" array is the capture order.
    """
    return {
        "pursuer": [scenario.pursuer.x, scenario.pursuer.y],
        "evaders": [[e.x, e.y] for e in scenario.evaders],
        "u_min": scenario.bounds.u_min,
        "u_max": scenario.bounds.u_max,
    }


def _as_point(obj, field_name: str) -> Point2:
    if (not isinstance(obj, (list, tuple)) or len(obj) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in obj)):
        raise ValueError(f'field "{field_name}" must be a pair of numbers, got {obj!r}')
    return Point2(float(obj[0]), float(obj[1]))


def scenario_from_dict(data: dict) -> Scenario:
    """Parse the scenario JSON schema; raise ValueError naming any bad field."""
    if not isinstance(data, dict):
        raise ValueError(f"scenario must be a JSON object, got {type(data).__name__}")
    for key in ("pursuer", "evaders", "u_min", "u_max"):
        if key not in data:
            raise ValueError(f'missing field "{key}"')
    pursuer = _as_point(data["pursuer"], "pursuer")
    raw_evaders = data["evaders"]
    if not isinstance(raw_evaders, list) or len(raw_evaders) == 0:
        raise ValueError('field "evaders" must be a non-empty array')
    evaders = tuple(_as_point(e, f"evaders[{i}]") for i, e in enumerate(raw_evaders))
    for key in ("u_min", "u_max"):
        if not isinstance(data[key], (int, float)) or isinstance(data[key], bool):
            raise ValueError(f'field "{key}" must be a number')
    bounds = SpeedBounds(float(data["u_min"]), float(data["u_max"]))
    return Scenario(pursuer=pursuer, evaders=evaders, bounds=bounds)
