"""Shortest visiting paths through static and drifting point sets.

`emhp_path` computes the minimum-length path from a fixed start through m
points (exact subset dynamic programming up to a size threshold, nearest
neighbor plus 2-opt beyond it).  `tmhp_time` reduces the moving-target
variant — all targets drifting +Y at a common speed v — to the static one
through the coordinate change

    C_v(x, y) = (x / sqrt(1 - v^2), y / (1 - v^2)),

under which the capture time of a chain of straight-line intercepts equals
the path length between the converted points plus a drift term
``v * (y_final - y_start) / (1 - v^2)`` in original coordinates.
`fews_bound` is the classic area-based ceiling on such path lengths.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import Point2, Rectangle

EXACT_LIMIT = 12
TWO_OPT_PASS_FACTOR = 50


@dataclass(frozen=True)
class PathResult:
    """A visiting order (indices into the input points), its length, and
    whether it came from the exact solver."""

    order: tuple[int, ...]
    length: float
    exact: bool


@dataclass(frozen=True)
class TourResult:
    """A capture order over drifting targets, the total capture time, and
    whether the underlying path was solved exactly."""

    order: tuple[int, ...]
    time: float
    exact: bool


def convert_point(p: Point2, v: float) -> Point2:
    """Apply the coordinate change that makes drifting targets stationary."""
    if not (isinstance(v, (int, float)) and 0.0 <= v < 1.0 and math.isfinite(v)):
        raise ValueError(f"target speed must lie in [0, 1), got {v!r}")
    q = 1.0 - v * v
    return Point2(p.x / math.sqrt(q), p.y / q)


def fews_bound(rect: Rectangle, m: int) -> float:
    """Area-based ceiling on the length of a path through m points in an
    l-by-h rectangle with endpoints on opposite edges: sqrt(2*l*h*m) + h + 2.5."""
    rect.require_valid()
    if m < 1:
        raise ValueError(f"point count must be >= 1, got {m}")
    return math.sqrt(2.0 * rect.l * rect.h * m) + rect.h + 2.5


def _distance_matrix(coords: np.ndarray) -> np.ndarray:
    diff = coords[:, None, :] - coords[None, :, :]
    return np.hypot(diff[..., 0], diff[..., 1])


def _exact_path(start: np.ndarray, pts: np.ndarray,
                end: np.ndarray | None) -> tuple[list[int], float]:
    """Held-Karp subset DP for the shortest path start -> all points (-> end)."""
    m = len(pts)
    d_start = np.hypot(pts[:, 0] - start[0], pts[:, 1] - start[1])
    dist = _distance_matrix(pts)
    full = (1 << m) - 1
    dp = np.full((full + 1, m), np.inf)
    parent = np.full((full + 1, m), -1, dtype=np.int32)
    for j in range(m):
        dp[1 << j, j] = d_start[j]
    for mask in range(1, full + 1):
        row = dp[mask]
        if not np.isfinite(row).any():
            continue
        rest = (~mask) & full
        sub = rest
        while sub:
            j = (sub & -sub).bit_length() - 1
            sub &= sub - 1
            cand = row + dist[:, j]
            i = int(np.argmin(cand))
            new_mask = mask | (1 << j)
            if cand[i] < dp[new_mask, j]:
                dp[new_mask, j] = cand[i]
                parent[new_mask, j] = i
    final = dp[full].copy()
    if end is not None:
        final = final + np.hypot(pts[:, 0] - end[0], pts[:, 1] - end[1])
    j = int(np.argmin(final))
    length = float(final[j])
    order = []
    mask = full
    while j >= 0:
        order.append(j)
        i = int(parent[mask, j])
        mask ^= 1 << j
        j = i
    order.reverse()
    return order, length


def _path_length(start: np.ndarray, pts: np.ndarray, order: list[int],
                 end: np.ndarray | None) -> float:
    seq = np.vstack([start[None, :], pts[order]] + ([end[None, :]] if end is not None else []))
    return float(np.hypot(np.diff(seq[:, 0]), np.diff(seq[:, 1])).sum())


def _heuristic_path(start: np.ndarray, pts: np.ndarray,
                    end: np.ndarray | None) -> tuple[list[int], float]:
    """Nearest neighbor construction followed by best-improvement 2-opt."""
    m = len(pts)
    remaining = list(range(m))
    order: list[int] = []
    cur = start
    while remaining:
        rem = np.array(remaining)
        d = np.hypot(pts[rem, 0] - cur[0], pts[rem, 1] - cur[1])
        k = int(np.argmin(d))
        order.append(remaining.pop(k))
        cur = pts[order[-1]]

    # 2-opt over the open path: nodes[0] is the pinned start and nodes[m+1]
    # the pinned end; with a free end the terminal is virtual (zero distance
    # to everything), which makes suffix reversals cost only the left edge.
    nodes = np.vstack([start[None, :], pts, (end if end is not None else start)[None, :]])
    dmat = _distance_matrix(nodes)
    if end is None:
        dmat[:, m + 1] = 0.0
        dmat[m + 1, :] = 0.0
    seq = np.array([0] + [i + 1 for i in order] + [m + 1])
    max_passes = TWO_OPT_PASS_FACTOR * max(m, 1)
    for _ in range(max_passes):
        pos = np.arange(1, m + 1)
        left = dmat[seq[pos - 1][:, None], seq[pos][None, :]]      # d(before a, node b)
        right = dmat[seq[pos][:, None], seq[pos + 1][None, :]]     # d(node a, after b)
        cur_left = np.diag(left)[:, None]                          # d(before a, node a)
        cur_right = np.diag(right)[None, :]                        # d(node b, after b)
        delta = left + right - cur_left - cur_right
        delta = np.triu(delta)  # only i <= j reversals are meaningful
        i, j = np.unravel_index(int(np.argmin(delta)), delta.shape)
        if delta[i, j] >= -1e-12:
            break
        seq[i + 1:j + 2] = seq[i + 1:j + 2][::-1]
    final_order = [int(s) - 1 for s in seq[1:m + 1]]
    return final_order, _path_length(start, pts, final_order, end)


def emhp_path(start: Point2, points: list[Point2], end: Point2 | None = None,
              exact_limit: int = EXACT_LIMIT) -> PathResult:
    """Shortest path from ``start`` visiting every point exactly once.

    ``end`` pins the path's far endpoint (visited after all points); with
    ``end=None`` the path stops at its last point.  Instances with at most
    ``exact_limit`` points are solved exactly by subset dynamic programming;
    larger ones use nearest neighbor plus 2-opt and are flagged inexact.
    """
    if len(points) == 0:
        raise ValueError("point list must be non-empty")
    pts = np.array([[p.x, p.y] for p in points], dtype=float)
    s = np.array([start.x, start.y], dtype=float)
    e = None if end is None else np.array([end.x, end.y], dtype=float)
    if len(points) <= exact_limit:
        order, length = _exact_path(s, pts, e)
        return PathResult(order=tuple(order), length=length, exact=True)
    order, length = _heuristic_path(s, pts, e)
    return PathResult(order=tuple(order), length=length, exact=False)


def tmhp_time(start: Point2, points: list[Point2], v: float,
              exact_limit: int = EXACT_LIMIT) -> TourResult:
    """Minimum-time capture order over targets drifting +Y at common speed v.

    Converts the start and all targets with `convert_point`, solves the
    static shortest path in converted coordinates (its order is also the
    optimal capture order), and returns

        v * (y_final - y_start) / (1 - v^2)  +  converted path length,

    where y_final / y_start are the original coordinates of the last target
    in the order and of the start.  For a single target this equals the
    straight-line intercept time exactly.
    """
    if len(points) == 0:
        raise ValueError("point list must be non-empty")
    cstart = convert_point(start, v)
    cpoints = [convert_point(p, v) for p in points]
    path = emhp_path(cstart, cpoints, end=None, exact_limit=exact_limit)
    q = 1.0 - v * v
    drift = v * (points[path.order[-1]].y - start.y) / q
    return TourResult(order=path.order, time=drift + path.length, exact=path.exact)
