"""Optimal routing-conscious placement.

The cost of a center point is the buswidth-weighted Manhattan distance to
all demand points.  It separates into independent convex piecewise-linear
functions of x and y, each minimized at a weighted median, so the
unconstrained optimum is the median point.  When that point is blocked the
optimum moves to the free-space contour, and it is always attained at a
contour vertex or where a median axis crosses a contour segment.  The
candidate set deliberately includes every contour vertex, a superset of
the reachable corners, to avoid any orientation bookkeeping.

All coordinates here are doubled integers, so every cost is an exact
integer equal to twice the external cost.
"""

from __future__ import annotations

from dataclasses import dataclass

from .contour import find_contour_segments, is_feasible, vertex_points
from .model import PlacementResult, expand_scene


class NoDemand(ValueError):
    """An operation that needs positive demand weight got none."""


def weighted_median(values):
    """Lower weighted median of (coordinate, weight) pairs.

    Returns the smallest coordinate v with sum(w at <= v) >= total/2;
    exact integer arithmetic, no halving.
    """
    total = 0
    pairs = sorted(values)
    for _, w in pairs:
        if w < 0:
            raise ValueError("negative weight")
        total += w
    if total <= 0:
        raise NoDemand("all weights are zero")
    acc = 0
    for v, w in pairs:
        acc += w
        if 2 * acc >= total:
            return v
    raise AssertionError("unreachable: positive total weight")


def gradient_x(demands, x):
    """Right-derivative sign term of the x cost: weight left of x minus right."""
    return (sum(d.buswidth for d in demands if d.x < x)
            - sum(d.buswidth for d in demands if d.x > x))


def gradient_y(demands, y):
    return (sum(d.buswidth for d in demands if d.y < y)
            - sum(d.buswidth for d in demands if d.y > y))


@dataclass(frozen=True)
class MedianAxes:
    """The two demand-median lines x = x_med and y = y_med."""

    x_med: int
    y_med: int


def median_axes(demands):
    return MedianAxes(
        weighted_median((d.x, d.buswidth) for d in demands),
        weighted_median((d.y, d.buswidth) for d in demands),
    )


@dataclass(frozen=True)
class CandidateSet:
    """Deduplicated candidate points, each tagged median/axis/vertex."""

    points: tuple[tuple[tuple[int, int], str], ...]

    def coordinates(self):
        return [p for p, _ in self.points]

    def __len__(self):
        return len(self.points)


def candidates(scene, contour, axes):
    """Candidate optimal centers: the median if feasible, every crossing of
    a median axis with the contour, and every contour vertex."""
    tagged = {}

    def add(point, tag):
        tagged.setdefault(point, tag)

    med = (axes.x_med, axes.y_med)
    if is_feasible(scene, med):
        add(med, "median")
    for x, y1, y2 in contour.vertical_segments:
        if y1 <= axes.y_med <= y2:
            add((x, axes.y_med), "axis")
        if x == axes.x_med:
            # collinear with the x median line: keep its extreme points
            add((x, y1), "axis")
            add((x, y2), "axis")
    for y, x1, x2 in contour.horizontal_segments:
        if x1 <= axes.x_med <= x2:
            add((axes.x_med, y), "axis")
        if y == axes.y_med:
            add((x1, y), "axis")
            add((x2, y), "axis")
    for p in vertex_points(contour):
        add(p, "vertex")
    return CandidateSet(tuple(sorted(tagged.items())))


def _axis_costs(coords, weighted):
    """Cost of each coordinate in `coords` against weighted demand positions.

    Single prefix/suffix scan over the merged coordinate list: between two
    consecutive distinct positions the cost changes linearly with slope
    (weight at or left) - (weight at or right).
    """
    weight_at = {}
    for v, w in weighted:
        weight_at[v] = weight_at.get(v, 0) + w
    merged = sorted(set(coords) | set(weight_at))
    n = len(merged)
    left = [0] * n
    right = [0] * n
    acc = 0
    for i, v in enumerate(merged):
        acc += weight_at.get(v, 0)
        left[i] = acc
    acc = 0
    for i in range(n - 1, -1, -1):
        acc += weight_at.get(merged[i], 0)
        right[i] = acc
    cost = [0] * n
    cost[0] = sum(w * (v - merged[0]) for v, w in weight_at.items())
    for i in range(n - 1):
        cost[i + 1] = cost[i] + (left[i] - right[i + 1]) * (merged[i + 1] - merged[i])
    return dict(zip(merged, cost))


def evaluate_costs(points, demands):
    """Exact weighted-Manhattan cost for every point, via two axis scans."""
    xw = [(d.x, d.buswidth) for d in demands]
    yw = [(d.y, d.buswidth) for d in demands]
    cx = _axis_costs([p[0] for p in points], xw)
    cy = _axis_costs([p[1] for p in points], yw)
    return [(p, cx[p[0]] + cy[p[1]]) for p in points]


def manhattan_cost(point, demands):
    """Direct-sum reference for a single point."""
    px, py = point
    return sum(d.buswidth * (abs(px - d.x) + abs(py - d.y)) for d in demands)


def place(chip, modules, request):
    """Place one module optimally, or reject when no feasible center exists.

    Ties in cost break toward the smallest (x, y) center; with zero demand
    weight everywhere the bottom-left-most contour vertex wins.
    """
    scene = expand_scene(chip, modules, request)
    contour = find_contour_segments(scene)
    if contour.is_empty:
        return PlacementResult.make_rejected()
    demands = request.demands
    total = sum(d.buswidth for d in demands)
    if total == 0:
        points = vertex_points(contour)
        if not points:  # safety net; a non-empty contour always has vertices
            points = [(x, y1) for x, y1, _ in contour.vertical_segments]
        return PlacementResult.make_placed(min(points), 0)
    axes = median_axes(demands)
    med = (axes.x_med, axes.y_med)
    if is_feasible(scene, med):
        return PlacementResult.make_placed(med, manhattan_cost(med, demands))
    cand = candidates(scene, contour, axes)
    scored = evaluate_costs(cand.coordinates(), demands)
    best_point, best_cost = min(scored, key=lambda pc: (pc[1], pc[0]))
    return PlacementResult.make_placed(best_point, best_cost)
