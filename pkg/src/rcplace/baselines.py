"""Comparison placement algorithms: KFF and a weighted-Euclidean heuristic.

kamer_first_fit keeps all maximal empty rectangles and drops the module into
the first one that fits, bottom-left first.  nao_heuristic picks the contour
point minimizing buswidth-weighted Euclidean distance to the demand points.
Both report the cost of the chosen center in weighted Manhattan half-units so
results are comparable with the routing-conscious placer.
"""

from __future__ import annotations

import numpy as np

from .contour import find_contour_segments
from .model import PlacementResult, Rect, expand_scene
from .placer import manhattan_cost


def _empty_y_intervals(strip_modules, height):
    """Maximal uncovered y-intervals of [0, height] given blocking modules."""
    spans = sorted((m.y, m.y2) for m in strip_modules)
    out = []
    cursor = 0
    for y1, y2 in spans:
        if y1 > cursor:
            out.append((cursor, y1))
        cursor = max(cursor, y2)
    if cursor < height:
        out.append((cursor, height))
    return out


def maximal_empty_rects(chip, placed):
    """All maximal empty rectangles of the layout, in doubled coordinates.

    A rectangle qualifies when no placed module overlaps its interior and it
    cannot be grown in any of the four directions.  Zero-area slivers between
    abutting modules are skipped; they cannot host a module.
    """
    width, height = 2 * chip.width, 2 * chip.height
    lefts = sorted({0} | {m.x2 for m in placed if m.x2 < width})
    rights = sorted({width} | {m.x for m in placed if m.x > 0})
    rects = []
    for x1 in lefts:
        for x2 in rights:
            if x2 <= x1:
                continue
            strip = [m for m in placed if m.x < x2 and m.x2 > x1]
            for y1, y2 in _empty_y_intervals(strip, height):
                if y2 <= y1:
                    continue
                # grown-in-x check; growth in y is ruled out by interval maximality
                open_left = x1 > 0 and not any(
                    m.x2 == x1 and m.y < y2 and m.y2 > y1 for m in placed)
                open_right = x2 < width and not any(
                    m.x == x2 and m.y < y2 and m.y2 > y1 for m in placed)
                if not open_left and not open_right:
                    rects.append(Rect(x1, y1, x2 - x1, y2 - y1))
    return sorted(set(rects), key=lambda r: (r.y, r.x, r.w, r.h))


def kamer_first_fit(chip, placed, request):
    """Place at the bottom-left corner of the first empty rectangle that fits."""
    need_w, need_h = 2 * request.width, 2 * request.height
    for rect in maximal_empty_rects(chip, placed):
        if rect.w >= need_w and rect.h >= need_h:
            center = (rect.x + request.width, rect.y + request.height)
            return PlacementResult.make_placed(
                center, manhattan_cost(center, request.demands))
    return PlacementResult.make_rejected()


def _segment_candidates(contour, demands):
    """Contour segment endpoints plus each demand's nearest point per segment."""
    points = set()
    for x, y1, y2 in contour.vertical_segments:
        points.add((x, y1))
        points.add((x, y2))
        for d in demands:
            points.add((x, min(max(d.y, y1), y2)))
    for y, x1, x2 in contour.horizontal_segments:
        points.add((x1, y))
        points.add((x2, y))
        for d in demands:
            points.add((min(max(d.x, x1), x2), y))
    return sorted(points)


def nao_heuristic(chip, placed, request, demands=None):
    """Weighted-Euclidean placement over contour candidate points.

    Selection minimizes sum of buswidth times Euclidean distance; the reported
    cost is nevertheless the weighted Manhattan cost of the chosen center.
    """
    if demands is None:
        demands = request.demands
    scene = expand_scene(chip, placed, request)
    contour = find_contour_segments(scene)
    if contour.is_empty:
        return PlacementResult.make_rejected()
    candidates = _segment_candidates(contour, demands)
    if demands:
        pts = np.asarray(candidates, dtype=np.float64)
        dx = pts[:, 0:1] - np.array([d.x for d in demands], dtype=np.float64)
        dy = pts[:, 1:2] - np.array([d.y for d in demands], dtype=np.float64)
        weights = np.array([d.buswidth for d in demands], dtype=np.float64)
        scores = np.hypot(dx, dy) @ weights
        center = candidates[int(np.argmin(scores))]  # first min: lex tie-break
    else:
        center = candidates[0]
    return PlacementResult.make_placed(center, manhattan_cost(center, demands))
