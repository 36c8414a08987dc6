"""Free-space contour of an expanded scene via two plane sweeps.

Free space is the shrunk frame minus the open interiors of the expanded
modules.  One sweep runs along x and reports the vertical boundary
segments, a second runs along y for the horizontal ones; a segment can be
degenerate (a single point) where free space narrows to a seam between
abutting modules.

Each sweep keeps the perpendicular coverage in a segment tree built over a
point/gap decomposition, so abutting spans leave their shared endpoint
uncovered and zero-width corridors are found exactly.  Opening a module
first reports the uncovered parts of its edge and then inserts its span;
closing removes the span first and then reports.  Ties on the sweep
coordinate process closes before opens, which is what exposes the seam
between two modules that touch.  Two extra query events per sweep emit the
frame-border segments; modules that stick out past the frame are inserted
before the border query runs, so the border parts they block stay silent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .segment_tree import CoverageSegmentTree


@dataclass(frozen=True)
class Contour:
    """Boundary of free space as maximal merged segments.

    Vertical segments are (x, y1, y2) and horizontal ones (y, x1, x2), all
    in doubled coordinates, sorted, with y1 <= y2 and x1 <= x2 (equality
    marks a degenerate segment).
    """

    vertical_segments: tuple[tuple[int, int, int], ...]
    horizontal_segments: tuple[tuple[int, int, int], ...]

    @property
    def is_empty(self):
        return not self.vertical_segments and not self.horizontal_segments

    @property
    def segment_count(self):
        return len(self.vertical_segments) + len(self.horizontal_segments)


def is_feasible(scene, point):
    """True iff the center `point` (doubled coords) is a legal placement."""
    px, py = point
    f = scene.frame
    if not (f.x <= px <= f.x2 and f.y <= py <= f.y2):
        return False
    for b in scene.blockers:
        if b.x < px < b.x2 and b.y < py < b.y2:
            return False
    return True


def feasible_offset(scene, point, dx, dy):
    """Feasibility of `point` nudged half a grid step along (dx, dy).

    dx, dy in {-1, 0, 1}. Comparisons run on a quadrupled grid so the
    half-step stays exact; no structure line can sit between a lattice
    point and its half-step neighbour.
    """
    qx, qy = 2 * point[0] + dx, 2 * point[1] + dy
    f = scene.frame
    if not (2 * f.x <= qx <= 2 * f.x2 and 2 * f.y <= qy <= 2 * f.y2):
        return False
    for b in scene.blockers:
        if 2 * b.x < qx < 2 * b.x2 and 2 * b.y < qy < 2 * b.y2:
            return False
    return True


def feasible_mask(scene):
    """Boolean grid of is_feasible over every frame lattice point.

    Row index is x - frame.x, column index y - frame.y.  Vectorized batch
    twin of is_feasible for exhaustive comparisons.
    """
    import numpy as np

    f = scene.frame
    mask = np.ones((f.w + 1, f.h + 1), dtype=bool)
    for b in scene.blockers:
        x1 = max(b.x + 1, f.x) - f.x
        x2 = min(b.x2 - 1, f.x2) - f.x
        y1 = max(b.y + 1, f.y) - f.y
        y2 = min(b.y2 - 1, f.y2) - f.y
        if x1 <= x2 and y1 <= y2:
            mask[x1:x2 + 1, y1:y2 + 1] = False
    return mask


def _sweep(spans, sweep_lo, sweep_hi, perp_lo, perp_hi):
    """One directional sweep.

    `spans` are open rectangles given as (a1, a2, b1, b2) with the sweep
    axis first.  Returns merged boundary segments as (coord, lo, hi).
    """
    kept = []
    for a1, a2, b1, b2 in spans:
        # sweep axis: the open interval (a1, a2) must meet [sweep_lo, sweep_hi]
        if sweep_lo == sweep_hi:
            if not (a1 < sweep_lo < a2):
                continue
        elif a1 >= sweep_hi or a2 <= sweep_lo:
            continue
        # perpendicular axis: clamp to the frame, remembering whether the
        # original span continued past each clamped end
        pl, ph = max(b1, perp_lo), min(b2, perp_hi)
        if pl > ph:
            continue
        cl, ch = b1 < pl, b2 > ph
        if pl == ph and not (cl and ch):
            continue
        kept.append((a1, a2, pl, ph, cl, ch))

    endpoints = {perp_lo, perp_hi}
    for _, _, pl, ph, _, _ in kept:
        endpoints.add(pl)
        endpoints.add(ph)
    tree = CoverageSegmentTree(endpoints)

    CLOSE, BORDER, OPEN = 0, 1, 2
    events = []
    for i, (a1, a2, pl, ph, cl, ch) in enumerate(kept):
        events.append((a1, OPEN, pl, ph, i))
        events.append((a2, CLOSE, pl, ph, i))
    events.append((sweep_lo, BORDER, perp_lo, perp_hi, -1))
    events.append((sweep_hi, BORDER, perp_lo, perp_hi, -1))
    events.sort()

    raw = {}

    def emit(coord, runs):
        if runs:
            raw.setdefault(coord, []).extend(runs)

    for coord, kind, pl, ph, i in events:
        if coord > sweep_hi:
            break
        if kind == CLOSE:
            _, _, _, _, cl, ch = kept[i]
            tree.remove(pl, ph, cl, ch)
            if coord >= sweep_lo:
                emit(coord, tree.uncovered_within(pl, ph))
        elif kind == OPEN:
            if coord >= sweep_lo:
                emit(coord, tree.uncovered_within(pl, ph))
            _, _, _, _, cl, ch = kept[i]
            tree.insert(pl, ph, cl, ch)
        else:
            emit(coord, tree.uncovered_within(perp_lo, perp_hi))

    segments = []
    for coord in sorted(raw):
        runs = sorted(raw[coord])
        merged = [list(runs[0])]
        for lo, hi in runs[1:]:
            if lo <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        segments.extend((coord, lo, hi) for lo, hi in merged)
    return segments


def find_contour_segments(scene):
    """Boundary of free space; empty contour means no feasible point exists."""
    f = scene.frame
    spans = [(b.x, b.x2, b.y, b.y2) for b in scene.blockers]
    vertical = _sweep(spans, f.x, f.x2, f.y, f.y2)
    transposed = [(b.y, b.y2, b.x, b.x2) for b in scene.blockers]
    horizontal = _sweep(transposed, f.y, f.y2, f.x, f.x2)
    return Contour(tuple(sorted(vertical)), tuple(sorted(horizontal)))


def _interval_index(segments):
    """coord -> sorted list of (lo, hi), for point-on-segment lookups."""
    index = {}
    for coord, lo, hi in segments:
        index.setdefault(coord, []).append((lo, hi))
    for runs in index.values():
        runs.sort()
    return index


def _covers(index, coord, value):
    runs = index.get(coord)
    if not runs:
        return False
    from bisect import bisect_right

    i = bisect_right(runs, (value, float("inf"))) - 1
    return i >= 0 and runs[i][0] <= value <= runs[i][1]


def vertex_points(contour):
    """Contour corner points: segment endpoints lying on a perpendicular segment."""
    h_index = _interval_index(contour.horizontal_segments)
    v_index = _interval_index(contour.vertical_segments)
    points = set()
    for x, y1, y2 in contour.vertical_segments:
        for y in (y1, y2):
            if _covers(h_index, y, x):
                points.add((x, y))
    for y, x1, x2 in contour.horizontal_segments:
        for x in (x1, x2):
            if _covers(v_index, x, y):
                points.add((x, y))
    return sorted(points)


def contour_vertices(contour, scene=None):
    """Vertices with the axis directions that stay feasible from each.

    Directions are a subset of {"+x", "-x", "+y", "-y"}; computing them
    needs the scene, so without one each vertex is annotated None.
    """
    out = []
    for p in vertex_points(contour):
        if scene is None:
            out.append((p, None))
            continue
        dirs = set()
        for tag, dx, dy in (("+x", 1, 0), ("-x", -1, 0), ("+y", 0, 1), ("-y", 0, -1)):
            if feasible_offset(scene, p, dx, dy):
                dirs.add(tag)
        out.append((p, frozenset(dirs)))
    return out
