"""Brute-force reference implementations for testing.

Everything in this module recomputes its answer from first principles (the
rectangle-fits definition of feasibility, exhaustive grids, flat interval
lists) and deliberately shares no code with the sweep/placer pipeline, so
agreement between the two is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_GRID_CELLS = 1_000_000


class GridTooLarge(ValueError):
    """The doubled-lattice grid would exceed the cell budget."""


@dataclass
class RasterGrid:
    """Per-lattice-point feasibility over the shrunk frame (doubled coords)."""

    x0: int
    y0: int
    mask: np.ndarray  # mask[ix, iy] for point (x0 + ix, y0 + iy)

    @property
    def x1(self):
        return self.x0 + self.mask.shape[0] - 1

    @property
    def y1(self):
        return self.y0 + self.mask.shape[1] - 1

    def feasible(self, px, py):
        if not (self.x0 <= px <= self.x1 and self.y0 <= py <= self.y1):
            return False
        return bool(self.mask[px - self.x0, py - self.y0])

    def any_feasible(self):
        return bool(self.mask.any())


def raster_feasible_set(chip, modules, request):
    """Exhaustive feasibility over the doubled lattice, from the definition:
    the new module's rectangle must fit in the chip and overlap no placed
    module's interior."""
    w, h = request.width, request.height  # half-extents in doubled units
    x0, y0 = w, h
    x1, y1 = 2 * chip.width - w, 2 * chip.height - h
    if x0 > x1 or y0 > y1:
        raise ValueError("request does not fit the chip at all")
    nx, ny = x1 - x0 + 1, y1 - y0 + 1
    if nx * ny > MAX_GRID_CELLS:
        raise GridTooLarge(f"{nx} x {ny} lattice exceeds {MAX_GRID_CELLS} cells")
    mask = np.ones((nx, ny), dtype=bool)
    for m in modules:
        # center px collides with m iff px - w < m.x + m.w and px + w > m.x
        lo_x = max(m.x - w + 1, x0)
        hi_x = min(m.x + m.w + w - 1, x1)
        lo_y = max(m.y - h + 1, y0)
        hi_y = min(m.y + m.h + h - 1, y1)
        if lo_x <= hi_x and lo_y <= hi_y:
            mask[lo_x - x0:hi_x - x0 + 1, lo_y - y0:hi_y - y0 + 1] = False
    return RasterGrid(x0, y0, mask)


def grid_optimal_placement(chip, modules, request):
    """Exhaustive minimum-cost feasible lattice point.

    Returns ((x, y), cost) in doubled coordinates with cost in half-units,
    or None when nothing is feasible.  Ties break toward smallest (x, y).
    """
    grid = raster_feasible_set(chip, modules, request)
    if not grid.any_feasible():
        return None
    xs = np.arange(grid.x0, grid.x1 + 1, dtype=np.int64)
    ys = np.arange(grid.y0, grid.y1 + 1, dtype=np.int64)
    cost_x = np.zeros_like(xs)
    cost_y = np.zeros_like(ys)
    for d in request.demands:
        cost_x = cost_x + d.buswidth * np.abs(xs - d.x)
        cost_y = cost_y + d.buswidth * np.abs(ys - d.y)
    total = cost_x[:, None] + cost_y[None, :]
    best = total[grid.mask].min()
    ix, iy = np.argwhere(grid.mask & (total == best))[0]  # row-major: lex (x, y)
    return ((int(xs[ix]), int(ys[iy])), int(best))


class NaiveIntervalCoverage:
    """Flat-list reference for the coverage segment tree.

    Keeps every active span and recounts coverage of each elementary
    interval on demand; quadratic and proud of it.
    """

    def __init__(self, endpoints):
        self.values = sorted(set(endpoints))
        if not self.values:
            raise ValueError("at least one endpoint value is required")
        self.active = []

    def elementary_intervals(self):
        out = []
        for i, v in enumerate(self.values):
            if i:
                out.append((self.values[i - 1], v))
            out.append((v, v))
        return out

    def insert(self, b, e, cover_low=False, cover_high=False):
        self.active.append((b, e, cover_low, cover_high))

    def remove(self, b, e, cover_low=False, cover_high=False):
        self.active.remove((b, e, cover_low, cover_high))

    def _covers(self, span, piece):
        b, e, cl, ch = span
        lo, hi = piece
        if lo == hi:  # point piece
            if b == e:
                return lo == b and cl and ch
            if b < lo < e:
                return True
            return (lo == b and cl) or (lo == e and ch)
        # gap piece (lo, hi) between consecutive values
        return b <= lo and hi <= e and b < e

    def coverage_profile(self):
        return [sum(self._covers(s, piece) for s in self.active)
                for piece in self.elementary_intervals()]

    def uncovered_within(self, b, e):
        """Maximal uncovered runs of [b, e] as closed (lo, hi) value pairs."""
        pieces = self.elementary_intervals()
        profile = self.coverage_profile()
        lo_i = pieces.index((b, b))
        hi_i = pieces.index((e, e))
        runs = []
        run = None
        for i in range(lo_i, hi_i + 1):
            if profile[i] == 0:
                run = [i, i] if run is None else [run[0], i]
            elif run is not None:
                runs.append(run)
                run = None
        if run is not None:
            runs.append(run)
        out = []
        for i, j in runs:
            assert pieces[i][0] == pieces[i][1] and pieces[j][0] == pieces[j][1]
            out.append((pieces[i][0], pieces[j][0]))
        return out
