"""Domain model: chip, rectangles, requests, and the expand-and-shrink
transform that reduces rectangle placement to point placement.

Unit conventions
----------------
Chip and request dimensions (and everything in instance files) are plain
external integers.  All stored geometry lives on a doubled grid: every
``Rect`` and ``DemandPoint`` coordinate is twice its external value.  The
doubling keeps half-unit quantities, half the request width and height and
module center points, exact integers, so no float ever enters the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .segment_tree import CoverageSegmentTree


class InvalidInput(ValueError):
    """Chip, layout, request, or demand data violates its contract."""


class EmptyShrunkChip(InvalidInput):
    """The requested module is wider or taller than the chip."""


@dataclass(frozen=True)
class ChipConfig:
    """Chip dimensions in external length units."""

    width: int
    height: int

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise InvalidInput(
                f"chip dimensions must be positive, got {self.width}x{self.height}")


@dataclass(frozen=True, order=True)
class Rect:
    """Axis-parallel rectangle in doubled coordinates.

    Width or height zero is legal: degenerate rectangles appear when an
    expanded module is clipped against a degenerate frame.
    """

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.w < 0 or self.h < 0:
            raise InvalidInput(f"rect has negative extent: {self}")

    @classmethod
    def from_external(cls, x, y, w, h):
        """Build from external integer units."""
        return cls(2 * x, 2 * y, 2 * w, 2 * h)

    @property
    def x2(self):
        return self.x + self.w

    @property
    def y2(self):
        return self.y + self.h

    @property
    def center(self):
        """Center point; exact because doubled coordinates have even sums."""
        return ((self.x + self.x2) // 2, (self.y + self.y2) // 2)

    def contains_point(self, px, py):
        return self.x <= px <= self.x2 and self.y <= py <= self.y2

    def strictly_contains(self, px, py):
        return self.x < px < self.x2 and self.y < py < self.y2

    def interior_overlaps(self, other):
        return (self.x < other.x2 and other.x < self.x2
                and self.y < other.y2 and other.y < self.y2)

    def intersect(self, other):
        """Closed intersection with another rect, or None if they miss."""
        x1 = max(self.x, other.x)
        y1 = max(self.y, other.y)
        x2 = min(self.x2, other.x2)
        y2 = min(self.y2, other.y2)
        if x1 > x2 or y1 > y2:
            return None
        return Rect(x1, y1, x2 - x1, y2 - y1)


@dataclass(frozen=True)
class DemandPoint:
    """Communication target (doubled coordinates) with its buswidth weight."""

    x: int
    y: int
    buswidth: int

    def __post_init__(self):
        if self.buswidth < 0:
            raise InvalidInput(f"buswidth must be non-negative, got {self.buswidth}")

    @classmethod
    def from_external(cls, x, y, buswidth):
        """Build from external coordinates; halves are allowed and kept exact."""
        xd, yd = 2 * x, 2 * y
        if xd != int(xd) or yd != int(yd):
            raise InvalidInput(f"demand coordinates must be multiples of 1/2: ({x}, {y})")
        return cls(int(xd), int(yd), buswidth)


@dataclass(frozen=True)
class PlacementRequest:
    """Footprint of the module to place (external units) plus its demands."""

    width: int
    height: int
    demands: tuple[DemandPoint, ...] = ()

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise InvalidInput(
                f"request dimensions must be positive, got {self.width}x{self.height}")
        object.__setattr__(self, "demands", tuple(self.demands))


@dataclass(frozen=True)
class PlacementResult:
    """Outcome of one placement attempt.

    ``center`` is in external units (so halves can occur); ``cost`` is the
    buswidth-weighted Manhattan distance measured in half-units, i.e. twice
    the external cost, which keeps it an exact integer.
    """

    status: str
    center: tuple[float, float] | None = None
    cost: int | None = None

    @classmethod
    def make_placed(cls, center_doubled, cost):
        cx, cy = center_doubled
        return cls("placed", (cx / 2, cy / 2), cost)

    @classmethod
    def make_rejected(cls):
        return cls("rejected")

    @property
    def placed(self):
        return self.status == "placed"

    @property
    def center_doubled(self):
        if self.center is None:
            return None
        return (round(self.center[0] * 2), round(self.center[1] * 2))

    @property
    def external_cost(self):
        return None if self.cost is None else self.cost / 2


@dataclass(frozen=True)
class ExpandedScene:
    """Point-placement view of one layout-plus-request.

    ``frame`` is the shrunk chip holding every legal center point.
    ``modules`` are the expanded module footprints clipped to the frame.
    ``blockers`` keep the unclipped expansions: a center is infeasible
    exactly when it lies strictly inside one of them.  Clipping alone would
    forget which frame-border points a module sticking past the frame still
    blocks, so feasibility tests always consult ``blockers``.
    """

    frame: Rect
    modules: tuple[Rect, ...]
    blockers: tuple[Rect, ...]
    original_count: int


def validate_layout(chip, modules):
    """Reject modules outside the chip, with empty area, or overlapping."""
    w2, h2 = 2 * chip.width, 2 * chip.height
    for m in modules:
        if m.w <= 0 or m.h <= 0:
            raise InvalidInput(f"module must have positive area: {m}")
        if m.x < 0 or m.y < 0 or m.x2 > w2 or m.y2 > h2:
            raise InvalidInput(f"module lies outside the chip: {m}")
    _check_interior_disjoint(modules)


def _check_interior_disjoint(modules):
    # x-sweep with open-interval y coverage; abutting modules are fine,
    # interior overlap is not.
    if len(modules) < 2:
        return
    tree = CoverageSegmentTree(v for m in modules for v in (m.y, m.y2))
    events = []
    for m in modules:
        events.append((m.x, 1, m.y, m.y2))
        events.append((m.x2, 0, m.y, m.y2))
    events.sort()
    for x, kind, y1, y2 in events:
        if kind == 0:
            tree.remove(y1, y2)
        else:
            if tree.has_coverage(y1, y2):
                raise InvalidInput(
                    f"module interiors overlap near x={x} (doubled units)")
            tree.insert(y1, y2)


def validate_demands(chip, demands):
    w2, h2 = 2 * chip.width, 2 * chip.height
    for d in demands:
        if d.x < 0 or d.y < 0 or d.x > w2 or d.y > h2:
            raise InvalidInput(f"demand point outside the chip: {d}")


def _blocks_frame(raw, frame):
    # does the open interior of `raw` meet the closed frame at all?
    def axis(lo, hi, flo, fhi):
        l, h = max(lo, flo), min(hi, fhi)
        if l > h:
            return False
        if l == h:
            return lo < l < hi
        return True

    return (axis(raw.x, raw.x2, frame.x, frame.x2)
            and axis(raw.y, raw.y2, frame.y, frame.y2))


def expand_scene(chip, modules, request):
    """Apply the expand-and-shrink transform.

    The chip shrinks by half the request extent on every side; each placed
    module grows by the same amounts.  A center point for the new module is
    then feasible iff it lies in the shrunk frame and strictly inside no
    expanded module.
    """
    if request.width > chip.width or request.height > chip.height:
        raise EmptyShrunkChip(
            f"request {request.width}x{request.height} exceeds chip "
            f"{chip.width}x{chip.height}")
    validate_layout(chip, modules)
    validate_demands(chip, request.demands)

    # half-extents of the new module, already integers in doubled units
    hw, hh = request.width, request.height
    frame = Rect(hw, hh, 2 * chip.width - 2 * hw, 2 * chip.height - 2 * hh)

    clipped = []
    blockers = []
    for m in modules:
        raw = Rect(m.x - hw, m.y - hh, m.w + 2 * hw, m.h + 2 * hh)
        if not _blocks_frame(raw, frame):
            continue  # cannot constrain any feasible center
        blockers.append(raw)
        clipped.append(raw.intersect(frame))
    return ExpandedScene(frame, tuple(clipped), tuple(blockers), len(modules))


def rects_cross(a, b):
    """True when one rect strictly straddles the other in x while being
    strictly straddled in y (the forbidden 'plus' overlap pattern)."""
    def straddles_x(p, q):
        return p.x < q.x and q.x2 < p.x2

    def straddles_y(p, q):
        return p.y < q.y and q.y2 < p.y2

    return ((straddles_x(a, b) and straddles_y(b, a))
            or (straddles_x(b, a) and straddles_y(a, b)))
