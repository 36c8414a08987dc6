"""Reference heuristics: first-fit over empty rectangles and the
Euclidean contour heuristic."""

import math
import random

from helpers import random_instance
from rcplace.baselines import (kamer_first_fit, maximal_empty_rects,
                               nao_heuristic)
from rcplace.contour import find_contour_segments
from rcplace.model import (ChipConfig, DemandPoint, PlacementRequest, Rect,
                           expand_scene)
from rcplace.oracles import raster_feasible_set
from rcplace.placer import manhattan_cost, place


def rect_empty(rect, modules):
    return all(not rect.interior_overlaps(m) for m in modules)


def brute_maximal_rects(chip, modules):
    """Every empty rectangle that cannot grow by one doubled unit."""
    W, H = 2 * chip.width, 2 * chip.height
    out = set()
    for x1 in range(W + 1):
        for x2 in range(x1 + 1, W + 1):
            for y1 in range(H + 1):
                for y2 in range(y1 + 1, H + 1):
                    r = Rect(x1, y1, x2 - x1, y2 - y1)
                    if not rect_empty(r, modules):
                        continue
                    grow = (
                        (x1 > 0 and rect_empty(Rect(x1 - 1, y1, r.w + 1, r.h), modules))
                        or (x2 < W and rect_empty(Rect(x1, y1, r.w + 1, r.h), modules))
                        or (y1 > 0 and rect_empty(Rect(x1, y1 - 1, r.w, r.h + 1), modules))
                        or (y2 < H and rect_empty(Rect(x1, y1, r.w, r.h + 1), modules)))
                    if not grow:
                        out.add(r)
    return out


def test_empty_chip_single_rect():
    assert maximal_empty_rects(ChipConfig(6, 4), []) == [Rect(0, 0, 12, 8)]


def test_center_module_four_rects():
    rects = maximal_empty_rects(ChipConfig(4, 4), [Rect.from_external(1, 1, 2, 2)])
    assert rects == [Rect(0, 0, 2, 8), Rect(0, 0, 8, 2),
                     Rect(6, 0, 2, 8), Rect(0, 6, 8, 2)]


def test_maximal_rects_match_brute_enumeration():
    rng = random.Random(301)
    for _ in range(40):
        chip = ChipConfig(rng.randint(1, 5), rng.randint(1, 5))
        modules = []
        for _ in range(rng.randint(0, 4)):
            w = rng.randint(1, chip.width)
            h = rng.randint(1, chip.height)
            r = Rect.from_external(rng.randint(0, chip.width - w),
                                   rng.randint(0, chip.height - h), w, h)
            if rect_empty(r, modules):
                modules.append(r)
        got = set(maximal_empty_rects(chip, modules))
        assert got == brute_maximal_rects(chip, modules), (chip, modules)


def test_first_fit_empty_chip_bottom_left():
    res = kamer_first_fit(ChipConfig(16, 12), [], PlacementRequest(4, 2))
    assert res.placed
    assert res.center_doubled == (4, 2)
    assert res.cost == 0


def test_first_fit_takes_first_fitting_rect():
    # bottom half occupied: the only empty rect is the top strip
    chip = ChipConfig(8, 8)
    placed = [Rect.from_external(0, 0, 8, 4)]
    res = kamer_first_fit(chip, placed, PlacementRequest(2, 2))
    assert res.center_doubled == (2, 10)
    # a demand far away does not move first-fit, only prices it
    demands = (DemandPoint(16, 16, 3),)
    res2 = kamer_first_fit(chip, placed, PlacementRequest(2, 2, demands))
    assert res2.center_doubled == (2, 10)
    assert res2.cost == manhattan_cost((2, 10), demands)


def test_first_fit_rejects_when_nothing_fits():
    chip = ChipConfig(6, 6)
    placed = [Rect.from_external(2, 0, 2, 6)]  # splits chip into 2-wide halves
    assert not kamer_first_fit(chip, placed, PlacementRequest(3, 1)).placed
    assert kamer_first_fit(chip, placed, PlacementRequest(2, 6)).placed


def test_first_fit_parity_and_feasibility():
    rng = random.Random(302)
    for _ in range(200):
        chip, modules, request = random_instance(rng, 10, 6)
        res = kamer_first_fit(chip, modules, request)
        grid = raster_feasible_set(chip, modules, request)
        assert res.placed == grid.any_feasible(), (chip, modules, request)
        if res.placed:
            assert grid.feasible(*res.center_doubled)


def test_nao_single_demand_picks_nearest_contour_point():
    chip = ChipConfig(16, 12)
    req = PlacementRequest(4, 2, (DemandPoint(10, 10, 1),))
    res = nao_heuristic(chip, [], req)
    assert res.center_doubled == (4, 10)
    assert res.cost == 6


def test_nao_single_demand_euclidean_property():
    rng = random.Random(303)
    for _ in range(100):
        chip, modules, request = random_instance(rng, 10, 5)
        demand = DemandPoint(rng.randint(0, 2 * chip.width),
                             rng.randint(0, 2 * chip.height), 1)
        request = PlacementRequest(request.width, request.height, (demand,))
        res = nao_heuristic(chip, modules, request)
        scene = expand_scene(chip, modules, request)
        contour = find_contour_segments(scene)
        if contour.is_empty:
            assert not res.placed
            continue
        pts = set()
        for x, y1, y2 in contour.vertical_segments:
            pts.update((x, y) for y in range(y1, y2 + 1))
        for y, x1, x2 in contour.horizontal_segments:
            pts.update((x, y) for x in range(x1, x2 + 1))
        best = min(math.hypot(p[0] - demand.x, p[1] - demand.y) for p in pts)
        got = math.hypot(res.center_doubled[0] - demand.x,
                         res.center_doubled[1] - demand.y)
        assert got <= best + 1e-9, (chip, modules, request)


def test_nao_rejection_parity_with_optimal():
    rng = random.Random(304)
    for _ in range(150):
        chip, modules, request = random_instance(rng, 10, 5, max_demands=4)
        res = nao_heuristic(chip, modules, request)
        opt = place(chip, modules, request)
        assert res.placed == opt.placed
        if res.placed:
            assert res.cost >= opt.cost, (chip, modules, request)


def test_nao_explicit_demand_override():
    chip = ChipConfig(16, 12)
    req = PlacementRequest(4, 2, (DemandPoint(28, 22, 5),))
    override = [DemandPoint(4, 2, 1)]
    res = nao_heuristic(chip, [], req, demands=override)
    assert res.center_doubled == (4, 2)
    assert res.cost == 0


def test_nao_zero_demand_places_somewhere_feasible():
    chip = ChipConfig(16, 12)
    res = nao_heuristic(chip, [], PlacementRequest(4, 2))
    assert res.placed and res.cost == 0
    grid = raster_feasible_set(chip, [], PlacementRequest(4, 2))
    assert grid.feasible(*res.center_doubled)
