"""Weighted-median placement against brute-force references."""

import random

import pytest

from helpers import random_instance
from rcplace.contour import find_contour_segments, is_feasible
from rcplace.model import (ChipConfig, DemandPoint, PlacementRequest, Rect,
                           expand_scene)
from rcplace.oracles import grid_optimal_placement, raster_feasible_set
from rcplace.placer import (NoDemand, candidates, evaluate_costs, gradient_x,
                            gradient_y, manhattan_cost, median_axes, place,
                            weighted_median)


def brute_median(values):
    pairs = [(v, w) for v, w in values if w > 0]
    lo = min(v for v, _ in pairs)
    hi = max(v for v, _ in pairs)
    best = min(range(lo, hi + 1),
               key=lambda x: (sum(w * abs(x - v) for v, w in pairs), x))
    return best


def test_weighted_median_examples():
    assert weighted_median([(2, 1), (10, 1)]) == 2
    assert weighted_median([(2, 3), (10, 1)]) == 2
    assert weighted_median([(1, 1), (5, 1), (9, 2)]) == 5
    assert weighted_median([(4, 7)]) == 4
    assert weighted_median([(9, 1), (2, 1), (5, 1)]) == 5


def test_weighted_median_errors():
    with pytest.raises(NoDemand):
        weighted_median([])
    with pytest.raises(NoDemand):
        weighted_median([(3, 0), (8, 0)])
    with pytest.raises(ValueError):
        weighted_median([(3, -1), (8, 2)])


def test_weighted_median_minimizes():
    rng = random.Random(101)
    for _ in range(300):
        pairs = [(rng.randint(-20, 20), rng.randint(0, 6))
                 for _ in range(rng.randint(1, 8))]
        if sum(w for _, w in pairs) == 0:
            continue
        assert weighted_median(pairs) == brute_median(pairs)


def test_gradients_match_slope_of_cost():
    # forward difference of the cost equals the gradient at the upper point
    # minus the weight sitting exactly there (it pulls neither way)
    rng = random.Random(102)
    for _ in range(100):
        demands = tuple(DemandPoint(rng.randint(0, 30), rng.randint(0, 30),
                                    rng.randint(0, 5))
                        for _ in range(rng.randint(1, 6)))
        for x in range(-1, 32):
            fwd = (manhattan_cost((x + 1, 0), demands)
                   - manhattan_cost((x, 0), demands))
            at = sum(d.buswidth for d in demands if d.x == x + 1)
            assert fwd == gradient_x(demands, x + 1) - at
        for y in range(-1, 32):
            fwd = (manhattan_cost((0, y + 1), demands)
                   - manhattan_cost((0, y), demands))
            at = sum(d.buswidth for d in demands if d.y == y + 1)
            assert fwd == gradient_y(demands, y + 1) - at


def test_median_axes_is_unconstrained_optimum():
    rng = random.Random(103)
    for _ in range(200):
        demands = tuple(DemandPoint(rng.randint(0, 24), rng.randint(0, 24),
                                    rng.randint(0, 5))
                        for _ in range(rng.randint(1, 7)))
        if sum(d.buswidth for d in demands) == 0:
            continue
        axes = median_axes(demands)
        med_cost = manhattan_cost((axes.x_med, axes.y_med), demands)
        for _ in range(40):
            p = (rng.randint(-2, 26), rng.randint(-2, 26))
            assert manhattan_cost(p, demands) >= med_cost
        assert axes.x_med == brute_median([(d.x, d.buswidth) for d in demands])
        assert axes.y_med == brute_median([(d.y, d.buswidth) for d in demands])


def test_evaluate_costs_matches_direct_sum():
    rng = random.Random(104)
    for _ in range(200):
        demands = tuple(DemandPoint(rng.randint(0, 40), rng.randint(0, 40),
                                    rng.randint(0, 8))
                        for _ in range(rng.randint(0, 8)))
        points = [(rng.randint(-5, 45), rng.randint(-5, 45))
                  for _ in range(rng.randint(1, 12))]
        for p, cost in evaluate_costs(points, demands):
            assert cost == manhattan_cost(p, demands)


def test_place_feasible_median_short_circuit():
    chip = ChipConfig(16, 12)
    demands = (DemandPoint(6, 6, 2), DemandPoint(20, 10, 1))
    res = place(chip, [], PlacementRequest(4, 2, demands))
    assert res.placed
    assert res.center_doubled == (6, 6)
    assert res.cost == manhattan_cost((6, 6), demands)


def test_place_blocked_median_moves_to_contour():
    chip = ChipConfig(16, 12)
    mods = [Rect.from_external(5, 5, 3, 3)]
    req = PlacementRequest(4, 2, (DemandPoint(13, 13, 1),))
    res = place(chip, mods, req)
    assert res.center_doubled == (13, 8)
    assert res.cost == 5
    assert res.external_cost == 2.5


def test_place_zero_weight_takes_lexmin_vertex():
    chip = ChipConfig(16, 12)
    res = place(chip, [], PlacementRequest(4, 2))
    assert res.placed and res.cost == 0
    assert res.center_doubled == (4, 2)
    res2 = place(chip, [], PlacementRequest(4, 2, (DemandPoint(9, 9, 0),)))
    assert res2.center_doubled == (4, 2) and res2.cost == 0


def test_place_rejects_when_blocked():
    chip = ChipConfig(4, 4)
    res = place(chip, [Rect.from_external(0, 0, 4, 4)], PlacementRequest(1, 1))
    assert not res.placed
    assert res.center is None and res.cost is None


def test_place_center_is_feasible():
    rng = random.Random(105)
    for _ in range(200):
        chip, modules, request = random_instance(rng, 12, 6, max_demands=5)
        res = place(chip, modules, request)
        if res.placed:
            scene = expand_scene(chip, modules, request)
            assert is_feasible(scene, res.center_doubled)


def test_place_matches_grid_oracle():
    rng = random.Random(106)
    for _ in range(300):
        chip, modules, request = random_instance(rng, 12, 6, max_demands=5)
        res = place(chip, modules, request)
        oracle = grid_optimal_placement(chip, modules, request)
        if oracle is None:
            assert not res.placed, (chip, modules, request)
            continue
        assert res.placed, (chip, modules, request)
        if sum(d.buswidth for d in request.demands) == 0:
            assert res.cost == 0 == oracle[1]
            continue
        best_center, best_cost = oracle
        assert res.cost == best_cost, (chip, modules, request)
        assert res.center_doubled == best_center, (chip, modules, request)


def test_place_rejection_parity_with_raster():
    rng = random.Random(107)
    for _ in range(200):
        chip, modules, request = random_instance(rng, 10, 6)
        res = place(chip, modules, request)
        grid = raster_feasible_set(chip, modules, request)
        assert res.placed == grid.any_feasible()


def test_candidates_contain_an_optimal_point():
    # when the median is blocked an optimum always sits in the candidate set
    rng = random.Random(108)
    checked = 0
    while checked < 80:
        chip, modules, request = random_instance(rng, 12, 6, max_demands=4)
        if sum(d.buswidth for d in request.demands) == 0:
            continue
        oracle = grid_optimal_placement(chip, modules, request)
        if oracle is None:
            continue
        scene = expand_scene(chip, modules, request)
        axes = median_axes(request.demands)
        if is_feasible(scene, (axes.x_med, axes.y_med)):
            continue
        contour = find_contour_segments(scene)
        cand = candidates(scene, contour, axes)
        costs = dict(evaluate_costs(cand.coordinates(), request.demands))
        assert min(costs.values()) == oracle[1]
        checked += 1
