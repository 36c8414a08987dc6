"""Benchmark instance generator and temporal-placement simulator.

generate() draws 100 timed requests for an 80x120 chip from a named size
distribution; simulate() replays them against one placement algorithm,
retiring modules whose lifetime has elapsed and charging every algorithm the
same buswidth-weighted Manhattan cost.  All randomness lives in generate();
simulate() is deterministic given the instance.
"""

from __future__ import annotations

import csv
import io
import math
import random
import statistics
import time
from dataclasses import dataclass
from multiprocessing import Pool

from .baselines import kamer_first_fit, nao_heuristic
from .instance_io import BORDER_EDGES, InstanceDoc, ModuleSpec
from .model import ChipConfig, DemandPoint, PlacementRequest, Rect, validate_layout
from .placer import place

BENCH_CHIP = ChipConfig(80, 120)
REQUEST_COUNT = 100
LIFETIME_RANGE = (4, 100)
BUSWIDTH_RANGE = (0, 10)
ASPECT_RANGE = (0.5, 2.0)

# tag -> (min area %, max area %, arrival order)
DISTRIBUTIONS = {
    "uniform5-10": (5, 10, None),
    "uniform10-15": (10, 15, None),
    "uniform15-20": (15, 20, None),
    "uniform20-25": (20, 25, None),
    "uniform5-25": (5, 25, None),
    "increasing5-25": (5, 25, "asc"),
    "decreasing25-5": (5, 25, "desc"),
}

ALGORITHMS = ("rcp", "kff", "nao")


def _draw_dims(rng, chip, lo_area, hi_area):
    """Integer dims whose product lands in [lo_area, hi_area] and fits the chip."""
    while True:
        area = rng.uniform(lo_area, hi_area)
        aspect = rng.uniform(*ASPECT_RANGE)
        w = round(math.sqrt(area * aspect))
        h = round(math.sqrt(area / aspect))
        if (1 <= w <= chip.width and 1 <= h <= chip.height
                and lo_area <= w * h <= hi_area):
            return w, h


def generate(distribution, seed):
    """Deterministic benchmark instance for a distribution tag and seed."""
    if distribution not in DISTRIBUTIONS:
        raise ValueError(f"unknown distribution {distribution!r}")
    lo_pct, hi_pct, order = DISTRIBUTIONS[distribution]
    chip = BENCH_CHIP
    total_area = chip.width * chip.height
    lo_area = total_area * min(lo_pct, hi_pct) / 100
    hi_area = total_area * max(lo_pct, hi_pct) / 100
    rng = random.Random(f"{distribution}:{seed}")
    drawn = [(*_draw_dims(rng, chip, lo_area, hi_area),
              rng.randint(*LIFETIME_RANGE)) for _ in range(REQUEST_COUNT)]
    if order == "asc":
        drawn.sort(key=lambda d: d[0] * d[1])
    elif order == "desc":
        drawn.sort(key=lambda d: -d[0] * d[1])
    modules = []
    for i, (w, h, lifetime) in enumerate(drawn):
        buswidths = {"border": rng.randint(*BUSWIDTH_RANGE)}
        for j in range(i):
            buswidths[f"m{j:02d}"] = rng.randint(*BUSWIDTH_RANGE)
        modules.append(ModuleSpec(
            id=f"m{i:02d}", arrival_index=i, width=w, height=h,
            lifetime=lifetime, border_edge=rng.choice(BORDER_EDGES),
            buswidths=buswidths))
    return InstanceDoc(chip=chip, modules=tuple(modules),
                       distribution=distribution, seed=seed)


def border_demand(chip, edge, buswidth):
    """Demand point at the midpoint of a chip edge, in doubled coordinates."""
    midpoints = {
        "left": (0, chip.height),
        "right": (2 * chip.width, chip.height),
        "bottom": (chip.width, 0),
        "top": (chip.width, 2 * chip.height),
    }
    return DemandPoint(*midpoints[edge], buswidth)


def demands_for(chip, spec, alive):
    """Demand points of a request: one per live module it communicates with,
    plus its border demand.  Modules missing from the buswidth map are not
    communication partners."""
    demands = []
    for mod_id, rect, _ in alive:
        if mod_id in spec.buswidths:
            center = (rect.x + rect.w // 2, rect.y + rect.h // 2)
            demands.append(DemandPoint(*center, spec.buswidths[mod_id]))
    if "border" in spec.buswidths:
        demands.append(border_demand(chip, spec.border_edge,
                                     spec.buswidths["border"]))
    return tuple(demands)


def _dispatch(algorithm, chip, rects, request):
    if algorithm == "rcp":
        return place(chip, rects, request)
    if algorithm == "kff":
        return kamer_first_fit(chip, rects, request)
    if algorithm == "nao":
        return nao_heuristic(chip, rects, request)
    raise ValueError(f"unknown algorithm {algorithm!r}")


@dataclass(frozen=True)
class SimulationReport:
    """Outcome of one instance under one algorithm."""

    distribution: str | None
    seed: int | None
    algorithm: str
    time_ms: float
    avg_cost: float
    rejection_pct: float
    placed_count: int
    rejected_count: int
    steps: tuple  # one PlacementResult per request, in arrival order
    final_rects: tuple = ()  # modules still on the chip after the last step


def simulate(instance, algorithm, check_state=False):
    """Replay an instance's requests against one algorithm.

    Modules placed at step t with lifetime L leave before step t+L; rejected
    requests still advance the step counter and are not retried.
    """
    chip = instance.chip
    alive = [(m.id, Rect.from_external(m.x, m.y, m.width, m.height), math.inf)
             for m in instance.placed]
    requests = instance.requests
    steps = []
    costs = []
    rejected = 0
    start = time.perf_counter()
    for step, spec in enumerate(requests):
        alive = [entry for entry in alive if entry[2] > step]
        request = PlacementRequest(spec.width, spec.height,
                                   demands_for(chip, spec, alive))
        result = _dispatch(algorithm, chip, [r for _, r, _ in alive], request)
        steps.append(result)
        if result.placed:
            cx, cy = result.center_doubled
            rect = Rect(cx - spec.width, cy - spec.height,
                        2 * spec.width, 2 * spec.height)
            alive.append((spec.id, rect, step + spec.lifetime))
            costs.append(result.external_cost)
        else:
            rejected += 1
        if check_state:
            validate_layout(chip, [r for _, r, _ in alive])
    elapsed_ms = (time.perf_counter() - start) * 1000
    placed = len(requests) - rejected
    return SimulationReport(
        distribution=instance.distribution, seed=instance.seed,
        algorithm=algorithm, time_ms=elapsed_ms,
        avg_cost=sum(costs) / placed if placed else 0.0,
        rejection_pct=100 * rejected / len(requests) if requests else 0.0,
        placed_count=placed, rejected_count=rejected, steps=tuple(steps),
        final_rects=tuple(r for _, r, _ in alive))


def _run_one(task):
    distribution, seed, algorithms = task
    instance = generate(distribution, seed)
    return [simulate(instance, a) for a in algorithms]


def run_benchmark(distributions, seeds, algorithms=ALGORITHMS, jobs=1):
    """Simulate every (distribution, seed) pair under each algorithm.

    Reports come back in deterministic order: distribution, then seed, then
    algorithm, regardless of worker count.
    """
    tasks = [(d, s, tuple(algorithms)) for d in distributions for s in seeds]
    if jobs > 1:
        with Pool(jobs) as pool:
            grouped = pool.map(_run_one, tasks)
    else:
        grouped = [_run_one(t) for t in tasks]
    return [report for group in grouped for report in group]


def reports_to_csv(reports):
    """Render reports as CSV with one row per (instance, algorithm)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["distribution", "seed", "algorithm", "time_ms",
                     "avg_cost", "rejection_pct"])
    for r in reports:
        writer.writerow([r.distribution, r.seed, r.algorithm,
                         f"{r.time_ms:.3f}", f"{r.avg_cost:.6g}",
                         f"{r.rejection_pct:.6g}"])
    return out.getvalue()


def synthetic_scene(n, seed=0):
    """A chip packed with n disjoint unit modules on an even grid, plus a
    fixed small demand set; used for runtime scaling measurements."""
    side = math.isqrt(n - 1) + 1 if n > 1 else 1
    chip = ChipConfig(2 * side, 2 * side)
    modules = [Rect.from_external(2 * (i % side), 2 * (i // side), 1, 1)
               for i in range(n)]
    rng = random.Random(seed)
    demands = tuple(
        DemandPoint(rng.randrange(0, 4 * side + 1),
                    rng.randrange(0, 4 * side + 1),
                    rng.randint(1, 10))
        for _ in range(4))
    return chip, modules, PlacementRequest(1, 1, demands)


def scaling_probe(sizes=(1000, 2000, 4000, 8000), repeats=5, seed=0):
    """Median place() wall time in seconds for each scene size."""
    medians = {}
    for n in sizes:
        chip, modules, request = synthetic_scene(n, seed)
        samples = []
        for _ in range(repeats):
            start = time.perf_counter()
            place(chip, modules, request)
            samples.append(time.perf_counter() - start)
        medians[n] = statistics.median(samples)
    return medians
