"""Shared random-scene builders for the test suite."""

from __future__ import annotations

from rcplace.model import ChipConfig, DemandPoint, PlacementRequest, Rect


def random_layout(rng, chip, target, attempts_per_module=6):
    """Up to `target` pairwise interior-disjoint modules inside the chip."""
    modules = []
    for _ in range(target * attempts_per_module):
        if len(modules) >= target:
            break
        w = rng.randint(1, chip.width)
        h = rng.randint(1, chip.height)
        x = rng.randint(0, chip.width - w)
        y = rng.randint(0, chip.height - h)
        rect = Rect.from_external(x, y, w, h)
        if all(not rect.interior_overlaps(m) for m in modules):
            modules.append(rect)
    return modules


def random_instance(rng, max_side, max_modules, max_demands=0):
    """A random chip, disjoint layout, and fitting request."""
    chip = ChipConfig(rng.randint(1, max_side), rng.randint(1, max_side))
    modules = random_layout(rng, chip, rng.randint(0, max_modules))
    request_w = rng.randint(1, chip.width)
    request_h = rng.randint(1, chip.height)
    demands = tuple(
        DemandPoint(rng.randint(0, 2 * chip.width),
                    rng.randint(0, 2 * chip.height),
                    rng.randint(0, 9))
        for _ in range(rng.randint(0, max_demands)))
    return chip, modules, PlacementRequest(request_w, request_h, demands)


def grid_layout(chip, count, module_w=1, module_h=1, pitch=2):
    """Disjoint modules on a regular grid, for large-n scenes."""
    per_row = max(1, (chip.width - module_w) // pitch + 1)
    modules = []
    for i in range(count):
        x = (i % per_row) * pitch
        y = (i // per_row) * pitch
        if y + module_h > chip.height:
            break
        modules.append(Rect.from_external(x, y, module_w, module_h))
    return modules
