"""Command-line frontend: generate | place | simulate | bench | contour-dump.

Every subcommand that writes a report file also renders a companion figure
next to it (same path, .png suffix) unless --no-figure is given.  All
randomness flows from --seed, so identical invocations produce identical
output apart from wall-clock columns.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from .bench import (ALGORITHMS, DISTRIBUTIONS, demands_for, generate,
                    reports_to_csv, run_benchmark, simulate)
from .contour import find_contour_segments, is_feasible, vertex_points
from .instance_io import ParseError, parse_instance, write_instance
from .model import (InvalidInput, PlacementRequest, Rect, expand_scene,
                    validate_layout)
from .placer import candidates, median_axes, place


def _fmt_half(doubled):
    """Render a doubled coordinate in external units: 7 -> 3.5, 8 -> 4."""
    return str(doubled // 2) if doubled % 2 == 0 else str(doubled / 2)


def _load_instance(path):
    doc = parse_instance(Path(path).read_bytes())
    rects = [Rect.from_external(m.x, m.y, m.width, m.height) for m in doc.placed]
    validate_layout(doc.chip, rects)
    return doc, rects


def _emit(text, out_path):
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _figure_path(out_path):
    return Path(out_path).with_suffix(".png")


def cmd_generate(args):
    doc = generate(args.distribution, args.seed)
    data = write_instance(doc)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def cmd_place(args):
    doc, rects = _load_instance(args.infile)
    requests = doc.requests
    if not requests:
        raise InvalidInput("instance has no unplaced request entry")
    spec = requests[0]
    alive = [(m.id, r, math.inf) for m, r in zip(doc.placed, rects)]
    request = PlacementRequest(spec.width, spec.height,
                               demands_for(doc.chip, spec, alive))
    result = place(doc.chip, rects, request)
    lines = [f"request: {spec.id} ({spec.width} x {spec.height})",
             f"status: {result.status}"]
    if result.placed:
        cx, cy = result.center_doubled
        lines.append(f"center: {_fmt_half(cx)} {_fmt_half(cy)}")
        lines.append(f"cost: {_fmt_half(result.cost)}")
        lines.append(f"candidates: {_candidate_count(doc.chip, rects, request)}")
    sys.stdout.write("\n".join(lines) + "\n")
    if args.figure:
        from .plots import plot_chip_state
        shown = list(rects)
        if result.placed:
            cx, cy = result.center_doubled
            shown.append(Rect(cx - spec.width, cy - spec.height,
                              2 * spec.width, 2 * spec.height))
        plot_chip_state(doc.chip, shown, args.figure,
                        center=result.center_doubled if result.placed else None)
    return 0


def _candidate_count(chip, rects, request):
    """Size of the candidate set the placer would evaluate; 1 when the
    weighted median itself is feasible."""
    scene = expand_scene(chip, rects, request)
    contour = find_contour_segments(scene)
    if contour.is_empty:
        return 0
    if sum(d.buswidth for d in request.demands) == 0:
        return len(vertex_points(contour))
    axes = median_axes(request.demands)
    if is_feasible(scene, (axes.x_med, axes.y_med)):
        return 1
    return len(candidates(scene, contour, axes))


def _reports_out(reports, args):
    if args.format == "json":
        rows = [{"distribution": r.distribution, "seed": r.seed,
                 "algorithm": r.algorithm, "time_ms": round(r.time_ms, 3),
                 "avg_cost": r.avg_cost, "rejection_pct": r.rejection_pct}
                for r in reports]
        return json.dumps(rows, indent=2) + "\n"
    return reports_to_csv(reports)


def cmd_simulate(args):
    doc, _ = _load_instance(args.infile)
    report = simulate(doc, args.algorithm)
    _emit(_reports_out([report], args), args.out)
    if args.out and not args.no_figure:
        from .plots import plot_chip_state
        plot_chip_state(doc.chip, report.final_rects, _figure_path(args.out))
    return 0


def cmd_bench(args):
    distributions = list(DISTRIBUTIONS) if args.distribution == "all" \
        else [args.distribution]
    seeds = range(args.seed, args.seed + args.runs)
    reports = run_benchmark(distributions, seeds, jobs=args.jobs)
    _emit(_reports_out(reports, args), args.out)
    if args.out and not args.no_figure:
        from .plots import plot_bench_summary
        plot_bench_summary(reports, _figure_path(args.out))
    return 0


def cmd_contour_dump(args):
    doc, rects = _load_instance(args.infile)
    if not doc.requests:
        raise InvalidInput("instance has no unplaced request entry")
    spec = doc.requests[0]
    scene = expand_scene(doc.chip, rects,
                         PlacementRequest(spec.width, spec.height))
    contour = find_contour_segments(scene)
    if args.format == "json":
        payload = {
            "vertical": [[_fmt_half(x), _fmt_half(y1), _fmt_half(y2)]
                         for x, y1, y2 in contour.vertical_segments],
            "horizontal": [[_fmt_half(y), _fmt_half(x1), _fmt_half(x2)]
                           for y, x1, x2 in contour.horizontal_segments],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "coord", "lo", "hi"])
        for x, y1, y2 in contour.vertical_segments:
            writer.writerow(["v", _fmt_half(x), _fmt_half(y1), _fmt_half(y2)])
        for y, x1, x2 in contour.horizontal_segments:
            writer.writerow(["h", _fmt_half(y), _fmt_half(x1), _fmt_half(x2)])
        text = buf.getvalue()
    _emit(text, args.out)
    if args.out and not args.no_figure:
        from .plots import plot_contour
        plot_contour(scene, contour, _figure_path(args.out))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rcplace",
        description="Free-space management and routing-conscious placement "
                    "for reconfigurable chips.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a benchmark instance file")
    p.add_argument("--distribution", choices=sorted(DISTRIBUTIONS),
                   required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("place", help="place the first request of an instance")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--figure", help="render the resulting chip state to a file")
    p.set_defaults(func=cmd_place)

    p = sub.add_parser("simulate", help="replay one instance file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--algorithm", choices=ALGORITHMS, default="rcp")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="report path (default stdout); also renders "
                                 "a .png figure next to it")
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bench", help="run the benchmark protocol")
    p.add_argument("--distribution", choices=["all", *sorted(DISTRIBUTIONS)],
                   default="all")
    p.add_argument("--runs", type=int, default=1, help="seeds per distribution")
    p.add_argument("--seed", type=int, default=0, help="first seed")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="report path (default stdout); also renders "
                                 "a .png figure next to it")
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("contour-dump",
                       help="dump free-space contour segments for the first "
                            "request of an instance")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default stdout); also renders "
                                 "a .png figure next to it")
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(func=cmd_contour_dump)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInput, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
