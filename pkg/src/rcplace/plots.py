"""Figure rendering for chip states, contours, and benchmark summaries.

All functions render to a file and return the path; matplotlib is imported
lazily with the Agg backend so importing the library never needs a display.
"""

from __future__ import annotations


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _draw_rect(ax, rect, **kwargs):
    from matplotlib.patches import Rectangle
    # doubled coords on the axes; halve for external display
    ax.add_patch(Rectangle((rect.x / 2, rect.y / 2), rect.w / 2, rect.h / 2,
                           **kwargs))


def plot_chip_state(chip, rects, path, center=None):
    """Placed modules on the chip outline; optionally mark a chosen center."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 6 * chip.height / chip.width))
    for rect in rects:
        _draw_rect(ax, rect, facecolor="tab:blue", edgecolor="black", alpha=0.6)
    if center is not None:
        ax.plot([center[0] / 2], [center[1] / 2], marker="*", markersize=14,
                color="tab:red")
    ax.set_xlim(0, chip.width)
    ax.set_ylim(0, chip.height)
    ax.set_aspect("equal")
    ax.set_title(f"chip {chip.width} x {chip.height}, {len(rects)} modules")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_contour(scene, contour, path):
    """Expanded blockers, the shrunk frame, and every contour segment.

    Degenerate (zero-length) segments are drawn as dots so seam corridors
    stay visible.
    """
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 7))
    _draw_rect(ax, scene.frame, facecolor="none", edgecolor="gray",
               linestyle="--")
    for rect in scene.modules:
        _draw_rect(ax, rect, facecolor="tab:orange", edgecolor="none",
                   alpha=0.4)
    for x, y1, y2 in contour.vertical_segments:
        if y1 == y2:
            ax.plot([x / 2], [y1 / 2], marker="o", markersize=3, color="tab:green")
        else:
            ax.plot([x / 2, x / 2], [y1 / 2, y2 / 2], color="tab:green", linewidth=2)
    for y, x1, x2 in contour.horizontal_segments:
        if x1 == x2:
            ax.plot([x1 / 2], [y / 2], marker="o", markersize=3, color="tab:green")
        else:
            ax.plot([x1 / 2, x2 / 2], [y / 2, y / 2], color="tab:green", linewidth=2)
    pad = 1
    ax.set_xlim(scene.frame.x / 2 - pad, scene.frame.x2 / 2 + pad)
    ax.set_ylim(scene.frame.y / 2 - pad, scene.frame.y2 / 2 + pad)
    ax.set_aspect("equal")
    ax.set_title(f"{contour.segment_count} contour segments")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_bench_summary(reports, path):
    """Grouped bars of average cost and rejection rate per distribution."""
    plt = _pyplot()
    algorithms = []
    distributions = []
    for r in reports:
        if r.algorithm not in algorithms:
            algorithms.append(r.algorithm)
        if r.distribution not in distributions:
            distributions.append(r.distribution)

    def mean_over(metric, dist, algo):
        vals = [getattr(r, metric) for r in reports
                if r.distribution == dist and r.algorithm == algo]
        return sum(vals) / len(vals) if vals else 0.0

    fig, (ax_cost, ax_rej) = plt.subplots(1, 2, figsize=(12, 5))
    width = 0.8 / max(len(algorithms), 1)
    for k, algo in enumerate(algorithms):
        xs = [i + k * width for i in range(len(distributions))]
        ax_cost.bar(xs, [mean_over("avg_cost", d, algo) for d in distributions],
                    width=width, label=algo)
        ax_rej.bar(xs, [mean_over("rejection_pct", d, algo) for d in distributions],
                   width=width, label=algo)
    for ax, label in ((ax_cost, "mean routing cost"),
                      (ax_rej, "mean rejection %")):
        ax.set_xticks([i + 0.4 - width / 2 for i in range(len(distributions))])
        ax.set_xticklabels(distributions, rotation=30, ha="right")
        ax.set_ylabel(label)
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
