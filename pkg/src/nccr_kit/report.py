"""Figures and the tab-separated summary written by ``certify-all --figures``."""

from __future__ import annotations

import csv
from pathlib import Path

from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from .cm import betas_outside_up
from .staircase import strip_boxes
from .young import Diagram, GrContext, d_upp, fmt, path_heights, to_binary


def _save(fig: Figure, path: Path) -> Path:
    # fixed metadata keeps repeated runs byte-identical
    fig.savefig(path, dpi=120, metadata={"Software": None})
    return path


def plot_binary_path(alpha: Diagram, ctx: GrContext, path: Path) -> Path:
    """Lattice path of the binary word, with the vertex that starts the UP rotation."""
    bits = to_binary(alpha, ctx)
    xs, ys = [0], [0]
    for b in bits:
        xs.append(xs[-1] + (b == "0"))
        ys.append(ys[-1] + (b == "1"))
    heights = path_heights(bits, ctx.k)
    best = max(range(len(bits)), key=lambda i: heights[i])
    fig = Figure(figsize=(4.5, 4))
    ax = fig.add_subplot()
    ax.plot(xs, ys, "-o", color="black", ms=3)
    ax.plot([0, ctx.width], [0, ctx.k], "--", color="grey", lw=1)
    ax.plot([xs[best]], [ys[best]], "o", color="tab:red", ms=8)
    ax.set_xticks(range(ctx.width + 1))
    ax.set_yticks(range(ctx.k + 1))
    ax.set_xlabel("zeros")
    ax.set_ylabel("ones")
    ax.set_aspect("equal")
    ax.set_title(f"{fmt(alpha)}  word {bits}  d_upp = {d_upp(alpha, ctx)}", fontsize=9)
    return _save(fig, path)


def plot_staircase_strip(alpha: Diagram, ctx: GrContext, path: Path) -> Path:
    """The diagram with its n-box strip; each strip box shows its column."""
    cells = strip_boxes(alpha, ctx)
    ncols = max(max(c for _, c in cells), alpha[0])
    fig = Figure(figsize=(0.5 * ncols + 1, 0.5 * ctx.k + 1))
    ax = fig.add_subplot()
    for r, length in enumerate(alpha, start=1):
        for c in range(1, length + 1):
            ax.add_patch(Rectangle((c - 1, -r), 1, 1, facecolor="lightgrey", edgecolor="black"))
    for (r, c), col in sorted(cells.items()):
        ax.add_patch(Rectangle((c - 1, -r), 1, 1, facecolor="white", edgecolor="tab:blue"))
        ax.text(c - 0.5, -r + 0.5, str(col), ha="center", va="center", fontsize=8)
    ax.set_xlim(0, ncols)
    ax.set_ylim(-ctx.k, 0)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(f"staircase strip of {fmt(alpha)}, (n, k) = ({ctx.n}, {ctx.k})", fontsize=9)
    return _save(fig, path)


def _check(context: dict, name: str) -> dict | None:
    for c in context["checks"]:
        if c["name"] == name:
            return c
    return None


def plot_certification(bundle: dict, path: Path) -> Path:
    """Worst CM gap against n - k, and resolution depth against k(n-k) + 1."""
    labels, gaps, gap_bounds, depths, depth_bounds = [], [], [], [], []
    for ctx in bundle["contexts"]:
        labels.append(f"({ctx['n']},{ctx['k']})")
        cm = _check(ctx, "cm")
        res = _check(ctx, "resolve")
        gaps.append(cm["detail"]["worst_gap"] if cm else 0)
        gap_bounds.append(cm["detail"]["bound"] if cm else 0)
        depths.append(res["detail"]["max_depth"] if res else 0)
        depth_bounds.append(res["detail"]["bound"] or 0 if res else 0)
    xs = range(len(labels))
    fig = Figure(figsize=(max(5, 0.8 * len(labels) + 2), 6))
    top, bottom = fig.subplots(2, 1)
    for ax, vals, bounds, title in (
        (top, gaps, gap_bounds, "worst fundamental coefficient vs n - k"),
        (bottom, depths, depth_bounds, "max resolution depth vs k(n-k) + 1"),
    ):
        ax.bar(xs, vals, width=0.6, color="tab:blue", label="observed")
        ax.scatter(xs, bounds, color="tab:red", marker="_", s=400, label="bound")
        ax.set_xticks(list(xs))
        ax.set_xticklabels(labels)
        ax.set_title(title, fontsize=9)
        ax.legend(fontsize=7)
    fig.tight_layout()
    return _save(fig, path)


def write_summary_tsv(bundle: dict, path: Path) -> Path:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["n", "k", "check", "passed", "failures", "detail"])
        for ctx in bundle["contexts"]:
            for c in ctx["checks"]:
                detail = ";".join(
                    f"{key}={val}" for key, val in c["detail"].items() if not isinstance(val, (dict, list))
                )
                w.writerow([ctx["n"], ctx["k"], c["name"], int(c["passed"]), len(c["failures"]), detail])
    return path


def example_diagram(ctx: GrContext) -> Diagram | None:
    """The in-box diagram outside UP that needs the most rotations."""
    outside = betas_outside_up(ctx)
    if not outside:
        return None
    return max(outside, key=lambda a: (d_upp(a, ctx), a))


def write_figures(bundle: dict, outdir: str | Path) -> list[Path]:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = [write_summary_tsv(bundle, out / "summary.tsv"), plot_certification(bundle, out / "certification.png")]
    for c in bundle["contexts"]:
        ctx = GrContext(c["n"], c["k"])
        alpha = example_diagram(ctx)
        if alpha is None:
            continue
        tag = f"{ctx.n}_{ctx.k}"
        written.append(plot_binary_path(alpha, ctx, out / f"path_{tag}.png"))
        written.append(plot_staircase_strip(alpha, ctx, out / f"strip_{tag}.png"))
    return written
