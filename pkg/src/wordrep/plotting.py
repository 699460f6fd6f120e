"""Matplotlib figures for the CLI report paths."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

STATUS_COLORS = {
    "representable": "#2ca02c",
    "non_representable": "#d62728",
    "unknown": "#7f7f7f",
}


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_adjacency(graph, path, title: str | None = None) -> Path:
    """Adjacency matrix as a black/white grid, vertex 1 at the top left."""
    n = graph.n
    fig, ax = plt.subplots(figsize=(0.35 * n + 1.5, 0.35 * n + 1.5))
    ax.imshow(np.array(graph.matrix(), dtype=int), cmap=ListedColormap(["white", "black"]),
              vmin=0, vmax=1, interpolation="nearest")
    ax.set_xticks(range(n), labels=[str(i) for i in range(1, n + 1)], fontsize=7)
    ax.set_yticks(range(n), labels=[str(i) for i in range(1, n + 1)], fontsize=7)
    ax.set_xticks(np.arange(-0.5, n, 1), minor=True)
    ax.set_yticks(np.arange(-0.5, n, 1), minor=True)
    ax.grid(which="minor", color="0.7", linewidth=0.5)
    ax.tick_params(which="minor", length=0)
    if title:
        ax.set_title(title)
    return _save(fig, path)


def plot_scan(summary, path) -> Path:
    """Status of every pattern in a family scan, plus method counts."""
    m, n = summary.m, summary.n
    by_source = {r.source: r for r in summary.records}
    total = 2 ** m
    cols = 2 ** ((m + 1) // 2)
    rows = total // cols
    grid = np.zeros((rows, cols), dtype=int)
    order = list(STATUS_COLORS)
    for i in range(total):
        rec = by_source.get(format(i, f"0{m}b"))
        grid[i // cols, i % cols] = order.index(rec.status if rec else "unknown")

    fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(11, 4), gridspec_kw={"width_ratios": [2, 1]})
    ax0.imshow(grid, cmap=ListedColormap([STATUS_COLORS[s] for s in order]), vmin=0,
               vmax=len(order) - 1, interpolation="nearest", aspect="auto")
    ax0.set_title(f"patterns of length {m} at n = {n} (row-major by binary value)")
    ax0.set_xticks([])
    ax0.set_yticks([])
    handles = [plt.Rectangle((0, 0), 1, 1, color=STATUS_COLORS[s]) for s in order]
    ax0.legend(handles, [f"{s} ({summary.counts.get(s, 0)})" for s in order],
               loc="upper center", bbox_to_anchor=(0.5, -0.02), ncol=3, fontsize=8, frameon=False)

    names = sorted(summary.methods)
    ax1.barh(names, [summary.methods[k] for k in names], color="#1f77b4")
    ax1.set_xlabel("patterns")
    ax1.set_title("decided by")
    ax1.tick_params(axis="y", labelsize=8)
    return _save(fig, path)


def plot_iwr(source_text: str, result, path) -> Path:
    """Per-n status along an index-of-word-representability scan."""
    ns = [r.n for r in result.records]
    fig, ax = plt.subplots(figsize=(6, 2.5))
    for r in result.records:
        ax.scatter(r.n, 1 if r.representable else 0, color=STATUS_COLORS[r.status], zorder=3)
    ax.step(ns, [1 if r.representable else 0 for r in result.records], where="mid", color="0.6")
    ax.set_yticks([0, 1], labels=["non-representable", "representable"])
    ax.set_xlabel("n")
    ax.set_ylim(-0.5, 1.5)
    ax.set_title(f"{source_text}: IWR {result}")
    return _save(fig, path)
