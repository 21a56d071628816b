"""Matplotlib figures for reports: Hasse diagrams and quotient maps.

Figures are written to files only; the Agg backend is selected so this works
without a display.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .hasse import hasse_classes, node_name  # noqa: E402

FONT_SIZE = 10


def _levels(k: int, covers: list[tuple[int, int]]) -> list[int]:
    below: dict[int, list[int]] = {j: [] for j in range(k)}
    for i, j in covers:
        below[j].append(i)
    level: dict[int, int] = {}

    def depth(j: int) -> int:
        if j not in level:
            level[j] = 1 + max((depth(i) for i in below[j]), default=-1)
        return level[j]

    return [depth(j) for j in range(k)]


def draw_hasse(space, ax, title: str | None = None) -> None:
    """Draw the Hasse diagram of ``space`` on ``ax``; larger points sit higher."""
    groups, covers = hasse_classes(space)
    k = len(groups)
    levels = _levels(k, covers)
    rows: dict[int, list[int]] = {}
    for j, lv in enumerate(levels):
        rows.setdefault(lv, []).append(j)
    pos = {}
    for lv, members in rows.items():
        for slot, j in enumerate(members):
            pos[j] = (slot - (len(members) - 1) / 2, lv)
    for i, j in covers:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="0.4", lw=1.2, zorder=1)
    for j, (x, y) in pos.items():
        ax.scatter([x], [y], s=260, color="white", edgecolor="k", zorder=2)
        ax.annotate(node_name(space, groups[j]), (x, y), ha="center", va="center",
                    fontsize=FONT_SIZE, zorder=3)
    width = max((len(m) for m in rows.values()), default=1)
    ax.set_xlim(-width / 2 - 0.2, width / 2 + 0.2)
    ax.set_ylim(-0.6, max(levels, default=0) + 0.6)
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=FONT_SIZE)


def save_hasse(space, path, title: str | None = None) -> None:
    fig, ax = plt.subplots(figsize=(3, 3))
    draw_hasse(space, ax, title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_hasse_grid(spaces, titles, path, ncols: int = 5) -> None:
    """One small Hasse diagram per space, laid out on a grid."""
    spaces = list(spaces)
    ncols = max(1, min(ncols, len(spaces)))
    nrows = max(1, math.ceil(len(spaces) / ncols))
    fig, axes = plt.subplots(nrows, ncols, figsize=(2.2 * ncols, 2.2 * nrows), squeeze=False)
    for ax in axes.flat:
        ax.set_axis_off()
    for ax, space, title in zip(axes.flat, spaces, titles):
        draw_hasse(space, ax, title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_quotient_plot(f, q, path) -> None:
    """Graph of a piecewise-linear map with the quotient's cut grid behind it."""
    fig, ax = plt.subplots(figsize=(4, 4))
    for t in q.cuts:
        ax.axvline(float(t), color="0.85", lw=0.8, zorder=0)
        ax.axhline(float(t), color="0.85", lw=0.8, zorder=0)
    ax.plot([float(x) for x in f.breakpoints], [float(y) for y in f.values], color="C0", lw=1.6)
    labels = q.cot_space.labels
    for p in range(q.n):
        fib = q.fiber(p)
        mid = (fib.lo + fib.hi) / 2 if fib.lo != fib.hi else fib.lo
        ax.annotate(labels[p], (float(mid), -0.06), ha="center", fontsize=FONT_SIZE,
                    annotation_clip=False)
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("f(x)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
