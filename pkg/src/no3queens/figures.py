"""Matplotlib figure output for boards and result tables.

Kept separate from the core library so nothing else imports matplotlib.
Figures are written straight to files with the Agg backend; no display
is ever opened.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle

from .geometry import Placement

_LIGHT = "#f0d9b5"
_DARK = "#b58863"


def save_board_figure(placement: Placement, path: str, title: str | None = None) -> None:
    n = placement.n
    occupied = placement.queens
    fig, ax = plt.subplots(figsize=(max(2.5, 0.6 * n), max(2.5, 0.6 * n)))
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            color = _LIGHT if (x + y) % 2 == 0 else _DARK
            ax.add_patch(Rectangle((x - 0.5, y - 0.5), 1, 1, facecolor=color))
    for x, y in sorted(occupied):
        ax.text(x, y, "♛", fontsize=max(10, 220 // n),
                ha="center", va="center")
    ax.set_xlim(0.5, n + 0.5)
    ax.set_ylim(0.5, n + 0.5)
    ax.set_xticks(range(1, n + 1))
    ax.set_yticks(range(1, n + 1))
    ax.set_aspect("equal")
    ax.tick_params(length=0)
    for spine in ax.spines.values():
        spine.set_visible(False)
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)


def save_table_figure(entries: list[dict], path: str, title: str | None = None) -> None:
    """Bar chart of minimum good placement sizes against the lower bound.

    Each entry carries "n", "lower_bound", and either "minimum" or
    ("minimum_at_least", "minimum_at_most") for unresolved rows.
    """
    ns = [e["n"] for e in entries]
    fig, ax = plt.subplots(figsize=(max(3.0, 0.9 * len(ns) + 1.0), 3.6))
    for e in entries:
        n = e["n"]
        if "minimum" in e:
            ax.bar(n, e["minimum"], color="#4878a8", width=0.62)
        else:
            lo, hi = e["minimum_at_least"], e["minimum_at_most"]
            ax.bar(n, lo, color="#9fb8cc", width=0.62)
            ax.bar(n, hi - lo, bottom=lo, color="#9fb8cc", width=0.62,
                   hatch="//", edgecolor="white")
    ax.plot(ns, [e["lower_bound"] for e in entries], "k_", markersize=14,
            label="lower bound")
    ax.set_xlabel("board side n")
    ax.set_ylabel("queens")
    ax.set_xticks(ns)
    ax.legend(loc="upper left")
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
