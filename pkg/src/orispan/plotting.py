"""Figure rendering for point sets and oriented graphs.

Matplotlib renders to whatever the output extension asks for; SVG is the
default in the CLI.  1D sets are drawn book-embedding style: points on a
line, consecutive edges straight on it, longer edges as arcs (back edges
above, forward skips below), arrowheads giving the direction.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.patches import FancyArrowPatch

from .geometry import PointSet


def _positions(pts: PointSet) -> np.ndarray:
    if pts.dim == 1:
        xs = pts.xs
        return np.column_stack([xs, np.zeros_like(xs)])
    return np.asarray(pts.coords)


def render_graph(pts: PointSet, edges, path: str, title: str | None = None) -> None:
    """Draw the points (labelled by index) and the directed edges to a file."""
    pos = _positions(pts)
    span = max(pos[:, 0].max() - pos[:, 0].min(), 1e-9)

    fig, ax = plt.subplots(figsize=(8, 5 if pts.dim == 2 else 4))
    ax.scatter(pos[:, 0], pos[:, 1], s=28, color="black", zorder=3)
    offset = 0.03 * span
    for i, (x, y) in enumerate(pos):
        ax.annotate(str(i), (x, y), (x, y - offset), ha="center", fontsize=9, zorder=4)

    order = np.argsort(pos[:, 0], kind="stable")
    rank = np.empty(len(pos), dtype=int)
    rank[order] = np.arange(len(pos))

    for u, v in edges:
        straight = pts.dim == 2 or abs(int(rank[u]) - int(rank[v])) == 1
        if straight:
            rad = 0.0
        else:
            # arc3 bulges to the left of the arrow: leftward edges (back
            # edges) need a negative rad to arc above the baseline.
            rad = -0.35 if pos[u, 0] > pos[v, 0] else 0.35
        arrow = FancyArrowPatch(
            pos[u],
            pos[v],
            connectionstyle=f"arc3,rad={rad}",
            arrowstyle="-|>",
            mutation_scale=11,
            shrinkA=4,
            shrinkB=4,
            lw=0.9,
            color="tab:blue" if rad else "dimgray",
            zorder=2,
        )
        ax.add_patch(arrow)

    ax.set_aspect("equal" if pts.dim == 2 else "auto")
    ax.autoscale()
    if pts.dim == 1:
        ax.set_ylim(-0.45 * span, 0.45 * span)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
