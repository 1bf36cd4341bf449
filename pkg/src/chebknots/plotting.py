"""SVG figures of the curves ``(T_i, T_j)`` and of knot diagrams over them.

Drawing is done in floating point; only the node markers come from exact
data.  Under-strands are interrupted by a fixed-radius gap around each
crossing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .diagram import CrossingSequence, node_partner_positions  # noqa: E402
from .geometry import nodes, preimage_parameters  # noqa: E402

T_RANGE = (-1.05, 1.05)
GAP_RADIUS = 0.045


@dataclass
class FigureInfo:
    path: str
    samples: int
    nodes: int
    gaps: int

    def to_json(self) -> dict:
        return {"path": self.path, "samples": self.samples, "nodes": self.nodes, "gaps": self.gaps}


def cheb_float(n: int, t: float) -> float:
    """``T_n(t)`` for any real ``t``."""
    if abs(t) <= 1:
        return math.cos(n * math.acos(t))
    v = math.cosh(n * math.acosh(abs(t)))
    return -v if (t < 0 and n % 2) else v


def _under_parameters(i: int, j: int, seq: CrossingSequence) -> list[float]:
    params = preimage_parameters(i, j)
    partner = node_partner_positions(i, j)
    return [float(params[m]) for m in range(len(params)) if seq[m] < 0 and partner[m] != m]


def render_svg(
    i: int,
    j: int,
    path,
    seq: Optional[CrossingSequence] = None,
    samples: Optional[int] = None,
    title: Optional[str] = None,
) -> FigureInfo:
    """Write the curve ``(T_i, T_j)`` to ``path`` as SVG.

    With a crossing sequence the under-strand at every node is cut open.
    """
    count = samples or 64 * (i + j)
    lo, hi = T_RANGE
    ts = [lo + (hi - lo) * s / (count - 1) for s in range(count)]
    pts = [(cheb_float(i, t), cheb_float(j, t)) for t in ts]

    unders: Sequence[float] = _under_parameters(i, j, seq) if seq is not None else ()
    node_list = nodes(i, j)
    params = sorted(float(p) for p in preimage_parameters(i, j))
    # strands through a node are told apart by their parameter
    dt = min((b - a for a, b in zip(params, params[1:])), default=1.0) / 2

    def hidden(t, x, y):
        for tu in unders:
            if abs(t - tu) < dt:
                xu, yu = cheb_float(i, tu), cheb_float(j, tu)
                if math.hypot(x - xu, y - yu) < GAP_RADIUS:
                    return True
        return False

    fig, ax = plt.subplots(figsize=(5, 5))
    run_x, run_y = [], []
    for t, (x, y) in zip(ts, pts):
        if unders and hidden(t, x, y):
            if run_x:
                ax.plot(run_x, run_y, color="black", linewidth=1.2)
            run_x, run_y = [], []
            continue
        run_x.append(x)
        run_y.append(y)
    if run_x:
        ax.plot(run_x, run_y, color="black", linewidth=1.2)

    if seq is None:
        ax.scatter([float(nd.x) for nd in node_list], [float(nd.y) for nd in node_list], s=14, color="tab:red", zorder=3)
    ax.set_aspect("equal")
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-1.25, 1.25)
    ax.set_axis_off()
    ax.set_title(title or f"(T_{i}, T_{j})")
    fig.savefig(path, format="svg")
    plt.close(fig)
    return FigureInfo(str(path), count, len(node_list), len(unders))
