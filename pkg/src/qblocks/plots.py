"""Figure rendering for block charts and truncated zigzag quivers.

Both renderers draw the vertices of a finite window on a horizontal line
and the nearest-neighbour arrows between them.  Figures are built on
matplotlib's object API directly, so no interactive backend is needed.
"""

from __future__ import annotations

from matplotlib.figure import Figure
from matplotlib.patches import FancyArrowPatch

from .blockone import BlockChart
from .zigzag import ZigzagAlgebra

__all__ = ["chart_figure", "zigzag_figure", "save_figure"]


def _arrow(axes, start, end, rad, color):
    patch = FancyArrowPatch(
        start, end, connectionstyle=f"arc3,rad={rad}",
        arrowstyle="-|>", mutation_scale=12, lw=1.2,
        color=color, shrinkA=10, shrinkB=10)
    axes.add_patch(patch)


def chart_figure(chart: BlockChart) -> Figure:
    """One panel: window vertices labelled by weight, quiver edges above
    and below the axis, boundary vertices hollow."""
    positions = range(-chart.window, chart.window + 1)
    fig = Figure(figsize=(max(4.0, 1.6 * len(positions)), 3.2))
    axes = fig.add_subplot(111)
    for i in positions:
        hollow = i in chart.boundary
        axes.plot([i], [0], marker="o", markersize=9,
                  markerfacecolor="white" if hollow else "#1f6fb2",
                  markeredgecolor="#1f6fb2")
        axes.annotate(chart.weight_at(i).text(), (i, 0),
                      textcoords="offset points", xytext=(0, -22),
                      ha="center", fontsize=8)
    for i, j in chart.edges:
        _arrow(axes, (i, 0), (j, 0), 0.35, "#1f6fb2")
        _arrow(axes, (j, 0), (i, 0), 0.35, "#b25e1f")
    axes.set_title(f"block of {chart.center.text()}, window {chart.window}")
    axes.set_xlim(-chart.window - 0.8, chart.window + 0.8)
    axes.set_ylim(-1.1, 1.1)
    axes.set_axis_off()
    return fig


def zigzag_figure(algebra: ZigzagAlgebra) -> Figure:
    """Vertices with loop labels, right arrows drawn above the axis and
    left arrows below."""
    positions = list(algebra.vertices())
    fig = Figure(figsize=(max(4.0, 1.6 * len(positions)), 3.2))
    axes = fig.add_subplot(111)
    for i in positions:
        axes.plot([i], [0], marker="o", markersize=9,
                  markerfacecolor="#1f6fb2", markeredgecolor="#1f6fb2")
        axes.annotate(f"Z{i}", (i, 0), textcoords="offset points",
                      xytext=(0, -22), ha="center", fontsize=8)
    for i in positions[:-1]:
        _arrow(axes, (i, 0), (i + 1, 0), 0.35, "#1f6fb2")
        _arrow(axes, (i + 1, 0), (i, 0), 0.35, "#b25e1f")
        axes.annotate(f"X{i}", (i + 0.5, 0.42), ha="center",
                      fontsize=8, color="#1f6fb2")
        axes.annotate(f"Y{i}", (i + 0.5, -0.52), ha="center",
                      fontsize=8, color="#b25e1f")
    axes.set_title(
        f"zigzag window {algebra.window}, dimension {algebra.dimension}")
    axes.set_xlim(min(positions) - 0.8, max(positions) + 0.8)
    axes.set_ylim(-1.1, 1.1)
    axes.set_axis_off()
    return fig


def save_figure(fig: Figure, path: str) -> None:
    fig.savefig(path, bbox_inches="tight", dpi=150)
