"""Presentational SVG figures of curve arrangements.

Strictly downstream of the exact machinery: figures are drawn from the
topology's sampled traces and from floating-point grid contours of pencil
members, and are never consulted for any verdict.  Output is deterministic
SVG 1.1 (fixed hash salt, no embedded date).
"""

from __future__ import annotations

from fractions import Fraction

import matplotlib
matplotlib.use("svg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .algebra import Q, TernaryForm  # noqa: E402

_STYLE = {
    "svg.hashsalt": "sepcurve",
    "figure.figsize": (6.0, 6.0),
    "font.size": 9,
}

_CURVE_COLORS = ["#1f3b73", "#a63603", "#1b7837", "#762a83", "#b2182b",
                 "#35978f", "#8c510a"]


def _float_pt(pt):
    return float(pt.x), float(pt.y)


def _view_box(T, margin=1.3):
    xs, ys = [], []
    for comp in T.components:
        for pt in comp.trace:
            x, y = _float_pt(pt)
            xs.append(x)
            ys.append(y)
    if not xs:
        return (-2.0, 2.0, -2.0, 2.0)
    cx = (min(xs) + max(xs)) / 2
    cy = (min(ys) + max(ys)) / 2
    half = max(max(xs) - min(xs), max(ys) - min(ys), 1.0) / 2 * margin
    return (cx - half, cx + half, cy - half, cy + half)


def _grid_eval(F: TernaryForm, box, n=400):
    x0, x1, y0, y1 = box
    xs = np.linspace(x0, x1, n)
    ys = np.linspace(y0, y1, n)
    X, Y = np.meshgrid(xs, ys)
    Z = np.zeros_like(X)
    for (a, b, c), coef in F.coeffs.items():
        Z += float(coef) * X ** a * Y ** b
    return X, Y, Z


def _draw_component(ax, comp, color):
    pts = [_float_pt(p) for p in comp.trace]
    if not pts:
        return
    if comp.kind == "oval":
        pts = pts + pts[:1]
        ax.plot(*zip(*pts), color=color, linewidth=1.6)
    else:
        # the pseudo-line trace passes through infinity; break the polyline
        # at jumps instead of drawing spurious chords
        runs, cur = [], [pts[0]]
        for prev, nxt in zip(pts, pts[1:]):
            if abs(nxt[0] - prev[0]) + abs(nxt[1] - prev[1]) > 8.0:
                runs.append(cur)
                cur = []
            cur.append(nxt)
        runs.append(cur)
        for run in runs:
            if len(run) > 1:
                ax.plot(*zip(*run), color=color, linewidth=1.6)
    wx, wy = _float_pt(comp.witness)
    ax.plot([wx], [wy], marker="o", markersize=3, color=color)


def _draw_member(ax, member: TernaryForm, box):
    X, Y, Z = _grid_eval(member, box)
    ax.contour(X, Y, Z, levels=[0.0], colors=["#888888"], linewidths=0.7)


def _draw_triangle(ax, witness, box):
    x0, x1, _, _ = box
    for form in witness.lines:
        d = form.coeffs  # a*x + b*y + c*z
        a = float(d.get((1, 0, 0), Q(0)))
        b = float(d.get((0, 1, 0), Q(0)))
        c = float(d.get((0, 0, 1), Q(0)))
        if abs(b) > 1e-12:
            xs = np.array([x0, x1])
            ax.plot(xs, (-c - a * xs) / b, color="#e08214",
                    linewidth=0.9, linestyle="--")
        elif abs(a) > 1e-12:
            ax.axvline(-c / a, color="#e08214", linewidth=0.9,
                       linestyle="--")
    for pt in witness.vertices:
        x, y = _float_pt(pt)
        ax.plot([x], [y], marker="s", markersize=4, color="#e08214")


def render_arrangement(T, path, pencil=None, member_parameters=(),
                       triangle=None, title=""):
    """Write an SVG of the curve's sampled traces with optional pencil
    members and a triangle-witness overlay."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        box = _view_box(T)
        ax.set_xlim(box[0], box[1])
        ax.set_ylim(box[2], box[3])
        ax.set_aspect("equal")
        ax.grid(True, linewidth=0.3, alpha=0.4)
        if pencil is not None:
            for par in member_parameters:
                _draw_member(ax, pencil.member(par), box)
        for comp in T.components:
            _draw_component(ax, comp,
                            _CURVE_COLORS[comp.index % len(_CURVE_COLORS)])
        if triangle is not None:
            _draw_triangle(ax, triangle, box)
        if title:
            ax.set_title(title)
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
