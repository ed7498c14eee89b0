"""Picture of the singular-value set f(S(f)) near the origin.

S(f) is extracted as the zero level of the Jacobian determinant on a
square grid (marching squares via contourpy), then pushed through the
polynomial jet.  Output: an SVG figure and a plain polyline file.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import contourpy
import numpy as np

from sharksfin.classify import CriterionError, Verdict, classify_germ
from sharksfin.cusp import branch_invariants
from sharksfin.jets import JetError, MapJet2

__all__ = ["PlotError", "SingularImage", "singular_image", "write_polylines", "write_svg"]

DEFAULT_WINDOW = 0.5
DEFAULT_RESOLUTION = 400


class PlotError(ValueError):
    pass


@dataclass
class SingularImage:
    verdict: str
    window: float
    resolution: int
    source_lines: list = field(default_factory=list)  # arrays of (u, v) on S(f)
    image_lines: list = field(default_factory=list)  # the same arrays mapped through f
    cusps: list = field(default_factory=list)  # ((x, y), (dx, dy)) at the cusp points
    point: tuple | None = None  # f(S(f)) collapses to a point at jet level
    note: str = ""


def singular_image(f: MapJet2, window: float = DEFAULT_WINDOW, resolution: int = DEFAULT_RESOLUTION,
                   tol: float = 1e-9) -> SingularImage:
    if not window > 0:
        raise PlotError("window half-width must be positive")
    if int(resolution) != resolution or resolution < 2:
        raise PlotError("resolution must be an integer >= 2")
    f = f.to_float()
    verdict = classify_germ(f, tol=tol).verdict
    out = SingularImage(verdict.value, float(window), int(resolution))
    if verdict == Verdict.DELTOID:
        # definite identifier: S(f) is the origin alone
        out.point = (0.0, 0.0)
        out.note = "f(S(f)) = {0} at jet level"
        return out
    axis = np.linspace(-window, window, int(resolution))
    uu, vv = np.meshgrid(axis, axis)
    lam = np.asarray(f.jacobian_det().evaluate(uu, vv), dtype=float) + np.zeros_like(uu)
    gen = contourpy.contour_generator(axis, axis, lam, line_type=contourpy.LineType.Separate)
    for seg in gen.lines(0.0):
        if len(seg) < 2:
            continue
        x, y = f.evaluate(seg[:, 0], seg[:, 1])
        out.source_lines.append(seg)
        out.image_lines.append(np.column_stack([np.broadcast_to(x, seg[:, 0].shape),
                                                np.broadcast_to(y, seg[:, 0].shape)]))
    if verdict == Verdict.SHARKSFIN:
        try:
            inv = branch_invariants(f)
        except (CriterionError, JetError):
            inv = None
        if inv is not None:
            out.cusps = [((0.0, 0.0), inv.plus.direction), ((0.0, 0.0), inv.minus.direction)]
    return out


def write_polylines(img: SingularImage, path) -> None:
    """One block per curve: '# curve k n', then n lines 'x y'."""
    lines = [f"# verdict {img.verdict}", f"# window {img.window!r} resolution {img.resolution}"]
    if img.point is not None:
        lines.append(f"# point {img.point[0]!r} {img.point[1]!r}")
        lines.append(f"# note {img.note}")
    for (x, y), (dx, dy) in img.cusps:
        lines.append(f"# cusp {x!r} {y!r} direction {dx!r} {dy!r}")
    for k, arr in enumerate(img.image_lines):
        lines.append(f"# curve {k} {len(arr)}")
        lines.extend(f"{x:.12g} {y:.12g}" for x, y in arr)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_svg(img: SingularImage, path, title: str | None = None) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "sharksfin"
    fig, ax = plt.subplots(figsize=(5, 5))
    for arr in img.image_lines:
        ax.plot(arr[:, 0], arr[:, 1], color="#1f4e79", lw=1.2)
    pts = [a for a in img.image_lines if len(a)]
    span = max((float(np.abs(a).max()) for a in pts), default=img.window ** 2)
    span = span if span > 0 else 1.0
    for (x, y), d in img.cusps:
        if d is None:
            continue
        ax.plot([x], [y], "o", color="#b22222", ms=4)
        ax.annotate("", xy=(x + 0.25 * span * d[0], y + 0.25 * span * d[1]), xytext=(x, y),
                    arrowprops=dict(arrowstyle="->", color="#b22222"))
    if img.point is not None:
        ax.plot([img.point[0]], [img.point[1]], "o", color="#b22222", ms=6)
        ax.text(0.03, 0.03, img.note, transform=ax.transAxes, fontsize=8)
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_title(title or f"f(S(f)), {img.verdict}")
    ax.grid(True, lw=0.3)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
