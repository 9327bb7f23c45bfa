"""SVG figures of a polygon and its inscribed periodic orbits."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape

import numpy as np

from .geometry import OrbitPolyline, PolygonGeometry

PALETTE = (
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)


@dataclass(frozen=True)
class SvgOptions:
    width: float = 400.0
    labels: bool = True
    polygon_stroke: str = "#000000"
    polygon_stroke_width: float = 0.012
    orbit_stroke_width: float = 0.008
    label_offset: float = 0.12
    font_size: float = 0.09
    margin: float = 0.05


def _fmt(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _path(points: np.ndarray) -> str:
    # y is flipped so the figure reads with side 1 at the bottom
    coords = [f"{_fmt(x)},{_fmt(-y)}" for x, y in points]
    return "M " + " L ".join(coords) + " Z"


def _label_positions(geom: PolygonGeometry, offset: float) -> list[tuple[int, np.ndarray]]:
    out = []
    for side in range(1, geom.sides + 1):
        mid = geom.point(side, 0.5)
        out.append((side, mid - offset * geom.radius * geom.inward_normal(side)))
    return out


def _extent(geom: PolygonGeometry, opts: SvgOptions) -> tuple[float, float, float, float]:
    pts = [geom.vertices]
    if opts.labels:
        pad = opts.font_size * geom.radius
        for _, p in _label_positions(geom, opts.label_offset):
            pts.append(np.array([p + (pad, pad), p - (pad, pad)]))
    allpts = np.vstack(pts)
    xmin, ymin = allpts.min(axis=0)
    xmax, ymax = allpts.max(axis=0)
    # svg y axis points down
    x0, y0, w, h = xmin, -ymax, xmax - xmin, ymax - ymin
    mx, my = opts.margin * w, opts.margin * h
    return x0 - mx, y0 - my, w + 2 * mx, h + 2 * my


def _panel(geom: PolygonGeometry, orbits: Sequence[OrbitPolyline], opts: SvgOptions, first_color: int = 0) -> list[str]:
    r = geom.radius
    lines = [
        f'<path class="polygon" d="{_path(geom.vertices)}" fill="none" '
        f'stroke="{opts.polygon_stroke}" stroke-width="{_fmt(opts.polygon_stroke_width * r)}" '
        f'stroke-linejoin="round"/>'
    ]
    for idx, orbit in enumerate(orbits):
        color = PALETTE[(first_color + idx) % len(PALETTE)]
        word = ",".join(str(v) for v in orbit.word)
        lines.append(
            f'<path class="orbit" data-word="{word}" d="{_path(orbit.points)}" fill="none" '
            f'stroke="{color}" stroke-width="{_fmt(opts.orbit_stroke_width * r)}" '
            f'stroke-linejoin="round"/>'
        )
    if opts.labels:
        for side, p in _label_positions(geom, opts.label_offset):
            lines.append(
                f'<text x="{_fmt(p[0])}" y="{_fmt(-p[1])}" font-size="{_fmt(opts.font_size * r)}" '
                f'font-family="sans-serif" text-anchor="middle" dominant-baseline="central">{side}</text>'
            )
    return lines


def _document(view: tuple[float, float, float, float], width: float, body: list[str], title: str) -> str:
    x0, y0, w, h = view
    height = width * h / w
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">'
    )
    parts = [head, f"<title>{escape(title)}</title>"]
    parts += body
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_svg(geom: PolygonGeometry, orbits: Sequence[OrbitPolyline], options: SvgOptions | None = None) -> str:
    """Polygon outline with every orbit overlaid, one palette colour per orbit."""
    opts = options or SvgOptions()
    title = f"regular {geom.sides}-gon, {len(orbits)} orbit(s)"
    return _document(_extent(geom, opts), opts.width, _panel(geom, orbits, opts), title)


def emit_gallery_svg(
    geom: PolygonGeometry,
    orbits: Sequence[OrbitPolyline],
    options: SvgOptions | None = None,
    columns: int | None = None,
) -> str:
    """Grid of small multiples, one orbit per panel."""
    opts = options or SvgOptions()
    if not orbits:
        return emit_svg(geom, [], opts)
    cols = columns or math.ceil(math.sqrt(len(orbits)))
    rows = math.ceil(len(orbits) / cols)
    x0, y0, w, h = _extent(geom, opts)
    body = []
    for idx, orbit in enumerate(orbits):
        r, c = divmod(idx, cols)
        body.append(f'<g transform="translate({_fmt(c * w)},{_fmt(r * h)})">')
        body += _panel(geom, [orbit], opts, first_color=idx)
        body.append("</g>")
    title = f"regular {geom.sides}-gon, {len(orbits)} orbit(s)"
    return _document((x0, y0, cols * w, rows * h), opts.width * cols, body, title)
