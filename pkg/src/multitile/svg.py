"""Deterministic SVG pictures of regions and partitions."""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

from .region import Region

PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
)
SCALE = 200
MARGIN = 40
BAR_HEIGHT = 40
LEGEND_ROW = 18


def _num(x) -> str:
    v = float(x)
    if v == 0:
        v = 0.0  # no "-0"
    return format(v, ".12g")


def _extent(regions):
    xs, ys = [], []
    for R in regions:
        for c in R.cells:
            if R.dim == 1:
                xs += list(c)
            else:
                xs += [p[0] for p in c]
                ys += [p[1] for p in c]
    if not xs:
        return None
    x0, x1 = math.floor(min(xs)), math.ceil(max(xs))
    y0, y1 = (math.floor(min(ys)), math.ceil(max(ys))) if ys else (0, 0)
    if x1 == x0:
        x1 += 1
    if ys and y1 == y0:
        y1 += 1
    return x0, x1, y0, y1


def svg_text(regions, title: str = "") -> str:
    """SVG document with one filled path per region, indexed from 1 in the legend."""
    if isinstance(regions, Region):
        regions = [regions]
    regions = list(regions)
    dim = regions[0].dim if regions else 1
    ext = _extent(regions)
    if ext is None:
        ext = (0, 1, 0, 1) if dim == 2 else (0, 1, 0, 0)
    x0, x1, y0, y1 = ext
    plot_w = (x1 - x0) * SCALE
    plot_h = (y1 - y0) * SCALE if dim == 2 else BAR_HEIGHT
    width = plot_w + 2 * MARGIN
    height = plot_h + 2 * MARGIN + LEGEND_ROW * (len(regions) + 1)

    def px(x):
        return _num(MARGIN + (Fraction(x) - x0) * SCALE)

    def py(y):
        return _num(MARGIN + (y1 - Fraction(y)) * SCALE)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        lines.append(f'<title>{title}</title>')
    lines.append('<g id="grid" stroke="#cccccc" stroke-width="1">')
    for gx in range(x0, x1 + 1):
        top = MARGIN if dim == 2 else MARGIN - 6
        bottom = MARGIN + plot_h if dim == 2 else MARGIN + plot_h + 6
        lines.append(f'<line x1="{px(gx)}" y1="{top}" x2="{px(gx)}" y2="{bottom}"/>')
    if dim == 2:
        for gy in range(y0, y1 + 1):
            lines.append(f'<line x1="{MARGIN}" y1="{py(gy)}" x2="{MARGIN + plot_w}" y2="{py(gy)}"/>')
    lines.append('</g>')
    lines.append('<g id="atoms" stroke="#222222" stroke-width="0.5">')
    for k, R in enumerate(regions):
        fill = PALETTE[k % len(PALETTE)]
        parts = []
        for c in R.cells:
            if R.dim == 1:
                a, b = c
                parts.append(f"M{px(a)} {MARGIN}H{px(b)}V{MARGIN + BAR_HEIGHT}H{px(a)}Z")
            else:
                pts = "L".join(f"{px(x)} {py(y)}" for x, y in c)
                parts.append(f"M{pts}Z")
        lines.append(f'<path id="atom-{k + 1}" fill="{fill}" d="{"".join(parts)}"/>')
    lines.append('</g>')
    lines.append('<g id="legend" font-family="monospace" font-size="12">')
    base = MARGIN + plot_h + MARGIN
    for k in range(len(regions)):
        y = base + LEGEND_ROW * k
        fill = PALETTE[k % len(PALETTE)]
        lines.append(f'<rect x="{MARGIN}" y="{y}" width="12" height="12" fill="{fill}"/>')
        lines.append(f'<text x="{MARGIN + 18}" y="{y + 11}">{k + 1}</text>')
    lines.append('</g>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"


def render_svg(regions, path, title: str = "") -> None:
    Path(path).write_text(svg_text(regions, title), encoding="utf-8")
