"""SVG drawings of labeled subdivisions of the triangle (n = 3)."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .geometry import BPoint
from .kkm import KKMCover, build_cover
from .sperner import is_completely_labeled
from .subdivision import Cell, Subdivision


class UnsupportedDimensionError(ValueError):
    pass


def piece_regions(cover: KKMCover, sub: Subdivision, label: int) -> list[tuple[Cell, int, list[BPoint]]]:
    """Exact corner lists of the regions ``{weight on vertex >= threshold}`` making up ``C_label``.

    Inside a cell the region around vertex ``p`` is the simplex spanned by
    ``p`` and the edge points ``t*p + (1-t)*q`` for the other vertices ``q``.
    """
    t = cover.threshold
    out = []
    for piece in cover.pieces.get(label, ()):
        pts = sub.points(piece.cell)
        for k in piece.positions:
            p = pts[k]
            corners = [p]
            for j, q in enumerate(pts):
                if j != k:
                    corners.append(tuple(t * a + (1 - t) * b for a, b in zip(p, q)))
            out.append((piece.cell, piece.cell[k], corners))
    return out


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_svg(sub: Subdivision, labels: Sequence[int] | None = None, overlay: int | None = None,
               width: float = 400.0, margin: float = 24.0) -> str:
    """Draw the subdivision with corners at ``(0,0)``, ``(W,0)``, ``(W/2, W*sqrt(3)/2)``.

    The y axis is flipped at emission so the triangle stands upright.  Cells
    whose labels are complete are shaded; ``overlay`` shades the pieces of
    the cover set for that label.
    """
    if sub.n != 3:
        raise UnsupportedDimensionError(f"rendering needs n = 3, got n = {sub.n}")
    height = width * math.sqrt(3) / 2
    total_w, total_h = width + 2 * margin, height + 2 * margin

    def dev(p: Sequence[Fraction]) -> tuple[str, str]:
        x = width * (float(p[1]) + float(p[2]) / 2)
        y = height * float(p[2])
        return _fmt(margin + x), _fmt(margin + height - y)

    def poly(points, **attrs) -> str:
        coords = " ".join(",".join(dev(p)) for p in points)
        extra = "".join(f' {k.replace("_", "-")}="{v}"' for k, v in attrs.items())
        return f'<polygon points="{coords}"{extra}/>'

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(total_w)}" '
        f'height="{_fmt(total_h)}" viewBox="0 0 {_fmt(total_w)} {_fmt(total_h)}">',
        '<g id="cells">',
    ]
    for cell in sub.cells:
        shaded = labels is not None and is_completely_labeled(cell, labels, 3)
        fill = "#d3d3d3" if shaded else "none"
        cls = "cell complete" if shaded else "cell"
        lines.append(poly(sub.points(cell), fill=fill, stroke="black", stroke_width="1", **{"class": cls}))
    lines.append("</g>")

    if overlay is not None:
        if labels is None:
            raise ValueError("an overlay needs a labeling")
        cover = build_cover(sub, labels)
        lines.append(f'<g id="overlay-C{overlay}">')
        for _, _, corners in piece_regions(cover, sub, overlay):
            lines.append(poly(corners, fill="#9999ff", fill_opacity="0.5", stroke="blue",
                              **{"class": "piece"}))
        lines.append("</g>")

    corners = [sub.vertices[sub.vertex_id(c)] for c in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    lines.append(poly(corners, fill="none", stroke="black", stroke_width="2", id="outline"))
    if labels is not None:
        lines.append('<g id="labels" font-family="sans-serif" font-size="14">')
        for vid, p in enumerate(sub.vertices):
            x, y = dev(p)
            lines.append(f'<circle cx="{x}" cy="{y}" r="2.5"/>')
            lines.append(f'<text x="{x}" y="{y}" dx="4" dy="-4">{labels[vid]}</text>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
