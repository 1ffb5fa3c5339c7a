"""CSV and SVG emitters for chamber maps."""

from __future__ import annotations

import csv
import io
import math
from typing import Sequence
from xml.sax.saxutils import escape

from .cones import ChamberRecord
from .errors import InputError

# qmin -> fill; 0 and 1 follow the ample / 1-ample shading, hues above that
FILLS = {0: "#3a3a3a", 1: "#bdbdbd", 2: "#4c78a8", 3: "#e45756"}
EXTRA_FILLS = ["#54a24b", "#f58518", "#b279a2", "#72b7b2", "#eeca3b"]

SCALE = 24.0
MARGIN = 40.0
LEGEND_WIDTH = 150.0


def fill_for(qmin: int) -> str:
    if qmin in FILLS:
        return FILLS[qmin]
    return EXTRA_FILLS[(qmin - len(FILLS)) % len(EXTRA_FILLS)]


def to_csv(records: Sequence[ChamberRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    r = records[0].weight.rank if records else 0
    writer.writerow([f"a{k}" for k in range(1, r + 1)] + ["qmin", "regular", "weyl_length"])
    for rec in records:
        writer.writerow(list(rec.weight) + [
            rec.qmin,
            "true" if rec.regular else "false",
            "" if rec.weyl_length is None else rec.weyl_length,
        ])
    return buf.getvalue()


def planar(a: int, b: int) -> tuple[float, float]:
    """Fundamental-weight coordinates to the hexagonal Euclidean picture."""
    return a + b / 2.0, b * math.sqrt(3) / 2.0


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def to_svg(records: Sequence[ChamberRecord], radius: int) -> str:
    if any(rec.weight.rank != 2 for rec in records):
        raise InputError("SVG output is only defined for rank 2")
    pts = [planar(*rec.weight) for rec in records]
    xs = [p[0] for p in pts] or [0.0]
    ys = [p[1] for p in pts] or [0.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    width = (x1 - x0) * SCALE + 2 * MARGIN + LEGEND_WIDTH
    height = max((y1 - y0) * SCALE + 2 * MARGIN, 160.0)

    def sx(x: float) -> float:
        return (x - x0) * SCALE + MARGIN

    def sy(y: float) -> float:
        # SVG y grows downwards
        return (y1 - y) * SCALE + MARGIN

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f"<title>{escape(f'q-ample chambers of SL3/B, range {radius}')}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
        '<g id="walls" stroke="#888888" stroke-width="1" stroke-dasharray="4 3">',
    ]
    # walls: lines where a positive root pairs to zero, through the origin
    span = radius + 1
    for a, b in ((0, 1), (1, 0), (1, -1)):
        (ax, ay), (bx, by) = planar(-span * a, -span * b), planar(span * a, span * b)
        out.append(f'<line x1="{_fmt(sx(ax))}" y1="{_fmt(sy(ay))}" '
                   f'x2="{_fmt(sx(bx))}" y2="{_fmt(sy(by))}"/>')
    out.append("</g>")
    out.append('<g id="points" stroke="black" stroke-width="0.5">')
    for rec, (x, y) in zip(records, pts):
        a, b = rec.weight
        out.append(f'<circle class="pt" cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="5" '
                   f'fill="{fill_for(rec.qmin)}" data-weight="{a},{b}" data-qmin="{rec.qmin}"/>')
    out.append("</g>")

    lx = (x1 - x0) * SCALE + 2 * MARGIN
    out.append('<g id="legend" font-family="sans-serif" font-size="12">')
    for k, q in enumerate(sorted({rec.qmin for rec in records})):
        y = MARGIN + 20 * k
        label = {0: "ample (q=0)", 1: "1-ample (q=1)"}.get(q, f"q={q}")
        out.append(f'<rect x="{_fmt(lx)}" y="{_fmt(y - 10)}" width="12" height="12" '
                   f'fill="{fill_for(q)}" stroke="black" stroke-width="0.5"/>')
        out.append(f'<text x="{_fmt(lx + 18)}" y="{_fmt(y)}">{escape(label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
