"""Deterministic SVG 1.1 drawings of colored instances."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .errors import InputError
from .jsonio import Instance

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a",
)
CANVAS = 600
MARGIN = 40
LEGEND_W = 140


def palette_color(c: int) -> str:
    return PALETTE[(c - 1) % len(PALETTE)]


def _fmt(x: float) -> str:
    return f"{x:.2f}"


class _Frame:
    """Affine map from a data bounding box onto the drawing square (y up)."""

    def __init__(self, xs, ys):
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        span = max(self.x1 - self.x0, self.y1 - self.y0) or 1
        self.s = (CANVAS - 2 * MARGIN) / span

    def __call__(self, x, y):
        return MARGIN + (x - self.x0) * self.s, CANVAS - MARGIN - (y - self.y0) * self.s


def _legend(colors) -> list[str]:
    out = []
    for i, c in enumerate(sorted(set(colors))):
        y = MARGIN + 22 * i
        out.append(f'<rect x="{CANVAS + 10}" y="{y}" width="14" height="14" fill="{palette_color(c)}"/>')
        out.append(f'<text x="{CANVAS + 30}" y="{y + 12}" font-size="12">color {c}</text>')
    return out


def _vertex(x, y, c, label) -> list[str]:
    return [
        f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="7" fill="{palette_color(c)}" stroke="#000"/>',
        f'<text x="{_fmt(x)}" y="{_fmt(y - 11)}" font-size="11" text-anchor="middle">{escape(str(label))}</text>',
    ]


def render(instance: Instance, colors) -> str:
    """SVG text for ``instance`` with vertex ``v`` drawn in ``colors[v]``."""
    if len(colors) != instance.n:
        raise InputError(f"coloring has {len(colors)} entries for {instance.n} vertices")
    body: list[str] = []
    kind, d = instance.kind, instance.data
    if kind == "intervals":
        n = d["n"]
        step = (CANVAS - 2 * MARGIN) / max(n - 1, 1)
        y = CANVAS / 2
        body.append(f'<line x1="{MARGIN}" y1="{_fmt(y)}" x2="{CANVAS - MARGIN}" y2="{_fmt(y)}" stroke="#999"/>')
        for i in range(n):
            body += _vertex(MARGIN + i * step, y, colors[i], i)
    elif kind in ("points-discs", "points-halfplanes"):
        pts = d["points"]
        frame = _Frame([p[0] for p in pts], [p[1] for p in pts])
        for i, (x, y) in enumerate(pts):
            body += _vertex(*frame(x, y), colors[i], i)
    elif kind == "discs":
        discs = d["discs"]
        xs = [cx + s * math.sqrt(r2) for cx, _, r2 in discs for s in (-1, 1)]
        ys = [cy + s * math.sqrt(r2) for _, cy, r2 in discs for s in (-1, 1)]
        frame = _Frame(xs, ys)
        for i, (cx, cy, r2) in enumerate(discs):
            x, y = frame(cx, cy)
            col = palette_color(colors[i])
            body.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(math.sqrt(r2) * frame.s)}" '
                        f'fill="{col}" fill-opacity="0.25" stroke="{col}" stroke-width="2"/>')
            body.append(f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="11" text-anchor="middle">{i}</text>')
    elif kind == "graph":
        n = d["n"]
        pos = d.get("pos")
        if not pos:
            pos = [(math.cos(2 * math.pi * v / max(n, 1)), math.sin(2 * math.pi * v / max(n, 1)))
                   for v in range(n)]
        frame = _Frame([p[0] for p in pos], [p[1] for p in pos])
        at = [frame(*p) for p in pos]
        for u, row in enumerate(d["adj"]):
            for v in row:
                if u < v:
                    body.append(f'<line x1="{_fmt(at[u][0])}" y1="{_fmt(at[u][1])}" '
                                f'x2="{_fmt(at[v][0])}" y2="{_fmt(at[v][1])}" stroke="#555"/>')
        for v in range(n):
            body += _vertex(*at[v], colors[v], v)
    else:
        raise InputError(f"cannot plot instances of kind {kind!r}")
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{CANVAS + LEGEND_W}" height="{CANVAS}">')
    lines = [head, f'<rect width="{CANVAS + LEGEND_W}" height="{CANVAS}" fill="#fff"/>']
    lines += body + _legend(colors) + ["</svg>"]
    return "\n".join(lines) + "\n"
