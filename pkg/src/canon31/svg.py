"""SVG emission.  Model coordinates have y pointing up; only the SVG is flipped."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .graph_core import Embedding
from .rect_dual import RectLayout
from .ri_drawing import PointDrawing

_HEAD = '<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2f}" height="{h:.2f}" viewBox="0 0 {w:.2f} {h:.2f}">\n'


def layout_svg(layout: RectLayout, size: float = 600.0, labels: bool = True) -> str:
    box = layout.bbox
    bw, bh = float(box.x_hi - box.x_lo), float(box.y_hi - box.y_lo)
    k = size / max(bw, bh)
    out = [_HEAD.format(w=bw * k, h=bh * k)]
    for v in sorted(layout.rects):
        r = layout.rects[v]
        x = float(r.x_lo - box.x_lo) * k
        y = float(box.y_hi - r.y_hi) * k
        w = float(r.x_hi - r.x_lo) * k
        h = float(r.y_hi - r.y_lo) * k
        out.append(f'<rect x="{x:.3f}" y="{y:.3f}" width="{w:.3f}" height="{h:.3f}" '
                   f'fill="#dde8f4" stroke="#223" stroke-width="1"/>\n')
        if labels:
            out.append(f'<text x="{x + w / 2:.3f}" y="{y + h / 2:.3f}" font-size="{min(12.0, h / 2 + 1):.2f}" '
                       f'text-anchor="middle" dominant-baseline="middle">{escape(str(v))}</text>\n')
    out.append("</svg>\n")
    return "".join(out)


def drawing_svg(g: Embedding, e: tuple[int, int], drawing: PointDrawing, size: float = 600.0,
                overlays: bool = False, labels: bool = True) -> str:
    pts = {v: (float(x), float(y)) for v, (x, y) in drawing.points.items()}
    xs = [p[0] for p in pts.values()]
    ys = [p[1] for p in pts.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    pad = 20.0
    k = (size - 2 * pad) / span

    def tr(p):
        return pad + (p[0] - min(xs)) * k, pad + (max(ys) - p[1]) * k

    skip = tuple(sorted(e))
    edges = [uv for uv in g.edges() if uv != skip]
    out = [_HEAD.format(w=size, h=size)]
    if overlays:
        for u, v in edges:
            (x1, y1), (x2, y2) = tr(pts[u]), tr(pts[v])
            out.append(f'<rect x="{min(x1, x2):.3f}" y="{min(y1, y2):.3f}" width="{abs(x2 - x1):.3f}" '
                       f'height="{abs(y2 - y1):.3f}" fill="#f4c430" fill-opacity="0.12" stroke="none"/>\n')
    for u, v in edges:
        (x1, y1), (x2, y2) = tr(pts[u]), tr(pts[v])
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}" stroke="#223" stroke-width="1"/>\n')
    for v in sorted(pts):
        x, y = tr(pts[v])
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="#b22"/>\n')
        if labels:
            out.append(f'<text x="{x + 4:.3f}" y="{y - 4:.3f}" font-size="10">{escape(str(v))}</text>\n')
    out.append("</svg>\n")
    return "".join(out)
