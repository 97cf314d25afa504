"""Weak closed rectangle-of-influence drawings of ``G - (u1, u2)``.

Points are placed cell by cell along a (3,1)-canonical ordering while the outer
chain stays strictly increasing in x and strictly decreasing in y.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .graph_core import Embedding
from .ordering import CanonicalOrdering, insertions
from .report import Report

Point = tuple[Fraction, Fraction]


@dataclass
class PointDrawing:
    points: dict[int, Point]


StepHook = Callable[[list[int], dict[int, Point]], None]


def chain_is_monotone(chain: list[int], points: dict[int, Point]) -> bool:
    return all(points[p][0] < points[q][0] and points[p][1] > points[q][1]
               for p, q in zip(chain, chain[1:]))


def build_ri_drawing(g: Embedding, o: CanonicalOrdering, on_step: StepHook | None = None) -> PointDrawing:
    """RI-drawing of ``g`` minus the base edge.

    A singleton sits at x halfway between ``c_{b-1}`` and ``c_b`` and at y halfway
    between ``c_a`` and ``c_{a+1}``.  A fan ``z_1..z_f`` over ``c_{a+1}`` is spread
    evenly inside the box spanned by ``c_{a+1}`` and the corner
    ``(x(c_b), y(c_a))``, stepping right and down.
    """
    u1, u2, z = o.base
    pts: dict[int, Point] = {
        u1: (Fraction(0), Fraction(2)),
        z: (Fraction(1), Fraction(1)),
        u2: (Fraction(2), Fraction(0)),
    }
    if on_step is not None:
        on_step([u1, z, u2], dict(pts))
    for ins in insertions(g, o):
        c, a, b = ins.chain, ins.a, ins.b
        if not ins.is_fan:
            (v,) = ins.vertices
            x = (pts[c[b - 1]][0] + pts[c[b]][0]) / 2
            y = (pts[c[a]][1] + pts[c[a + 1]][1]) / 2
            pts[v] = (x, y)
        else:
            x0, y0 = pts[c[a + 1]]
            dx = pts[c[b]][0] - x0
            dy = pts[c[a]][1] - y0
            f = len(ins.vertices)
            for h, v in enumerate(ins.vertices, start=1):
                pts[v] = (x0 + Fraction(h, f + 1) * dx, y0 + Fraction(f - h + 1, f + 1) * dy)
        if on_step is not None:
            on_step(c[:a + 1] + list(ins.vertices) + c[b:], dict(pts))
    return PointDrawing(pts)


def _integerise(points: dict[int, Point]) -> dict[int, tuple[int, int]]:
    k = math.lcm(*(c.denominator for p in points.values() for c in p))
    return {v: (int(x * k), int(y * k)) for v, (x, y) in points.items()}


def orient(p, q, r) -> int:
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def in_closed_box(p, q, r) -> bool:
    """Is ``r`` inside the closed axis-aligned rectangle spanned by ``p`` and ``q``?"""
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def segments_meet(p, q, r, s) -> bool:
    """Do the closed segments pq and rs share at least one point?"""
    o1, o2, o3, o4 = orient(p, q, r), orient(p, q, s), orient(r, s, p), orient(r, s, q)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return ((o1 == 0 and in_closed_box(p, q, r)) or (o2 == 0 and in_closed_box(p, q, s))
            or (o3 == 0 and in_closed_box(r, s, p)) or (o4 == 0 and in_closed_box(r, s, q)))


def verify_ri(g: Embedding, e: tuple[int, int], drawing: PointDrawing) -> Report:
    """Exact check of planarity and closed-rectangle emptiness for ``g - e``."""
    if sorted(drawing.points) != list(range(g.n)):
        return Report.failed("drawing does not cover exactly the vertices of the graph")
    pts = _integerise(drawing.points)
    if len(set(pts.values())) != len(pts):
        return Report.failed("two vertices share a point")
    skip = tuple(sorted(e))
    edges = [uv for uv in g.edges() if uv != skip]
    checks = 1
    for u, v in edges:
        for w, r in pts.items():
            if w != u and w != v and in_closed_box(pts[u], pts[v], r):
                return Report.failed(f"vertex {w} lies in the closed rectangle of edge ({u}, {v})", checks)
    checks += 1
    for (u, v), (s, t) in combinations(edges, 2):
        shared = {u, v} & {s, t}
        if shared:
            # adjacent edges may only meet at the shared endpoint
            (c,) = shared
            p = pts[v if u == c else u]
            q = pts[t if s == c else s]
            if orient(pts[c], p, q) == 0 and (p[0] - pts[c][0]) * (q[0] - pts[c][0]) + \
                    (p[1] - pts[c][1]) * (q[1] - pts[c][1]) > 0:
                return Report.failed(f"edges ({u}, {v}) and ({s}, {t}) overlap", checks)
        elif segments_meet(pts[u], pts[v], pts[s], pts[t]):
            return Report.failed(f"edges ({u}, {v}) and ({s}, {t}) cross", checks)
    checks += 1
    return Report.passed(checks)
