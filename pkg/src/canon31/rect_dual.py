"""Rectangular duals of ``G - (u1, u2)`` grown along a (3,1)-canonical ordering.

Every cell adds one unit of height: the chain rectangles left of and including
``c_a`` and right of and including ``c_b`` are raised, and the new cell fills the
gap above ``c_{a+1} .. c_{b-1}``.  Coordinates are exact fractions.
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


@dataclass(frozen=True)
class Rect:
    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction

    @property
    def area(self) -> Fraction:
        return (self.x_hi - self.x_lo) * (self.y_hi - self.y_lo)

    def raised(self, top) -> Rect:
        return Rect(self.x_lo, self.x_hi, self.y_lo, top)

    def scaled(self, k) -> Rect:
        return Rect(self.x_lo * k, self.x_hi * k, self.y_lo * k, self.y_hi * k)


@dataclass
class RectLayout:
    rects: dict[int, Rect]
    bbox: Rect


StepHook = Callable[[list[int], RectLayout], None]


def _r(*vals) -> Rect:
    return Rect(*(Fraction(v) for v in vals))


def build_rect_dual(g: Embedding, o: CanonicalOrdering, on_step: StepHook | None = None) -> RectLayout:
    """Rectangular dual of ``g`` minus the base edge ``(u1, u2)``.

    ``on_step(chain, layout)`` sees the outer chain and the partial layout after
    the base triangle and after every later cell.
    """
    u1, u2, z = o.base
    rects = {u1: _r(0, 1, 0, 1), z: _r(1, 2, 0, 1), u2: _r(2, 3, 0, 1)}
    top = Fraction(1)
    if on_step is not None:
        on_step([u1, z, u2], RectLayout(dict(rects), _r(0, 3, 0, top)))
    for ins in insertions(g, o):
        chain, a, b = ins.chain, ins.a, ins.b
        new_top = top + 1
        for v in chain[:a + 1] + chain[b:]:
            rects[v] = rects[v].raised(new_top)
        left = rects[chain[a]].x_hi
        right = rects[chain[b]].x_lo
        f = len(ins.vertices)
        width = (right - left) / f
        for h, v in enumerate(ins.vertices):
            rects[v] = Rect(left + h * width, left + (h + 1) * width, top, new_top)
        top = new_top
        if on_step is not None:
            new_chain = chain[:a + 1] + list(ins.vertices) + chain[b:]
            on_step(new_chain, RectLayout(dict(rects), _r(0, 3, 0, top)))
    return RectLayout(rects, _r(0, 3, 0, top))


def integer_layout(layout: RectLayout) -> RectLayout:
    """Scale by the common denominator so every coordinate is an integer."""
    dens = [c.denominator for r in [layout.bbox, *layout.rects.values()]
            for c in (r.x_lo, r.x_hi, r.y_lo, r.y_hi)]
    k = math.lcm(*dens)
    return RectLayout({v: r.scaled(k) for v, r in layout.rects.items()}, layout.bbox.scaled(k))


def _overlap(lo1, hi1, lo2, hi2):
    return min(hi1, hi2) - max(lo1, lo2)


def contact_length(p: Rect, q: Rect) -> Fraction:
    """Length of the common boundary of two interior-disjoint rectangles."""
    if p.x_hi == q.x_lo or q.x_hi == p.x_lo:
        return max(Fraction(0), _overlap(p.y_lo, p.y_hi, q.y_lo, q.y_hi))
    if p.y_hi == q.y_lo or q.y_hi == p.y_lo:
        return max(Fraction(0), _overlap(p.x_lo, p.x_hi, q.x_lo, q.x_hi))
    return Fraction(0)


def verify_rect_dual(g: Embedding, e: tuple[int, int], layout: RectLayout) -> Report:
    """Exact check that ``layout`` is a rectangular dual of ``g - e``."""
    rects = layout.rects
    if sorted(rects) != list(range(g.n)):
        return Report.failed("layout does not cover exactly the vertices of the graph")
    box = layout.bbox
    checks = 0
    for v, r in rects.items():
        if not (r.x_lo < r.x_hi and r.y_lo < r.y_hi):
            return Report.failed(f"rectangle of {v} is degenerate")
        if r.x_lo < box.x_lo or r.x_hi > box.x_hi or r.y_lo < box.y_lo or r.y_hi > box.y_hi:
            return Report.failed(f"rectangle of {v} leaves the bounding box")
    checks += 1
    contacts = set()
    for u, v in combinations(sorted(rects), 2):
        p, q = rects[u], rects[v]
        if _overlap(p.x_lo, p.x_hi, q.x_lo, q.x_hi) > 0 and _overlap(p.y_lo, p.y_hi, q.y_lo, q.y_hi) > 0:
            return Report.failed(f"rectangles of {u} and {v} overlap")
        if contact_length(p, q) > 0:
            contacts.add((u, v))
    checks += 1
    if sum(r.area for r in rects.values()) != box.area:
        return Report.failed("rectangles do not tile the bounding box (area mismatch)", checks)
    checks += 1
    skip = tuple(sorted(e))
    edges = {uv for uv in g.edges() if uv != skip}
    if contacts - edges:
        u, v = min(contacts - edges)
        return Report.failed(f"rectangles of {u} and {v} touch but ({u}, {v}) is not an edge", checks)
    if edges - contacts:
        u, v = min(edges - contacts)
        return Report.failed(f"edge ({u}, {v}) is not realised by a contact", checks)
    checks += 1
    return Report.passed(checks)
