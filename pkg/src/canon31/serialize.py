"""JSON formats for graphs, orderings, layouts and drawings.

Rationals are written as ``[numerator, denominator]`` in lowest terms with a
positive denominator.  Vertex-keyed maps are emitted in increasing vertex order
so equal inputs give byte-identical files.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .disk import TriangulatedDisk
from .graph_core import Embedding, EmbeddingError, validate
from .ordering import CanonicalOrdering, Fan, Singleton
from .rect_dual import Rect, RectLayout
from .ri_drawing import PointDrawing


class FormatError(ValueError):
    pass


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _int(x, what) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{what} must be an integer, got {x!r}")
    return x


# -- graphs -----------------------------------------------------------------------

def graph_to_json(e: Embedding) -> dict:
    return {"n": e.n, "rotation": [list(r) for r in e.rotation], "outer": list(e.outer_face)}


def graph_from_json(obj: dict) -> Embedding:
    try:
        n = _int(obj["n"], "n")
        rotation = obj["rotation"]
        outer = obj["outer"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"graph JSON needs keys n, rotation, outer ({exc})") from exc
    if not isinstance(rotation, list) or len(rotation) != n:
        raise FormatError(f"rotation must be a list of {n} neighbour lists")
    rot = [[_int(w, "neighbour") for w in r] for r in rotation]
    e = Embedding.from_lists(rot, [_int(v, "outer vertex") for v in outer])
    if len(e.outer_face) != 3:
        raise FormatError("outer must name exactly three vertices")
    try:
        validate(e)
    except EmbeddingError as exc:
        raise FormatError(str(exc)) from exc
    return e


def disk_to_json(d: TriangulatedDisk) -> dict:
    """A disk as graph JSON; ``outer`` is counterclockwise starting ``[u1, u2, ...]``."""
    e = d.embedding
    return {**graph_to_json(e), "labels": list(e.labels)}


def disk_from_json(obj: dict) -> TriangulatedDisk:
    e = Embedding.from_lists(obj["rotation"], obj["outer"])
    if "labels" in obj:
        e = Embedding(e.n, e.rotation, e.outer_face, tuple(obj["labels"]))
    return TriangulatedDisk.from_embedding(e)


# -- orderings --------------------------------------------------------------------

def ordering_to_json(o: CanonicalOrdering) -> dict:
    cells: list[dict] = [{"kind": "base", "vertices": list(o.base)}]
    for s in o.steps:
        if isinstance(s, Fan):
            cells.append({"kind": "fan", "vertices": list(s.vertices), "apex": s.apex})
        else:
            cells.append({"kind": "singleton", "vertex": s.vertex})
    cells.append({"kind": "top", "vertex": o.top})
    return {"cells": cells}


def ordering_from_json(obj: dict) -> CanonicalOrdering:
    try:
        cells = obj["cells"]
        if len(cells) < 2 or cells[0]["kind"] != "base" or cells[-1]["kind"] != "top":
            raise FormatError("ordering must start with a base cell and end with a top cell")
        base = tuple(_int(v, "vertex") for v in cells[0]["vertices"])
        if len(base) != 3:
            raise FormatError("base cell must have three vertices")
        steps = []
        for c in cells[1:-1]:
            if c["kind"] == "fan":
                steps.append(Fan(tuple(_int(v, "vertex") for v in c["vertices"]), _int(c["apex"], "apex")))
            elif c["kind"] == "singleton":
                steps.append(Singleton(_int(c["vertex"], "vertex")))
            else:
                raise FormatError(f"unknown cell kind {c['kind']!r}")
        top = _int(cells[-1]["vertex"], "vertex")
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed ordering JSON ({exc})") from exc
    return CanonicalOrdering(base, tuple(steps), top)  # type: ignore[arg-type]


# -- rationals, layouts, drawings --------------------------------------------------

def frac_to_json(q: Fraction) -> list[int]:
    q = Fraction(q)
    return [q.numerator, q.denominator]


def frac_from_json(pair) -> Fraction:
    try:
        num, den = pair
    except (TypeError, ValueError) as exc:
        raise FormatError(f"rational must be [num, den], got {pair!r}") from exc
    if _int(den, "denominator") <= 0:
        raise FormatError(f"denominator must be positive, got {den}")
    return Fraction(_int(num, "numerator"), den)


def _rect_to_json(r: Rect) -> list[list[int]]:
    return [frac_to_json(c) for c in (r.x_lo, r.y_lo, r.x_hi, r.y_hi)]


def _rect_from_json(vals) -> Rect:
    if not isinstance(vals, list) or len(vals) != 4:
        raise FormatError(f"rectangle must be [x0, y0, x1, y1], got {vals!r}")
    x0, y0, x1, y1 = (frac_from_json(v) for v in vals)
    return Rect(x0, x1, y0, y1)


def layout_to_json(layout: RectLayout) -> dict:
    return {
        "bbox": _rect_to_json(layout.bbox),
        "rects": {str(v): _rect_to_json(layout.rects[v]) for v in sorted(layout.rects)},
    }


def layout_from_json(obj: dict) -> RectLayout:
    try:
        return RectLayout({int(v): _rect_from_json(r) for v, r in obj["rects"].items()},
                          _rect_from_json(obj["bbox"]))
    except (KeyError, TypeError, AttributeError) as exc:
        raise FormatError(f"malformed layout JSON ({exc})") from exc


def drawing_to_json(d: PointDrawing) -> dict:
    return {"points": {str(v): [frac_to_json(x), frac_to_json(y)] for v, (x, y) in sorted(d.points.items())}}


def drawing_from_json(obj: dict) -> PointDrawing:
    try:
        return PointDrawing({int(v): (frac_from_json(p[0]), frac_from_json(p[1]))
                             for v, p in obj["points"].items()})
    except (KeyError, TypeError, IndexError, AttributeError) as exc:
        raise FormatError(f"malformed drawing JSON ({exc})") from exc
