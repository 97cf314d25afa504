"""(3,1)-canonical orderings of 4-connected triangulations.

The ordering is built backwards: remove the top vertex u3, then repeatedly
peel a singleton or a fan off the outer cycle of the remaining internally
4-connected disk until a triangle is left.

Outer-cycle indices in this module are 0-based: ``d.outer[0]`` is u1 and
``d.outer[-1]`` is u2.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Union

from .disk import (
    TriangulatedDisk,
    is_internally_4_connected,
    remove_outer_set,
    remove_top_vertex,
)
from .graph_core import (
    Embedding,
    EmbeddingError,
    face_of_dart,
    has_separating_triangle,
    induced_subgraph,
    is_connected_adj,
    is_k_connected,
    triangulation_defect,
    validate,
)
from .report import Report


class OrderingError(ValueError):
    """The input violates a precondition of the ordering construction."""


class TwoLeg(NamedTuple):
    i: int
    x: int
    j: int


class TwoLegKind(enum.Enum):
    BASIC = "basic"
    COMPLEX = "complex"


@dataclass(frozen=True)
class Singleton:
    vertex: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.vertex,)


@dataclass(frozen=True)
class Fan:
    vertices: tuple[int, ...]
    apex: int


Step = Union[Singleton, Fan]


@dataclass(frozen=True)
class CanonicalOrdering:
    base: tuple[int, int, int]  # (u1, u2, z)
    steps: tuple[Step, ...]
    top: int  # u3

    @property
    def cells(self) -> list[tuple[int, ...]]:
        return [self.base, *(s.vertices for s in self.steps), (self.top,)]

    def __len__(self) -> int:
        return len(self.steps) + 2


# -- 2-legs ---------------------------------------------------------------------

def _check_disk(d: TriangulatedDisk) -> None:
    if d.n < 4:
        raise OrderingError(f"disk has {d.n} vertices, need at least 4")


def _outer_indices(d: TriangulatedDisk, x: int) -> list[int]:
    return sorted(d.index(w) for w in d.rotation[x] if d.on_outer(w))


def two_leg_centers(d: TriangulatedDisk) -> dict[int, tuple[int, int]]:
    """Map each 2-leg-center to its widest 2-leg span ``(min index, max index)``."""
    out = {}
    for x in d.interior():
        idx = _outer_indices(d, x)
        if idx and idx[-1] - idx[0] >= 2:
            out[x] = (idx[0], idx[-1])
    return out


def find_two_legs(d: TriangulatedDisk) -> list[TwoLeg]:
    _check_disk(d)
    legs = []
    for x in d.interior():
        idx = _outer_indices(d, x)
        for a, i in enumerate(idx):
            for j in idx[a + 1:]:
                if i < j - 1:
                    legs.append(TwoLeg(i, x, j))
    if not legs:
        raise OrderingError("disk has no 2-leg; it is not internally 4-connected")
    return sorted(legs)


def leg_region(d: TriangulatedDisk, leg: TwoLeg) -> set[int]:
    """Vertices strictly inside the cycle ``x - c_i - ... - c_j - x``.

    Flood fill over faces, starting at the interior face on ``c_i c_{i+1}`` and
    never crossing an edge of the cycle.
    """
    i, x, j = leg
    arc = d.outer[i:j + 1]
    wall = {frozenset((x, arc[0])), frozenset((x, arc[-1]))}
    wall.update(frozenset(p) for p in zip(arc, arc[1:]))
    seen: set[tuple[int, int]] = set()
    inside: set[int] = set()
    stack = [(arc[1], arc[0])]
    while stack:
        u, v = stack.pop()
        if (u, v) in seen:
            continue
        face = face_of_dart(d.rotation, u, v)
        inside.update(face)
        for k, a in enumerate(face):
            b = face[(k + 1) % len(face)]
            seen.add((a, b))
            if frozenset((a, b)) not in wall and (b, a) not in seen:
                stack.append((b, a))
    return inside - set(arc) - {x}


def dominates(d: TriangulatedDisk, x: int, y: int) -> bool:
    """True iff center ``y`` lies strictly inside some 2-leg cycle of center ``x``.

    The 2-leg cycles of one center are nested, so the widest one decides.
    """
    centers = two_leg_centers(d)
    for v in (x, y):
        if v not in centers:
            raise OrderingError(f"vertex {v} is not a 2-leg-center")
    i, j = centers[x]
    return y in leg_region(d, TwoLeg(i, x, j))


def minimal_center(d: TriangulatedDisk) -> int:
    """Lowest-numbered 2-leg-center that dominates no other center."""
    _check_disk(d)
    centers = two_leg_centers(d)
    if not centers:
        raise OrderingError("disk has no 2-leg-center")
    for x in sorted(centers):
        i, j = centers[x]
        # a dominated center has its whole span inside [i, j]
        nested = [y for y, (a, b) in centers.items() if y != x and i <= a and b <= j]
        if not nested:
            return x
        region = leg_region(d, TwoLeg(i, x, j))
        if not any(y in region for y in nested):
            return x
    raise OrderingError("dominance relation has no minimal element")


def classify_two_leg(d: TriangulatedDisk, t: TwoLeg) -> TwoLegKind:
    if all(d.degree(c) == 3 for c in d.outer[t.i + 1:t.j]):
        return TwoLegKind.BASIC
    return TwoLegKind.COMPLEX


# -- peeling ----------------------------------------------------------------------

def peel(d: TriangulatedDisk) -> Step:
    """One outer singleton or fan whose removal keeps ``d`` internally 4-connected."""
    _check_disk(d)
    x = minimal_center(d)
    idx = _outer_indices(d, x)
    lo, hi = idx[0], idx[-1]
    if classify_two_leg(d, TwoLeg(lo, x, hi)) is TwoLegKind.BASIC:
        # every 2-leg of x lies inside the widest one, so all are basic
        return Fan(tuple(d.outer[lo + 1:hi]), x)
    # complex 2-leg with j = hi; push i as far right as it stays complex
    heavy = max(h for h in range(lo + 1, hi) if d.degree(d.outer[h]) >= 4)
    i = max(k for k in idx if k < heavy)
    return Singleton(d.outer[i + 1])


def _check_input(g: Embedding) -> None:
    defect = triangulation_defect(g)
    if defect is not None:
        raise OrderingError(f"not a triangulation: {defect}")
    try:
        validate(g)
    except EmbeddingError as exc:
        raise OrderingError(str(exc)) from exc
    if len(g.outer_face) != 3:
        raise OrderingError("outer face must be a triangle [u1, u2, u3]")
    if g.n < 5:
        raise OrderingError(f"not 4-connected: n={g.n} is too small")
    if has_separating_triangle(g):
        raise OrderingError("not 4-connected: separating triangle found")


PeelHook = Callable[[TriangulatedDisk, Step, TriangulatedDisk], None]


def compute_31_ordering(g: Embedding, on_peel: PeelHook | None = None) -> CanonicalOrdering:
    """A (3,1)-canonical ordering of the 4-connected triangulation ``g``.

    ``on_peel(before, step, after)`` is called after every peel, which lets
    tests inspect each intermediate disk.
    """
    _check_input(g)
    u1, u2, u3 = g.outer_face
    d = remove_top_vertex(g)
    steps: list[Step] = []
    while d.n >= 4:
        step = peel(d)
        nxt = remove_outer_set(d, step.vertices)
        if on_peel is not None:
            on_peel(d, step, nxt)
        steps.append(step)
        d = nxt
    assert d.outer[0] == u1 and d.outer[-1] == u2 and len(d.outer) == 3
    z = d.outer[1]
    return CanonicalOrdering((u1, u2, z), tuple(reversed(steps)), u3)


# -- insertion order (shared by the drawing constructions) ------------------------

class Insertion(NamedTuple):
    chain: list[int]  # outer chain u1 .. u2 before the insertion
    a: int  # smallest chain index adjacent to the new vertices
    b: int  # largest chain index adjacent to the new vertices
    vertices: tuple[int, ...]  # new vertices, left to right
    is_fan: bool


def insertions(g: Embedding, o: CanonicalOrdering) -> Iterator[Insertion]:
    """Replay ``o`` forwards, yielding the attachment of every cell after V1.

    The chain is the outer face of ``G_k`` without the edge (u1, u2), read left
    to right.  The final cell u3 is treated as a singleton.
    """
    adj = g.adjacency()
    u1, u2, z = o.base
    chain = [u1, z, u2]
    cells: list[Step] = [*o.steps, Singleton(o.top)]
    for cell in cells:
        members = cell.vertices
        pos = {v: k for k, v in enumerate(chain)}
        hits = [pos[w] for v in members for w in adj[v] if w in pos]
        if not hits:
            raise OrderingError(f"cell {list(members)} is not attached to the chain")
        a, b = min(hits), max(hits)
        if b < a + 2:
            raise OrderingError(f"cell {list(members)} attaches to a single chain edge ({a}, {b})")
        is_fan = len(members) > 1 or isinstance(cell, Fan)
        if len(members) > 1:
            if b != a + 2:
                raise OrderingError(f"fan {list(members)} spans chain indices {a}..{b}")
            members = _path_order(adj, members, chain[a])
        yield Insertion(list(chain), a, b, tuple(members), is_fan)
        chain = chain[:a + 1] + list(members) + chain[b:]


def _path_order(adj, members, left) -> list[int]:
    mset = set(members)
    ends = [v for v in members if left in adj[v]]
    if len(ends) != 1:
        raise OrderingError(f"fan {sorted(members)} does not start at chain vertex {left}")
    path = [ends[0]]
    prev = None
    while len(path) < len(members):
        nxt = [w for w in adj[path[-1]] if w in mset and w != prev and w not in path]
        if len(nxt) != 1:
            raise OrderingError(f"fan {sorted(members)} does not induce a path")
        prev = path[-1]
        path.append(nxt[0])
    return path


# -- verification ----------------------------------------------------------------

def _outer_of(sub: Embedding, u1: int, u2: int) -> tuple[int, ...]:
    """Outer face of an induced subgraph, in its own vertex ids, via dart u2 -> u1."""
    return face_of_dart(sub.rotation, u2, u1)


def _is_fan_in(sub: Embedding, members: list[int], apex: int | None, outer: set[int]) -> str | None:
    adj = sub.adjacency()
    mset = set(members)
    for v in members:
        if len(adj[v]) != 3:
            return f"fan vertex has degree {len(adj[v])} != 3"
        if v not in outer:
            return "fan vertex is not on the outer face"
    inner_edges = sum(1 for v in members for w in adj[v] if w in mset) // 2
    if inner_edges != len(members) - 1 or not is_connected_adj({v: adj[v] & mset for v in members}):
        return "fan does not induce a path"
    common = set.intersection(*(adj[v] for v in members)) - mset
    if not common:
        return "fan vertices share no common neighbour"
    if apex is not None and apex not in common:
        return "declared apex is not adjacent to every fan vertex"
    return None


def verify_ordering(g: Embedding, o: CanonicalOrdering, bruteforce_limit: int = 200) -> Report:
    """Check every condition of a (3,1)-canonical ordering from scratch.

    3-connectivity of the prefix graphs uses the brute-force oracle while
    ``g.n <= bruteforce_limit``; above that, each prefix graph is checked to be
    an internally 4-connected disk instead.
    """
    checks = 0
    cells = o.cells
    flat = [v for c in cells for v in c]
    if sorted(flat) != list(range(g.n)):
        return Report.failed("cells do not partition the vertex set")
    if len(g.outer_face) != 3:
        return Report.failed("graph has no outer triangle")
    u1, u2, u3 = g.outer_face
    z = face_of_dart(g.rotation, u1, u2)
    if len(z) != 3:
        return Report.failed("edge (u1, u2) does not lie on a triangular face")
    if (o.base[0], o.base[1]) != (u1, u2) or set(o.base) != set(z):
        return Report.failed(f"V1 = {list(o.base)} is not {{u1, u2, z}} = {sorted(z)}")
    if o.top != u3:
        return Report.failed(f"V_L = {{{o.top}}} is not {{u3}} = {{{u3}}}")
    checks += 2

    adj = g.adjacency()
    L = len(cells)
    when = {v: k for k, c in enumerate(cells) for v in c}
    prefix: list[int] = list(cells[0])
    for k in range(1, L - 1):
        cell = cells[k]
        step = o.steps[k - 1]
        prefix.extend(cell)
        sub = induced_subgraph(g, prefix)
        local = {v: i for i, v in enumerate(sorted(prefix))}
        outer = _outer_of(sub, local[u1], local[u2])
        if len(cell) > 1 or isinstance(step, Fan):
            apex = local.get(step.apex) if isinstance(step, Fan) else None
            if isinstance(step, Fan) and apex is None:
                return Report.failed(f"V{k + 1}: apex {step.apex} is not in G{k + 1}", checks)
            why = _is_fan_in(sub, [local[v] for v in cell], apex, set(outer))
            if why is not None:
                return Report.failed(f"V{k + 1} = {list(cell)}: {why}", checks)
        checks += 1
        if g.n <= bruteforce_limit:
            if not is_k_connected(sub, 3):
                return Report.failed(f"G{k + 1} is not 3-connected", checks)
        else:
            disk = TriangulatedDisk.from_embedding(sub.with_outer((outer[1], outer[0], *reversed(outer[2:]))))
            if not is_internally_4_connected(disk):
                return Report.failed(f"G{k + 1} is not an internally 4-connected disk", checks)
        checks += 1
        rest = {v for v in range(g.n) if when[v] >= k}
        if not is_connected_adj({v: adj[v] & rest for v in rest}):
            return Report.failed(f"complement of G{k + 1} (cells V{k + 1}..V{L}) is not connected", checks)
        checks += 1
    for v in range(g.n):
        if v != u3 and not any(when[w] > when[v] for w in adj[v]):
            return Report.failed(f"vertex {v} has no neighbour in a later cell", checks)
    checks += 1
    return Report.passed(checks)
