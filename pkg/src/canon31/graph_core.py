"""Rotation-system embeddings of simple plane graphs.

Vertices are dense integers ``0..n-1``.  ``rotation[v]`` lists the neighbours
of ``v`` in counterclockwise order.  Faces are traced with the face kept on
the left of every dart, so bounded faces come out counterclockwise and the
outer face comes out clockwise.

``outer_face`` is always listed counterclockwise around the rest of the
drawing, i.e. it is the *reverse* of the traced order.  For a triangulation
with outer face ``[u1, u2, u3]`` the dart ``u1 -> u2`` therefore lies on the
interior face ``(u1, u2, z)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class EmbeddingError(ValueError):
    """Raised when a rotation system violates the embedding invariants."""


@dataclass(frozen=True)
class Embedding:
    n: int
    rotation: tuple[tuple[int, ...], ...]
    outer_face: tuple[int, ...] = ()
    # labels[v] is the identifier of v in the graph this one was cut from
    labels: tuple[int, ...] | None = None

    @classmethod
    def from_lists(cls, rotation: Sequence[Sequence[int]], outer: Sequence[int] = ()) -> Embedding:
        rot = tuple(tuple(int(w) for w in r) for r in rotation)
        return cls(len(rot), rot, tuple(int(v) for v in outer))

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, r in enumerate(self.rotation) for w in r if u < w]

    def adjacency(self) -> dict[int, set[int]]:
        return {v: set(r) for v, r in enumerate(self.rotation)}

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]

    def with_outer(self, outer: Sequence[int]) -> Embedding:
        return Embedding(self.n, self.rotation, tuple(outer), self.labels)


# -- face tracing -----------------------------------------------------------

def _vertices(rot) -> Iterable[int]:
    return rot.keys() if isinstance(rot, Mapping) else range(len(rot))


def _positions(rot) -> dict[int, dict[int, int]]:
    return {v: {w: i for i, w in enumerate(rot[v])} for v in _vertices(rot)}


def next_dart(rot, u: int, v: int, pos=None) -> tuple[int, int]:
    """Dart following ``u -> v`` on the face to its left."""
    r = rot[v]
    i = pos[v][u] if pos is not None else r.index(u)
    return v, r[i - 1]


def face_of_dart(rot, u: int, v: int, pos=None) -> tuple[int, ...]:
    face = [u]
    a, b = next_dart(rot, u, v, pos)
    while (a, b) != (u, v):
        face.append(a)
        a, b = next_dart(rot, a, b, pos)
        if len(face) > 4 * len(rot) + 4:
            raise EmbeddingError(f"face tracing from dart {u}->{v} does not close")
    return tuple(face)


def _check_rotation(rot) -> None:
    verts = set(_vertices(rot))
    for v in verts:
        r = rot[v]
        if len(set(r)) != len(r):
            raise EmbeddingError(f"vertex {v} has a repeated neighbour (multi-edge)")
        for w in r:
            if w == v:
                raise EmbeddingError(f"loop at vertex {v}")
            if w not in verts:
                raise EmbeddingError(f"vertex {v} lists unknown neighbour {w}")
            if v not in rot[w]:
                raise EmbeddingError(f"asymmetric adjacency: {v} lists {w} but not vice versa")


def trace_rotation(rot) -> list[tuple[int, ...]]:
    """Trace all faces of a rotation system given as a list or a dict."""
    _check_rotation(rot)
    pos = _positions(rot)
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in sorted(_vertices(rot)):
        for w in rot[u]:
            if (u, w) in seen:
                continue
            face = face_of_dart(rot, u, w, pos)
            for i, a in enumerate(face):
                seen.add((a, face[(i + 1) % len(face)]))
            faces.append(face)
    return faces


def trace_faces(e: Embedding) -> list[tuple[int, ...]]:
    """Every face of ``e`` exactly once, each as a cyclic vertex sequence."""
    return trace_rotation(e.rotation)


def same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if ``a`` and ``b`` are the same cyclic sequence (same direction)."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        k = list(b).index(a[0])
    except ValueError:
        return False
    return all(a[i] == b[(k + i) % len(b)] for i in range(len(a)))


def outer_face_traced(e: Embedding) -> tuple[int, ...]:
    """The outer face in traced (clockwise) order."""
    return tuple(reversed(e.outer_face))


def validate(e: Embedding) -> None:
    """Raise EmbeddingError unless ``e`` is a valid connected plane embedding."""
    if len(e.rotation) != e.n:
        raise EmbeddingError(f"rotation has {len(e.rotation)} entries, expected n={e.n}")
    faces = trace_faces(e)
    if e.n > 0 and not is_connected_adj(e.adjacency()):
        raise EmbeddingError("graph is not connected")
    chi = e.n - e.m + len(faces)
    if chi != 2:
        raise EmbeddingError(f"Euler characteristic is {chi}, rotation system is not planar")
    if e.outer_face:
        traced = outer_face_traced(e)
        if not any(same_cycle(traced, f) for f in faces):
            raise EmbeddingError(f"outer face {list(e.outer_face)} is not a face of the rotation system")


# -- predicates ---------------------------------------------------------------

def triangles(adj: Mapping[int, set[int]]) -> set[frozenset[int]]:
    """All 3-cycles, by intersecting adjacency sets along every edge."""
    out = set()
    for u, nu in adj.items():
        for v in nu:
            if v <= u:
                continue
            small, big = (nu, adj[v]) if len(nu) < len(adj[v]) else (adj[v], nu)
            for w in small:
                if w > v and w in big:
                    out.add(frozenset((u, v, w)))
    return out


def triangulation_defect(e: Embedding) -> str | None:
    """Why ``e`` is not a triangulation, or None if it is one."""
    try:
        _check_rotation(e.rotation)
    except EmbeddingError as exc:
        return f"not simple: {exc}"
    if e.n < 3:
        return f"too few vertices (n={e.n})"
    if e.m != 3 * e.n - 6:
        return f"edge count m={e.m} differs from 3n-6={3 * e.n - 6}"
    for f in trace_faces(e):
        if len(f) != 3:
            return f"face {list(f)} has length {len(f)}"
    return None


def is_triangulation(e: Embedding) -> bool:
    return triangulation_defect(e) is None


def induced_subgraph(e: Embedding, s: Iterable[int]) -> Embedding:
    """Restrict ``e`` to the vertex set ``s``, keeping the cyclic orders.

    Surviving vertices are renumbered in increasing order; ``labels`` maps the
    new identifiers back to the labels of ``e``.  The outer face is kept only if
    all of its vertices survive; otherwise the caller has to set it.
    """
    keep = sorted(set(s))
    if not keep:
        raise ValueError("induced_subgraph needs a non-empty vertex set")
    if keep[0] < 0 or keep[-1] >= e.n:
        raise ValueError("vertex set is not a subset of 0..n-1")
    if len(keep) == e.n:
        return e
    new = {v: i for i, v in enumerate(keep)}
    rot = tuple(tuple(new[w] for w in e.rotation[v] if w in new) for v in keep)
    outer = ()
    if e.outer_face and all(v in new for v in e.outer_face):
        outer = tuple(new[v] for v in e.outer_face)
    labels = tuple(e.label(v) for v in keep)
    return Embedding(len(keep), rot, outer, labels)


def _bitmasks(adj: Mapping[int, Iterable[int]]) -> tuple[list[int], list[int]]:
    verts = sorted(adj)
    idx = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for v in verts:
        for w in adj[v]:
            masks[idx[v]] |= 1 << idx[w]
    return verts, masks


def _connected_mask(masks: list[int], alive: int) -> bool:
    if alive == 0:
        return True
    start = alive & -alive
    reach = frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & alive & ~reach
        reach |= frontier
    return reach == alive


def is_connected_adj(adj: Mapping[int, Iterable[int]]) -> bool:
    verts, masks = _bitmasks(adj)
    return _connected_mask(masks, (1 << len(verts)) - 1)


def is_k_connected_adj(adj: Mapping[int, Iterable[int]], k: int) -> bool:
    """Brute force: delete every vertex subset of size < k and test reachability."""
    if not 1 <= k <= 5:
        raise ValueError("k must lie in 1..5")
    verts, masks = _bitmasks(adj)
    n = len(verts)
    if n <= k:
        return False
    full = (1 << n) - 1
    for size in range(k):
        for cut in itertools.combinations(range(n), size):
            alive = full
            for c in cut:
                alive &= ~(1 << c)
            if not _connected_mask(masks, alive):
                return False
    return True


def is_k_connected(e: Embedding, k: int) -> bool:
    return is_k_connected_adj(e.adjacency(), k)


def has_separating_triangle(e: Embedding) -> bool:
    """True iff some 3-cycle of the triangulation ``e`` is not a face."""
    defect = triangulation_defect(e)
    if defect is not None:
        raise ValueError(f"not a triangulation: {defect}")
    faces = {frozenset(f) for f in trace_faces(e)}
    return any(t not in faces for t in triangles(e.adjacency()))


# -- construction helpers -------------------------------------------------------

def from_straight_line(points: Sequence[tuple[float, float]], edges: Iterable[tuple[int, int]],
                       outer: Sequence[int] = ()) -> Embedding:
    """Embedding of a straight-line drawing: sort each neighbourhood by angle."""
    nbrs: list[list[int]] = [[] for _ in points]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def angle(v, w):
        return math.atan2(points[w][1] - points[v][1], points[w][0] - points[v][0])

    rot = [sorted(ns, key=lambda w, v=v: angle(v, w)) for v, ns in enumerate(nbrs)]
    return Embedding.from_lists(rot, outer)
