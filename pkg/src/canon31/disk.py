"""Triangulated disks and internal 4-connectivity.

A disk keeps the labels of the graph it was cut from, so peeling never has to
renumber vertices.  The outer cycle is stored clockwise as ``c1..cl`` with
``u1 = c1`` and ``u2 = cl``; with counterclockwise rotations this is exactly the
traced order of the outer face, and ``u2 -> u1`` is always an outer dart.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .graph_core import (
    Embedding,
    face_of_dart,
    same_cycle,
    trace_faces,
    trace_rotation,
    triangles,
)


class DiskError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TriangulatedDisk:
    rotation: dict[int, tuple[int, ...]]
    outer: tuple[int, ...]
    _pos: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(self.outer)})

    @property
    def u1(self) -> int:
        return self.outer[0]

    @property
    def u2(self) -> int:
        return self.outer[-1]

    @property
    def n(self) -> int:
        return len(self.rotation)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def on_outer(self, v: int) -> bool:
        return v in self._pos

    def index(self, v: int) -> int:
        """0-based position of an outer vertex on the clockwise cycle."""
        return self._pos[v]

    def interior(self) -> list[int]:
        return sorted(v for v in self.rotation if v not in self._pos)

    @cached_property
    def adjacency(self) -> dict[int, set[int]]:
        return {v: set(r) for v, r in self.rotation.items()}

    @property
    def embedding(self) -> Embedding:
        """Dense relabelled copy; ``labels`` maps back to the disk's vertices."""
        verts = sorted(self.rotation)
        new = {v: i for i, v in enumerate(verts)}
        rot = tuple(tuple(new[w] for w in self.rotation[v]) for v in verts)
        ccw = (self.outer[0],) + tuple(reversed(self.outer[1:]))
        return Embedding(len(verts), rot, tuple(new[v] for v in ccw), tuple(verts))

    def __eq__(self, other):
        if not isinstance(other, TriangulatedDisk):
            return NotImplemented
        return self.outer == other.outer and self.rotation == other.rotation

    @classmethod
    def from_embedding(cls, e: Embedding) -> TriangulatedDisk:
        """View ``e`` as a disk; ``u1, u2`` are the first two entries of ``e.outer_face``."""
        if len(e.outer_face) < 3:
            raise DiskError("embedding has no outer face of length >= 3")
        ccw = [e.label(v) for v in e.outer_face]
        outer = (ccw[0],) + tuple(reversed(ccw[1:]))
        rot = {e.label(v): tuple(e.label(w) for w in r) for v, r in enumerate(e.rotation)}
        return cls(rot, outer)


def is_triangulated_disk(e: Embedding) -> bool:
    """Outer face is a simple cycle and every other face is a triangle."""
    outer = e.outer_face
    if len(outer) < 3 or len(set(outer)) != len(outer):
        return False
    try:
        faces = trace_faces(e)
    except ValueError:
        return False
    traced = tuple(reversed(outer))
    found_outer = False
    for f in faces:
        if not found_outer and same_cycle(f, traced):
            found_outer = True
            continue
        if len(f) != 3 or len(set(f)) != 3:
            return False
    return found_outer and e.n - e.m + len(faces) == 2


def disk_faces(d: TriangulatedDisk) -> list[tuple[int, ...]]:
    return trace_rotation(d.rotation)


def has_chord(d: TriangulatedDisk) -> bool:
    l = len(d.outer)
    if l <= 3:
        return False
    for i, c in enumerate(d.outer):
        for w in d.rotation[c]:
            j = d._pos.get(w)
            if j is not None and (j - i) % l not in (1, l - 1):
                return True
    return False


def is_internally_4_connected(d: TriangulatedDisk) -> bool:
    """No chord on the outer cycle and every 3-cycle bounds a face."""
    if has_chord(d):
        return False
    face_sets = {frozenset(f) for f in disk_faces(d) if len(f) == 3}
    return all(t in face_sets for t in triangles(d.adjacency))


def remove_outer_set(d: TriangulatedDisk, s: Iterable[int]) -> TriangulatedDisk:
    """The disk ``d - s`` for a set ``s`` of outer vertices other than u1, u2."""
    s = set(s)
    if not s:
        raise DiskError("nothing to remove")
    if d.u1 in s or d.u2 in s:
        raise DiskError("cannot remove u1 or u2")
    off = [v for v in s if not d.on_outer(v)]
    if off:
        raise DiskError(f"vertices {sorted(off)} are not on the outer cycle")
    rot = {v: r for v, r in d.rotation.items() if v not in s}
    touched = {w for v in s for w in d.rotation[v]} - s
    for w in touched:
        rot[w] = tuple(x for x in d.rotation[w] if x not in s)
    face = face_of_dart(rot, d.u2, d.u1)
    outer = face[1:] + face[:1]
    if len(outer) < 3 or len(set(outer)) != len(outer):
        raise DiskError(f"removing {sorted(s)} leaves a non-simple outer boundary")
    return TriangulatedDisk(rot, outer)


def remove_top_vertex(g: Embedding) -> TriangulatedDisk:
    """The disk ``G - u3`` of a triangulation with outer face ``[u1, u2, u3]``.

    Its outer cycle is the counterclockwise neighbour cycle of u3, read from
    u1 to u2.
    """
    if len(g.outer_face) != 3:
        raise DiskError("outer face must be a triangle")
    u1, u2, u3 = g.outer_face
    ring = list(g.rotation[u3])
    k = ring.index(u1)
    ring = ring[k:] + ring[:k]
    if ring[-1] != u2:
        raise DiskError("outer face orientation does not match the rotation system")
    rot = {}
    for v in range(g.n):
        if v == u3:
            continue
        rot[g.label(v)] = tuple(g.label(w) for w in g.rotation[v] if w != u3)
    return TriangulatedDisk(rot, tuple(g.label(v) for v in ring))
