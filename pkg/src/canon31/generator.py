"""Deterministic and seeded corpora of 4-connected triangulations."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graph_core import Embedding, has_separating_triangle, trace_rotation, triangles


class GenerationError(RuntimeError):
    pass


def double_wheel(cycle_len: int) -> Embedding:
    """Cycle ``0..k-1`` plus apexes ``N = k`` and ``S = k + 1``.

    The outer face is ``[1, 0, N]``; ``double_wheel(4)`` is the octahedron.
    """
    k = cycle_len
    if k < 4:
        raise ValueError(f"cycle_len must be >= 4, got {k}")
    north, south = k, k + 1
    rot: list[list[int]] = [[south, (i + 1) % k, north, (i - 1) % k] for i in range(k)]
    rot.append(list(range(k)))
    rot.append(list(range(k - 1, -1, -1)))
    return Embedding.from_lists(rot, [1, 0, north])


def lexmin_outer(rot) -> list[int]:
    """Outer listing ``[u1, u2, u3]`` for the lexicographically smallest facial triangle."""
    best = min(trace_rotation(rot), key=lambda f: sorted(f))
    a = min(best)
    k = best.index(a)
    a, b, c = best[k:] + best[:k]
    # counterclockwise listing of a face is its traced order reversed
    return [a, c, b]


def _insert_into_face(rot: list[list[int]], face: tuple[int, int, int]) -> None:
    v = len(rot)
    for k, x in enumerate(face):
        y = face[(k + 1) % 3]
        r = rot[x]
        r.insert(r.index(y) + 1, v)
    rot.append(list(face))


def _flip(rot: list[list[int]], adj: list[set[int]], u: int, v: int) -> bool:
    """Replace edge uv by the other diagonal of its two faces, if legal."""
    ru, rv = rot[u], rot[v]
    w = rv[rv.index(u) - 1]  # face u -> v -> w
    x = ru[ru.index(v) - 1]  # face v -> u -> x
    if w == x or x in adj[w] or len(ru) <= 3 or len(rv) <= 3:
        return False
    ru.remove(v)
    rv.remove(u)
    adj[u].discard(v)
    adj[v].discard(u)
    rw, rx = rot[w], rot[x]
    rw.insert(rw.index(v), x)
    rx.insert(rx.index(u), w)
    adj[w].add(x)
    adj[x].add(w)
    return True


def _separating(rot, adj) -> list[frozenset[int]]:
    faces = {frozenset(f) for f in trace_rotation(rot)}
    return sorted((t for t in triangles(dict(enumerate(adj))) if t not in faces), key=sorted)


def _grow(n: int, rng: random.Random) -> list[list[int]]:
    # tetrahedron, then stacked insertions into random faces
    rot = [[1, 3, 2], [0, 2, 3], [0, 3, 1], [0, 1, 2]]
    while len(rot) < n:
        faces = trace_rotation(rot)
        _insert_into_face(rot, faces[rng.randrange(len(faces))])
    return rot


def random_triangulation(n: int, seed: int, flips: int = 0) -> Embedding:
    """Stacked triangulation followed by ``flips`` uniformly chosen flip attempts.

    Separating triangles are allowed; this feeds the connectivity oracles.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    rng = random.Random(seed)
    rot = _grow(n, rng)
    adj = [set(r) for r in rot]
    for _ in range(flips):
        u = rng.randrange(n)
        _flip(rot, adj, u, rng.choice(rot[u]))
    return Embedding.from_lists(rot, lexmin_outer(rot))


def _attempt(n: int, rng: random.Random, flips: int) -> list[list[int]] | None:
    rot = _grow(n, rng)
    adj = [set(r) for r in rot]
    edges = sorted((u, w) for u in range(n) for w in rot[u] if u < w)
    for _ in range(flips):
        bad = _separating(rot, adj)
        if not bad:
            return rot
        # flip an edge of a random separating triangle when possible
        tri = sorted(bad[rng.randrange(len(bad))])
        cand = [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])]
        rng.shuffle(cand)
        if not any(_flip(rot, adj, u, v) for u, v in cand):
            u, v = edges[rng.randrange(len(edges))]
            if v in adj[u]:
                _flip(rot, adj, u, v)
        edges = sorted((u, w) for u in range(n) for w in adj[u] if u < w)
    return None


def random_4ct(n: int, seed: int, max_attempts: int = 50) -> Embedding:
    """A seeded random triangulation on ``n`` vertices without separating triangles."""
    if n < 6:
        raise ValueError(f"no 4-connected triangulation has {n} < 6 vertices")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        rot = _attempt(n, rng, flips=20 * n)
        if rot is not None:
            g = Embedding.from_lists(rot, lexmin_outer(rot))
            assert not has_separating_triangle(g)
            return g
    raise GenerationError(f"no 4-connected triangulation found for n={n}, seed={seed}")


@dataclass(frozen=True)
class GenSpec:
    family: str  # "double_wheel" or "random_flip"
    cycle_len: int = 4
    n: int = 6
    seed: int = 0
    max_attempts: int = 50
    outer: tuple[int, int, int] | None = None  # overrides the default outer face

    def __post_init__(self):
        if self.family == "double_wheel" and self.cycle_len < 4:
            raise ValueError("cycle_len must be >= 4")
        if self.family == "random_flip" and self.n < 6:
            raise ValueError("n must be >= 6")
        if self.family not in ("double_wheel", "random_flip"):
            raise ValueError(f"unknown family {self.family!r}")


def generate(spec: GenSpec) -> Embedding:
    if spec.family == "double_wheel":
        g = double_wheel(spec.cycle_len)
    else:
        g = random_4ct(spec.n, spec.seed, spec.max_attempts)
    if spec.outer is not None:
        g = g.with_outer(spec.outer)
    return g


def corpus(count: int, n_min: int = 6, n_max: int = 60, seed: int = 0) -> list[Embedding]:
    """``count`` random 4-connected triangulations with sizes cycling over [n_min, n_max]."""
    sizes = range(n_min, n_max + 1)
    return [random_4ct(sizes[k % len(sizes)], seed * 100_003 + k) for k in range(count)]
