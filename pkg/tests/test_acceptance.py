"""Acceptance suite: one PASS/FAIL line per criterion on the terminal."""
from __future__ import annotations

import os
import subprocess
import sys
import time
from contextlib import contextmanager
from functools import lru_cache

from canon31.disk import is_internally_4_connected, remove_outer_set, remove_top_vertex
from canon31.generator import corpus, double_wheel, random_triangulation
from canon31.graph_core import has_separating_triangle, is_k_connected
from canon31.ordering import Fan, Singleton, compute_31_ordering, peel, verify_ordering
from canon31.rect_dual import build_rect_dual, verify_rect_dual
from canon31.ri_drawing import build_ri_drawing, chain_is_monotone, verify_ri
from graphs import A, B, C, D, E, F, octahedron

CORPUS_SIZE = 220
SEED = 2024


@lru_cache(maxsize=None)
def graphs():
    return corpus(CORPUS_SIZE, 6, 60, seed=SEED)


@lru_cache(maxsize=None)
def orderings():
    return [compute_31_ordering(g) for g in graphs()]


@lru_cache(maxsize=None)
def disks():
    """The disk G - u3 of every corpus graph plus every disk met while peeling it."""
    out = []
    for g in graphs():
        out.append(remove_top_vertex(g))
        compute_31_ordering(g, lambda before, step, after: out.append(after))
    return out


@contextmanager
def criterion(capsys, label):
    status, detail = "FAIL", ""
    try:
        info = {}
        yield info
        status = "PASS"
        detail = info.get("detail", "")
    except BaseException as exc:
        detail = f"{type(exc).__name__}: {exc}"[:200]
        raise
    finally:
        with capsys.disabled():
            print(f"\n[acceptance] {label}: {status}" + (f" ({detail})" if detail else ""))


def fan_or_singleton(d, step) -> bool:
    """Independent shape check of a peeled set against the disk it came from."""
    vs = list(step.vertices)
    if isinstance(step, Singleton):
        return len(vs) == 1
    idx = [d.index(v) for v in vs]
    if idx != list(range(idx[0], idx[0] + len(idx))):
        return False
    if any(len(d.rotation[v]) != 3 or step.apex not in d.rotation[v] for v in vs):
        return False
    # induced path: consecutive members adjacent, nothing else
    s = set(vs)
    edges = {frozenset((v, w)) for v in vs for w in d.rotation[v] if w in s}
    return len(edges) == len(vs) - 1 and all(frozenset(p) in edges for p in zip(vs, vs[1:]))


def test_criterion_1_peel_properties(capsys):
    with criterion(capsys, "1 peel property suite") as info:
        t0 = time.perf_counter()
        checked = 0
        for d in disks():
            if d.n < 4:
                continue
            assert is_internally_4_connected(d)
            step = peel(d)
            vs = set(step.vertices)
            assert all(d.on_outer(v) for v in vs) and not vs & {d.u1, d.u2}
            assert fan_or_singleton(d, step), step
            assert is_internally_4_connected(remove_outer_set(d, vs))
            checked += 1
        elapsed = time.perf_counter() - t0
        assert checked >= 200
        assert elapsed < 60, f"{elapsed:.1f}s"
        info["detail"] = f"{checked} disks, 100% pass, {elapsed:.1f}s"


def test_criterion_2_ordering_validity(capsys):
    with criterion(capsys, "2 ordering validity suite") as info:
        g = octahedron()
        o = compute_31_ordering(g)
        assert len(o) == 3 and o.base == (A, B, E) and o.steps == (Fan((D, F), E),) and o.top == C
        assert verify_ordering(g, o, bruteforce_limit=10**9)
        gs = graphs()
        assert len(gs) >= 200 and all(6 <= h.n <= 60 for h in gs)
        for h, oh in zip(gs, orderings()):
            rep = verify_ordering(h, oh, bruteforce_limit=10**9)
            assert rep, rep.failure
        info["detail"] = f"{len(gs)} graphs + octahedron golden case"


def test_criterion_3_rectangular_dual(capsys):
    with criterion(capsys, "3 rectangular dual suite") as info:
        for g, o in zip(graphs(), orderings()):
            lay = build_rect_dual(g, o)
            rep = verify_rect_dual(g, tuple(g.outer_face[:2]), lay)
            assert rep, rep.failure
            assert lay.bbox.y_hi - lay.bbox.y_lo == 1 + (len(o) - 1)
        info["detail"] = f"{len(graphs())} layouts exact"


def test_criterion_4_ri_drawing(capsys):
    with criterion(capsys, "4 RI drawing suite") as info:
        steps = 0
        for g, o in zip(graphs(), orderings()):
            def check(chain, pts):
                nonlocal steps
                assert chain_is_monotone(chain, pts)
                steps += 1

            dr = build_ri_drawing(g, o, check)
            rep = verify_ri(g, tuple(g.outer_face[:2]), dr)
            assert rep, rep.failure
        info["detail"] = f"{len(graphs())} drawings, {steps} monotone prefixes"


def test_criterion_5_oracle_agreement(capsys):
    with criterion(capsys, "5 oracle agreement") as info:
        small = [g for g in graphs() if g.n <= 12]
        # the corpus is 4-connected by construction; add triangulations that are not
        small += [random_triangulation(n, s, flips) for n in range(5, 13) for s in range(8) for flips in (0, 3, 30)]
        mixed = 0
        for g in small:
            sep = has_separating_triangle(g)
            assert sep == (not is_k_connected(g, 4))
            mixed += sep
        assert mixed > 0
        n_disks = 0
        for d in disks():
            if 4 <= d.n <= 10 and is_internally_4_connected(d):
                assert is_k_connected(d.embedding, 3)
                n_disks += 1
        assert n_disks > 0
        info["detail"] = f"{len(small)} triangulations ({mixed} with separating triangles), {n_disks} disks"


def test_criterion_6_scale(capsys):
    with criterion(capsys, "6 scale smoke test") as info:
        g = double_wheel(10_000)
        t0 = time.perf_counter()
        o = compute_31_ordering(g)
        elapsed = time.perf_counter() - t0
        assert g.n == 10_002
        assert elapsed < 30, f"{elapsed:.1f}s"
        rep = verify_ordering(g, o, bruteforce_limit=200)
        assert rep, rep.failure
        info["detail"] = f"n=10002 ordered in {elapsed:.1f}s, L={len(o)}"


def test_criterion_7_determinism(capsys, tmp_path):
    with criterion(capsys, "7 determinism") as info:
        def pipeline(tag, hash_seed):
            out = tmp_path / tag
            env = {**os.environ, "PYTHONHASHSEED": hash_seed}

            def cli(*args):
                subprocess.run([sys.executable, "-m", "canon31", *args], check=True, env=env,
                               stdout=subprocess.DEVNULL)

            cli("gen", "--n", "20", "--n-max", "40", "--count", "3", "--seed", "77", "-o", str(out))
            for gfile in sorted(out.glob("*.json")):
                stem = gfile.stem
                cli("order", str(gfile), "-o", str(out / f"{stem}.order"))
                cli("rd", str(gfile), "--ordering", str(out / f"{stem}.order"), "-o", str(out / f"{stem}.rd"))
                cli("ri", str(gfile), "--ordering", str(out / f"{stem}.order"), "-o", str(out / f"{stem}.ri"))
            return {p.name: p.read_bytes() for p in sorted(out.iterdir())}

        first = pipeline("a", "1")
        second = pipeline("b", "12345")
        assert len(first) == 12
        assert first == second
        info["detail"] = f"{len(first)} files byte-identical across runs"
