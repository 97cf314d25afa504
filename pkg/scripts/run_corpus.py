"""Order, lay out and draw a seeded corpus; print a per-size summary.

    python3 scripts/run_corpus.py --count 200 --n-min 6 --n-max 60 --seed 0
"""
import argparse
import time
from collections import Counter, defaultdict
from dataclasses import dataclass

from canon31.generator import corpus
from canon31.ordering import Fan, compute_31_ordering, verify_ordering
from canon31.rect_dual import build_rect_dual, verify_rect_dual
from canon31.ri_drawing import build_ri_drawing, verify_ri


@dataclass
class CorpusConfig:
    count: int = 200
    n_min: int = 6
    n_max: int = 60
    seed: int = 0
    bruteforce_limit: int = 200


def run(cfg: CorpusConfig) -> int:
    t0 = time.perf_counter()
    graphs = corpus(cfg.count, cfg.n_min, cfg.n_max, cfg.seed)
    failures = 0
    cells = defaultdict(list)
    kinds = Counter()
    for g in graphs:
        o = compute_31_ordering(g)
        e = tuple(g.outer_face[:2])
        reps = (verify_ordering(g, o, cfg.bruteforce_limit),
                verify_rect_dual(g, e, build_rect_dual(g, o)),
                verify_ri(g, e, build_ri_drawing(g, o)))
        for rep in reps:
            if not rep:
                failures += 1
                print(f"n={g.n}: {rep.failure}")
        cells[g.n // 10 * 10].append(len(o))
        kinds.update("fan" if isinstance(s, Fan) else "singleton" for s in o.steps)
    print(f"{'n range':>10} {'graphs':>7} {'mean L':>8}")
    for lo in sorted(cells):
        ls = cells[lo]
        print(f"{lo:>4}-{lo + 9:<5} {len(ls):>7} {sum(ls) / len(ls):>8.2f}")
    print(f"steps: {dict(kinds)}")
    print(f"{len(graphs)} graphs, {failures} verifier failures, {time.perf_counter() - t0:.1f}s")
    return failures


if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    raise SystemExit(1 if run(CorpusConfig(a.count, a.n_min, a.n_max, a.seed)) else 0)
