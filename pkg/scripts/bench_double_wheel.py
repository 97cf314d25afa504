"""Time ordering and verification on double wheels of growing size."""
import argparse
import time

from canon31.generator import double_wheel
from canon31.ordering import compute_31_ordering, verify_ordering

if __name__ == "__main__":
    p = argparse.ArgumentParser()
    p.add_argument("sizes", nargs="*", type=int, default=[100, 1000, 10_000])
    for k in p.parse_args().sizes:
        g = double_wheel(k)
        t0 = time.perf_counter()
        o = compute_31_ordering(g)
        t1 = time.perf_counter()
        ok = bool(verify_ordering(g, o))
        t2 = time.perf_counter()
        print(f"n={g.n:>6}  L={len(o)}  order {t1 - t0:6.2f}s  verify {t2 - t1:6.2f}s  valid={ok}")
