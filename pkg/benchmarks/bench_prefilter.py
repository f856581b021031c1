#!/usr/bin/env python3
"""Compare the numba and numpy enumeration prefilters.

    python benchmarks/bench_prefilter.py --bounds 8 12 16 20 24

Times a full sweep of the kernel over a1 = 2..bound for each backend (best of
--repeat runs, after one warm-up call that absorbs JIT compilation), checks the
two backends return identical rows, and times the end-to-end search.
"""

import argparse
import time

import numpy as np

from circleweights import kernels, search
from circleweights._jit import NUMBA_AVAILABLE


def sweep(bound, backend):
    return [kernels.scan(a1, backend) for a1 in range(2, bound + 1)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bounds", type=int, nargs="+", default=[8, 12, 16, 20, 24])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if NUMBA_AVAILABLE else [])
    if NUMBA_AVAILABLE:
        t = time.perf_counter()
        kernels.scan(3, "numba")
        print(f"numba compile/load: {time.perf_counter() - t:.2f} s")
    else:
        print("numba unavailable or disabled; timing numpy only")

    header = f"{'bound':>5} " + " ".join(f"{b + ' [s]':>12}" for b in backends)
    header += f" {'speedup':>8} {'search [s]':>11} {'admissible':>10}"
    print(header)
    for bound in args.bounds:
        timings = {}
        results = {}
        for b in backends:
            results[b] = sweep(bound, b)
            timings[b] = best_of(lambda: sweep(bound, b), args.repeat)
        if len(backends) == 2:
            for x, y in zip(results["numpy"], results["numba"]):
                np.testing.assert_array_equal(x, y)
            speedup = f"{timings['numpy'] / timings['numba']:8.1f}"
        else:
            speedup = f"{'-':>8}"
        t = time.perf_counter()
        summary = search(bound)
        t_search = time.perf_counter() - t
        row = f"{bound:>5} " + " ".join(f"{timings[b]:12.4f}" for b in backends)
        row += f" {speedup} {t_search:11.3f} {len(summary.admissible_configs):>10}"
        print(row)


if __name__ == "__main__":
    main()
