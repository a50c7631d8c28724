"""Benchmark: compiled extension kernels vs the pure-Python fallback.

Three kernel microbenchmarks run in-process against both backend
modules; one end-to-end verdict runs in subprocesses with the backend
forced through SEMIRING_LAB_KERNELS.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import subprocess
import sys
import time

from semiring_lab import boolean_semiring, matrix_semiring, regular_semimodule
from semiring_lab.congruences import translation_ops
from semiring_lab.kernels import _pure

try:
    from semiring_lab.kernels import _speedups
except ImportError:
    _speedups = None


def bench_closure(kernel):
    M = regular_semimodule(matrix_semiring(boolean_semiring(), 2))
    ops = translation_ops(M)
    n = M.order
    for a in range(n):
        for b in range(a + 1, n):
            kernel.closure_labels(n, ops, [(a, b)])


def bench_search(kernel):
    M2 = matrix_semiring(boolean_semiring(), 2)
    reg = regular_semimodule(M2)
    add = [v for row in reg.add for v in row]
    uns = [list(row) for row in reg.action]
    kernel.search_maps(16, 16, [add], [add], uns, uns, [(0, 0)], None, True, 0)
    kernel.search_maps(16, 16, [add], [add], uns, uns, [(0, 0)], None, False, 200)


def bench_monoids(kernel):
    kernel.comm_monoid_tables(5)


def timed(fn, kernel, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(kernel)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_end_to_end(backend):
    code = ("import time, semiring_lab as sl; t0=time.perf_counter(); "
            "sl.ci_verdict(sl.chain_semiring(2), 5); "
            "print(time.perf_counter()-t0)")
    env = dict(os.environ, SEMIRING_LAB_KERNELS=backend)
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rows = []
    for label, fn in (("congruence closure (order 16)", bench_closure),
                      ("map search (order 16, iso + homs)", bench_search),
                      ("commutative monoid census (order 5)", bench_monoids)):
        pure_t = timed(fn, _pure, args.repeat)
        if _speedups is not None:
            fast_t = timed(fn, _speedups, args.repeat)
            rows.append((label, pure_t, fast_t))
        else:
            rows.append((label, pure_t, None))

    pure_e2e = bench_end_to_end("pure")
    fast_e2e = bench_end_to_end("compiled") if _speedups is not None else None
    rows.append(("end-to-end: bounded CI verdict", pure_e2e, fast_e2e))

    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for label, pure_t, fast_t in rows:
        if fast_t is None:
            print(f"{label:<{width}}  {pure_t * 1e3:>8.2f}ms  {'n/a':>10}  {'':>8}")
        else:
            print(f"{label:<{width}}  {pure_t * 1e3:>8.2f}ms  {fast_t * 1e3:>8.2f}ms"
                  f"  {pure_t / fast_t:>7.1f}x")
    if _speedups is None:
        print("\ncompiled kernels not built; showing the pure backend only")


if __name__ == "__main__":
    main()
