#!/usr/bin/env python3
"""Benchmark the compiled elimination kernels against the pure-Python twin.

Micro level: fraction-free RREF and Bareiss determinants on seeded random
integer matrices. Macro level: the full invariant-form decision for a pair of
representative algebras, run once per backend by swapping the kernel functions
(linalg resolves them per call through the kernels module).

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from quadlie import _kernels_py, kernels

try:
    from quadlie import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def random_matrix(rng, nrows, ncols, bound):
    return [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)]


def timeit(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def micro_workloads():
    rng = random.Random(20240601)
    yield "rref 40x20 |e|<=99", ("rref", random_matrix(rng, 40, 20, 99), 20)
    yield "rref 120x40 |e|<=99", ("rref", random_matrix(rng, 120, 40, 99), 40)
    yield "rref 240x60 |e|<=9", ("rref", random_matrix(rng, 240, 60, 9), 60)
    yield "det 16x16 |e|<=999", ("det", random_matrix(rng, 16, 16, 999), None)
    yield "det 24x24 |e|<=99", ("det", random_matrix(rng, 24, 24, 99), None)
    yield "det 32x32 |e|<=9", ("det", random_matrix(rng, 32, 32, 9), None)


def macro_algebras():
    from quadlie.graphs import build_algebra, cycle
    from quadlie.hall import free_nilpotent

    return [
        ("decide n(4,2)", free_nilpotent(4, 2)),
        ("decide C6 graph algebra", build_algebra(cycle(6)).algebra),
    ]


def run_macro(g):
    from quadlie.config import RunConfig
    from quadlie.verdicts import decide

    decide(g, RunConfig(), solver="always")


def with_backend(impl, fn):
    saved = (kernels.rref_int, kernels.det_int)
    kernels.rref_int, kernels.det_int = impl.rref_int, impl.det_int
    try:
        return fn()
    finally:
        kernels.rref_int, kernels.det_int = saved


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled kernels unavailable; only the pure backend will run")
    header = f"{'workload':32} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, (kind, matrix, ncols) in micro_workloads():
        def run(impl):
            if kind == "rref":
                impl.rref_int(matrix, ncols)
            else:
                impl.det_int(matrix)

        pure = timeit(lambda: run(_kernels_py), args.repeats)
        if _kernels_c is not None:
            comp = timeit(lambda: run(_kernels_c), args.repeats)
            print(f"{name:32} {pure * 1e3:9.2f}ms {comp * 1e3:9.2f}ms {pure / comp:7.2f}x")
        else:
            print(f"{name:32} {pure * 1e3:9.2f}ms {'-':>10} {'-':>8}")

    for name, algebra in macro_algebras():
        pure = timeit(lambda: with_backend(_kernels_py, lambda: run_macro(algebra)), max(1, args.repeats // 2))
        if _kernels_c is not None:
            comp = timeit(lambda: with_backend(_kernels_c, lambda: run_macro(algebra)), max(1, args.repeats // 2))
            print(f"{name:32} {pure * 1e3:9.2f}ms {comp * 1e3:9.2f}ms {pure / comp:7.2f}x")
        else:
            print(f"{name:32} {pure * 1e3:9.2f}ms {'-':>10} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
