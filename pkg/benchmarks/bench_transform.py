#!/usr/bin/env python3
"""Benchmark the transform kernel: compiled extension vs numpy fallback.

Usage:
    python3 benchmarks/bench_transform.py [--repeats N]

Times the axis-contraction kernel on the element sizes the transform sees
(m = 2 levels, growing system size n), plus the end-to-end transform at the
performance-floor size m=2, n=8.
"""

import argparse
import time

import numpy as np

from qecalg import build_pauli_system, random_element, transform
from qecalg import kernel


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = ["python"] + (["compiled"] if kernel.HAVE_COMPILED else [])
    if not kernel.HAVE_COMPILED:
        print("note: compiled kernel not built (run: python3 setup.py build_ext --inplace)")
    print(f"default backend: {kernel.backend_name()}")
    print()

    rng = np.random.default_rng(0)
    print(f"{'size':>16} {'coeffs':>8}  " + "  ".join(f"{b:>10}" for b in backends) + "   speedup")
    for m, n in [(2, 4), (2, 6), (2, 8), (2, 9), (3, 4), (3, 5)]:
        q = m * m
        size = q ** n
        mat = np.ascontiguousarray(build_pauli_system(m).kernel)
        vec = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        times = {
            b: time_call(lambda b=b: kernel.apply_axiswise(mat, vec, n, backend=b), args.repeats)
            for b in backends
        }
        cells = "  ".join(f"{times[b] * 1e3:9.3f}ms" for b in backends)
        speedup = ""
        if len(backends) == 2:
            speedup = f"{times['python'] / times['compiled']:8.1f}x"
        print(f"{f'm={m}, n={n}':>16} {size:>8}  {cells} {speedup}")

    print()
    sys2 = build_pauli_system(2)
    element = random_element(2, 8, seed=1)
    for b in backends:
        best = time_call(lambda b=b: transform(sys2, element, backend=b), args.repeats)
        print(f"end-to-end transform m=2, n=8 [{b:>8}]: {best * 1e3:8.3f} ms")


if __name__ == "__main__":
    main()
