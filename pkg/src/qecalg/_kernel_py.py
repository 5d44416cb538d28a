"""Pure-numpy axis contraction kernel (fallback path).

Contracts an s x s matrix along each of the n axes of a length-s^n vector
viewed as an n-dimensional array in C order.  Per-slice summation is a
single GEMM, so results do not depend on how many worker threads are used.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

# below this many elements the thread-pool overhead is never worth it
_THREAD_MIN_SIZE = 1 << 14


def apply_axiswise(mat: np.ndarray, vec: np.ndarray, n: int, threads: int = 1) -> np.ndarray:
    s = mat.shape[0]
    a = np.ascontiguousarray(vec, dtype=np.complex128)
    mat = np.ascontiguousarray(mat, dtype=np.complex128)
    for axis in range(n):
        outer = s ** axis
        inner = s ** (n - 1 - axis)
        a = a.reshape(outer, s, inner)
        if threads > 1 and outer >= threads and a.size >= _THREAD_MIN_SIZE:
            a = _threaded_matmul(mat, a, threads)
        else:
            a = np.matmul(mat, a)
    return a.reshape(-1)


def _threaded_matmul(mat: np.ndarray, a: np.ndarray, threads: int) -> np.ndarray:
    """matmul over independent outer slices, split across a thread pool.

    Each slice is the exact same GEMM as the serial path, so the result is
    identical for every worker count.
    """
    out = np.empty_like(a)
    outer = a.shape[0]
    bounds = np.linspace(0, outer, threads + 1, dtype=int)

    def work(k):
        lo, hi = bounds[k], bounds[k + 1]
        if lo < hi:
            np.matmul(mat, a[lo:hi], out=out[lo:hi])

    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(work, range(threads)))
    return out
