# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled axis contraction kernel (hot path).

Same contract as _kernel_py.apply_axiswise.  Summation over the contracted
index runs in fixed ascending order with no BLAS in the loop, so results
are deterministic run to run and independent of worker count.  Execution
is serial regardless of the `threads` argument (kept for interface parity
with the fallback).
"""

import numpy as np

DEF BLOCK = 128


cdef void _contract_axis(const double complex[:, ::1] mat,
                         const double complex[::1] src,
                         double complex[::1] dst,
                         Py_ssize_t outer, Py_ssize_t s, Py_ssize_t inner) noexcept nogil:
    cdef Py_ssize_t o, h, g, j, base, ob, ib, rb, width
    cdef double complex c
    cdef double complex acc[BLOCK]
    for o in range(outer):
        base = o * s * inner
        rb = 0
        while rb < inner:
            width = inner - rb
            if width > BLOCK:
                width = BLOCK
            for h in range(s):
                for j in range(width):
                    acc[j] = 0
                for g in range(s):
                    c = mat[h, g]
                    ib = base + g * inner + rb
                    for j in range(width):
                        acc[j] = acc[j] + c * src[ib + j]
                ob = base + h * inner + rb
                for j in range(width):
                    dst[ob + j] = acc[j]
            rb += width


def apply_axiswise(mat, vec, Py_ssize_t n, int threads=1):
    cdef const double complex[:, ::1] M = np.ascontiguousarray(mat, dtype=np.complex128)
    a = np.array(vec, dtype=np.complex128)
    b = np.empty_like(a)
    cdef double complex[::1] src = a
    cdef double complex[::1] dst = b
    cdef double complex[::1] tmp
    cdef Py_ssize_t s = M.shape[0]
    cdef Py_ssize_t N = a.shape[0]
    cdef Py_ssize_t axis, outer, inner
    outer = 1
    inner = N // s
    with nogil:
        for axis in range(n):
            _contract_axis(M, src, dst, outer, s, inner)
            tmp = src
            src = dst
            dst = tmp
            outer *= s
            inner //= s
    return a if n % 2 == 0 else b
