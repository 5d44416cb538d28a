"""Kernel selection: compiled extension when built, numpy fallback otherwise."""

from __future__ import annotations

import numpy as np

from . import _kernel_py

try:
    from . import _kernel_cy
    HAVE_COMPILED = True
except ImportError:
    _kernel_cy = None
    HAVE_COMPILED = False

_default = _kernel_cy if HAVE_COMPILED else _kernel_py


def backend_name() -> str:
    return "compiled" if HAVE_COMPILED else "python"


def apply_axiswise(
    mat: np.ndarray,
    vec: np.ndarray,
    n: int,
    threads: int = 1,
    backend: str | None = None,
) -> np.ndarray:
    """Contract `mat` (s x s) along each of the n axes of `vec` (length s^n).

    `backend` forces a path: "python", "compiled", or None for the default
    selected at import.  Output is a fresh complex128 array.
    """
    if backend is None:
        impl = _default
    elif backend == "python":
        impl = _kernel_py
    elif backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernel not built; run setup.py build_ext --inplace")
        impl = _kernel_cy
    else:
        raise ValueError(f"unknown backend {backend!r}")
    mat = np.ascontiguousarray(mat, dtype=np.complex128)
    vec = np.ascontiguousarray(vec, dtype=np.complex128)
    if vec.shape != (mat.shape[0] ** n,):
        raise ValueError(
            f"vector length {vec.shape} does not match side {mat.shape[0]} and n={n}"
        )
    return impl.apply_axiswise(mat, vec, n, threads)
