"""The group algebra over (Z_m x Z_m)^n: elements, ring operations, transform.

An element C = sum_g c_g z^g is stored as a dense complex array of length
m^(2n).  The flat index encodes the label g = (g_1, ..., g_n) coordinate-
major (first coordinate most significant), each digit being the position of
g_i in the canonical GroupOrdering.  The transform

    c'_h = (1/M) * sum_g c_g * prod_i kernel[h_i, g_i],    M = sum_g c_g

has a fast path (the kernel matrix applied along each of the n axes, cost
O(n * m^2 * m^(2n))) and a naive reference path (direct double summation,
cost O(m^(4n))) kept solely to certify the fast one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernel as _kernel
from .error_basis import GroupElement, PhaseSystem, canonical_ordering
from .errors import ShapeMismatch, ZeroMass
from .reports import CheckReport

# |M| below this is treated as "mass is zero" (double-precision noise floor
# for O(1) coefficients).
MASS_TOL = 1e-12


@lru_cache(maxsize=None)
def label_digits(m: int, n: int) -> np.ndarray:
    """(N, n) array: mixed-radix digits (base m^2) of every flat index."""
    q = m * m
    idx = np.arange(q ** n)
    digits = np.empty((q ** n, n), dtype=np.int32)
    for i in range(n - 1, -1, -1):
        digits[:, i] = idx % q
        idx //= q
    digits.setflags(write=False)
    return digits


@lru_cache(maxsize=None)
def label_weights(m: int, n: int) -> np.ndarray:
    """(N,) array of Hamming weights: count of nonzero digits per index."""
    w = (label_digits(m, n) != 0).sum(axis=1).astype(np.int32)
    w.setflags(write=False)
    return w


@lru_cache(maxsize=None)
def _places(m: int, n: int) -> np.ndarray:
    q = m * m
    p = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    p.setflags(write=False)
    return p


def encode_label(m: int, label: Sequence[GroupElement]) -> int:
    """Flat coefficient index of a label (g_1, ..., g_n)."""
    ordering = canonical_ordering(m)
    idx = 0
    for g in label:
        idx = idx * ordering.size + ordering.index_of(g)
    return idx


def decode_index(m: int, n: int, idx: int) -> tuple[GroupElement, ...]:
    """Inverse of encode_label."""
    ordering = canonical_ordering(m)
    out = []
    for _ in range(n):
        out.append(ordering.order[idx % ordering.size])
        idx //= ordering.size
    return tuple(reversed(out))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Dense element of the group algebra; immutable after construction."""

    m: int
    n: int
    coeffs: np.ndarray
    mass: complex = field(init=False)

    def __post_init__(self):
        if self.m < 2 or self.n < 1:
            raise ValueError(f"need m >= 2 and n >= 1, got m={self.m}, n={self.n}")
        c = np.ascontiguousarray(self.coeffs, dtype=np.complex128)
        size = (self.m * self.m) ** self.n
        if c.shape != (size,):
            raise ValueError(f"expected {size} coefficients, got shape {c.shape}")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "mass", complex(c.sum()))

    @property
    def size(self) -> int:
        return self.coeffs.shape[0]

    def recompute_mass(self) -> complex:
        return complex(self.coeffs.sum())

    @classmethod
    def zero(cls, m: int, n: int) -> "AlgebraElement":
        return cls(m, n, np.zeros((m * m) ** n, dtype=np.complex128))

    @classmethod
    def indicator(cls, m: int, n: int, labels: Iterable) -> "AlgebraElement":
        """Element with coefficient 1 at each given label (or flat index)."""
        c = np.zeros((m * m) ** n, dtype=np.complex128)
        for lab in labels:
            idx = lab if isinstance(lab, (int, np.integer)) else encode_label(m, lab)
            c[idx] = 1.0
        return cls(m, n, c)

    @classmethod
    def unit(cls, m: int, n: int) -> "AlgebraElement":
        """z^0, the multiplicative identity."""
        return cls.indicator(m, n, [0])


@dataclass(frozen=True, eq=False)
class TransformResult:
    element: AlgebraElement
    source_mass: complex


def _check_shapes(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.m != b.m or a.n != b.n:
        raise ShapeMismatch(
            f"(m={a.m}, n={a.n}) vs (m={b.m}, n={b.n})"
        )


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    _check_shapes(a, b)
    return AlgebraElement(a.m, a.n, a.coeffs + b.coeffs)


def scale(r: complex, a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.m, a.n, r * a.coeffs)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Group convolution: out[k] = sum over g+h = k of a_g * b_h."""
    _check_shapes(a, b)
    ordering = canonical_ordering(a.m)
    digits = label_digits(a.m, a.n)
    places = _places(a.m, a.n)
    out = np.zeros_like(a.coeffs)
    support = np.nonzero(a.coeffs)[0]
    for gi in support:
        # indices of g + h for all h, digit by digit; h -> g+h is a bijection
        shifted = ordering.add_table[digits[gi][None, :], digits]  # (N, n)
        target = shifted @ places
        out[target] += a.coeffs[gi] * b.coeffs
    return AlgebraElement(a.m, a.n, out)


def transform(
    sys: PhaseSystem,
    a: AlgebraElement,
    threads: int = 1,
    backend: str | None = None,
) -> TransformResult:
    """The MacWilliams-type transform (fast tensor-kernel path)."""
    if sys.m != a.m:
        raise ShapeMismatch(f"system has m={sys.m}, element has m={a.m}")
    mass = a.mass
    if abs(mass) <= MASS_TOL:
        raise ZeroMass(f"|mass| = {abs(mass):.3e} <= {MASS_TOL}")
    out = _kernel.apply_axiswise(sys.kernel, a.coeffs, a.n, threads=threads, backend=backend)
    out /= mass
    return TransformResult(AlgebraElement(a.m, a.n, out), mass)


def transform_naive(sys: PhaseSystem, a: AlgebraElement) -> TransformResult:
    """Reference transform by direct double summation; certifies the fast path.

    Materializes the full m^(2n) x m^(2n) character matrix entry by entry
    from the per-coordinate kernel, never factorizing along axes.
    """
    if sys.m != a.m:
        raise ShapeMismatch(f"system has m={sys.m}, element has m={a.m}")
    mass = a.mass
    if abs(mass) <= MASS_TOL:
        raise ZeroMass(f"|mass| = {abs(mass):.3e} <= {MASS_TOL}")
    digits = label_digits(a.m, a.n)
    chars = np.ones((a.size, a.size), dtype=np.complex128)
    for i in range(a.n):
        chars *= sys.kernel[digits[:, i][:, None], digits[None, :, i]]
    out = chars @ a.coeffs / mass
    return TransformResult(AlgebraElement(a.m, a.n, out), mass)


def double_transform_scaling_check(sys: PhaseSystem, a: AlgebraElement) -> CheckReport:
    """Verify transform(transform(A)) = (m^(2n) / (M * M')) * A elementwise."""
    first = transform(sys, a)
    second = transform(sys, first.element)
    scale_factor = a.size / (first.source_mass * second.source_mass)
    resid = float(np.abs(second.element.coeffs - scale_factor * a.coeffs).max())
    return CheckReport(
        name="double-transform",
        passed=resid <= 1e-9,
        max_residual=resid,
    )


def random_element(
    m: int, n: int, seed: int, nonneg: bool = False
) -> AlgebraElement:
    """Seeded random element with mass bounded away from zero.

    nonneg=True draws uniform [0, 1) reals (code-like coefficients); the
    default draws complex Gaussians, redrawing until |mass| > 0.5.
    """
    rng = np.random.default_rng(seed)
    size = (m * m) ** n
    if nonneg:
        return AlgebraElement(m, n, rng.random(size).astype(np.complex128))
    for _ in range(64):
        c = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        if abs(c.sum()) > 0.5:
            return AlgebraElement(m, n, c)
    raise RuntimeError("could not draw an element with nonzero mass")
