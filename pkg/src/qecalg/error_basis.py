"""Nice error bases with Abelian index group Z_m x Z_m.

The built-in family is the generalized Pauli basis E_(a,b) = X^a Z^b with
X|j> = |j+1 mod m> and Z|j> = w^j |j>, w = exp(2*pi*i/m).  Its phase table
obeys E_g E_h = w^(b*c) E_(g+h) for g = (a,b), h = (c,d), and the character
kernel entry is

    kernel[h, g] = w_{hg} * conj(w_{gh}) = exp(2*pi*i*(d*a - b*c)/m),

the per-coordinate factor of every character used downstream.  User-supplied
bases are accepted as explicit matrices and validated against the defining
axioms before their phase table is extracted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    ClosureViolation,
    IdentityViolation,
    RowSumViolation,
    NonUnitary,
    TraceViolation,
)
from .reports import CheckReport

# Absolute tolerance for unit-phase and identity checks on O(1) values.
PHASE_TOL = 1e-9


class GroupElement(NamedTuple):
    """Element (a, b) of Z_m x Z_m: X-exponent a, Z-exponent b."""

    a: int
    b: int


def group_add(g: GroupElement, h: GroupElement, m: int) -> GroupElement:
    return GroupElement((g.a + h.a) % m, (g.b + h.b) % m)


def group_neg(g: GroupElement, m: int) -> GroupElement:
    return GroupElement((-g.a) % m, (-g.b) % m)


@dataclass(frozen=True, eq=False)
class GroupOrdering:
    """A fixed enumeration alpha_0, ..., alpha_{m^2-1} of Z_m x Z_m.

    alpha_0 is always the identity.  For odd m the tail is arranged so that
    alpha_{m^2-i} = -alpha_i for 1 <= i <= delta = (m^2-1)/2, which is what
    the Lee enumerator needs; `lee_delta` is None for even m.  `add_table`
    and `neg_table` translate group arithmetic into ordering indices.
    """

    m: int
    order: tuple[GroupElement, ...]
    lee_delta: int | None
    index: dict
    add_table: np.ndarray
    neg_table: np.ndarray

    @property
    def size(self) -> int:
        return self.m * self.m

    def index_of(self, g: GroupElement) -> int:
        return self.index[GroupElement(g[0] % self.m, g[1] % self.m)]


@lru_cache(maxsize=None)
def canonical_ordering(m: int) -> GroupOrdering:
    """The package-wide ordering convention for Z_m x Z_m.

    Even m: plain row-major (a, b).  Odd m: identity first, then the
    lexicographically smaller member of each {g, -g} pair in lex order,
    then their negations in mirrored positions.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    elems = [GroupElement(a, b) for a in range(m) for b in range(m)]
    if m % 2 == 0:
        order = tuple(elems)
        delta = None
    else:
        reps = sorted({min(g, group_neg(g, m)) for g in elems[1:]})
        tail = [group_neg(g, m) for g in reversed(reps)]
        order = tuple([GroupElement(0, 0)] + reps + tail)
        delta = (m * m - 1) // 2
    index = {g: i for i, g in enumerate(order)}
    q = m * m
    add_table = np.empty((q, q), dtype=np.intp)
    neg_table = np.empty(q, dtype=np.intp)
    for i, g in enumerate(order):
        neg_table[i] = index[group_neg(g, m)]
        for j, h in enumerate(order):
            add_table[i, j] = index[group_add(g, h, m)]
    add_table.setflags(write=False)
    neg_table.setflags(write=False)
    return GroupOrdering(
        m=m, order=order, lee_delta=delta, index=index,
        add_table=add_table, neg_table=neg_table,
    )


@dataclass(frozen=True, eq=False)
class PhaseSystem:
    """A nice error basis reduced to its numerical data.

    omega[i, j]  = w_{alpha_i alpha_j}  (phase in E_i E_j = w * E_{i+j})
    kernel[h, g] = w_{hg} * conj(w_{gh}), the per-coordinate character value
    matrices     = the m^2 single-system unitaries realizing the basis,
                   indexed in ordering order
    pauli        = True when the matrices are the built-in X^a Z^b family,
                   unlocking the shift+phase fast path in code analysis.
    """

    m: int
    omega: np.ndarray
    kernel: np.ndarray
    ordering: GroupOrdering
    matrices: np.ndarray
    pauli: bool = False

    @property
    def q(self) -> int:
        return self.m * self.m


def _roots_of_unity(m: int) -> np.ndarray:
    """exp(2*pi*i*k/m) for k = 0..m-1, with components snapped to exact
    0 / +-1 when within 1e-12 so that binary systems stay integer-exact."""
    k = np.arange(m)
    roots = np.exp(2j * np.pi * k / m)
    re, im = roots.real.copy(), roots.imag.copy()
    for arr in (re, im):
        for target in (0.0, 1.0, -1.0):
            arr[np.abs(arr - target) < 1e-12] = target
    return re + 1j * im


def _pauli_matrices(m: int, ordering: GroupOrdering) -> np.ndarray:
    """Explicit E_(a,b) = X^a Z^b, one m x m matrix per ordering index.

    E_(a,b)|j> = w^(b*j) |j+a mod m>.
    """
    roots = _roots_of_unity(m)
    mats = np.zeros((m * m, m, m), dtype=np.complex128)
    for i, (a, b) in enumerate(ordering.order):
        for j in range(m):
            mats[i, (j + a) % m, j] = roots[(b * j) % m]
    mats.setflags(write=False)
    return mats


def build_pauli_system(m: int) -> PhaseSystem:
    """Construct the generalized Pauli nice error basis for m levels.

    Raises ValueError for m < 2.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    ordering = canonical_ordering(m)
    roots = _roots_of_unity(m)
    q = m * m
    omega = np.empty((q, q), dtype=np.complex128)
    for i, (_, b) in enumerate(ordering.order):
        for j, (c, _) in enumerate(ordering.order):
            omega[i, j] = roots[(b * c) % m]
    kernel = omega * np.conj(omega.T)
    omega.setflags(write=False)
    kernel.setflags(write=False)
    return PhaseSystem(
        m=m, omega=omega, kernel=kernel, ordering=ordering,
        matrices=_pauli_matrices(m, ordering), pauli=True,
    )


def character(sys: PhaseSystem, h: GroupElement, g: GroupElement) -> complex:
    """The per-coordinate character value w_{hg} * conj(w_{gh})."""
    return complex(sys.kernel[sys.ordering.index_of(h), sys.ordering.index_of(g)])


def verify_kernel_row_sums(sys: PhaseSystem) -> CheckReport:
    """Check that sum_g w_{gh} * conj(w_{hg}) = 0 for every nonzero h."""
    q = sys.q
    sums = (sys.omega * np.conj(sys.omega.T)).sum(axis=1)  # entry h: sum over g
    resid = np.abs(sums[1:])
    bad = tuple(int(h) for h in range(1, q) if abs(sums[h]) > PHASE_TOL)
    return CheckReport(
        name="kernel-row-sums",
        passed=not bad,
        max_residual=float(resid.max()) if q > 1 else 0.0,
        failures=bad,
        detail="" if not bad else f"nonzero row sums at h indices {bad}",
    )


def validate_custom_basis(matrices: Sequence[np.ndarray]) -> PhaseSystem:
    """Accept a user-supplied nice error basis given as explicit matrices.

    `matrices` must contain exactly m^2 unitary m x m matrices, indexed by
    group elements in canonical ordering order.  Checks, in order: unitarity,
    E_0 = I, tr E_g = m * delta(g,0), closure E_g E_h = w_{gh} E_{g+h} with
    |w_{gh}| = 1, and the vanishing row sums of the extracted phase kernel.
    Each failure raises the matching exception naming the offending indices.
    """
    mats = np.asarray(matrices, dtype=np.complex128)
    if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
        raise ValueError("expected a sequence of square matrices")
    m = mats.shape[1]
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    q = m * m
    if mats.shape[0] != q:
        raise ValueError(f"expected m^2 = {q} matrices, got {mats.shape[0]}")
    ordering = canonical_ordering(m)
    eye = np.eye(m)

    for i in range(q):
        if np.abs(mats[i] @ mats[i].conj().T - eye).max() > PHASE_TOL:
            raise NonUnitary(f"matrix {i} (element {ordering.order[i]}) is not unitary")
    if np.abs(mats[0] - eye).max() > PHASE_TOL:
        raise IdentityViolation("matrix 0 is not the identity")
    for i in range(q):
        expected = m if i == 0 else 0.0
        tr = np.trace(mats[i])
        if abs(tr - expected) > PHASE_TOL:
            raise TraceViolation(
                f"tr E_{i} = {tr:.6g}, expected {expected} (element {ordering.order[i]})"
            )

    omega = np.empty((q, q), dtype=np.complex128)
    for i in range(q):
        for j in range(q):
            k = int(ordering.add_table[i, j])
            prod = mats[i] @ mats[j]
            w = np.trace(mats[k].conj().T @ prod) / m
            if abs(abs(w) - 1.0) > PHASE_TOL or np.abs(prod - w * mats[k]).max() > PHASE_TOL:
                raise ClosureViolation(
                    f"E_{i} E_{j} is not a unit phase times E_{k}"
                )
            omega[i, j] = w
    kernel = omega * np.conj(omega.T)
    omega.setflags(write=False)
    kernel.setflags(write=False)
    mats = mats.copy()
    mats.setflags(write=False)
    sys = PhaseSystem(m=m, omega=omega, kernel=kernel, ordering=ordering, matrices=mats)

    report = verify_kernel_row_sums(sys)
    if not report.passed:
        raise RowSumViolation(report.detail)
    return sys
