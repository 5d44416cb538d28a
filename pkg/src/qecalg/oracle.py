"""Brute-force dense-matrix reference implementations.

Everything here materializes operators as explicit m^n x m^n matrices and
exists solely to certify the fast paths at small sizes; nothing scales.
"""

from __future__ import annotations

import numpy as np

from .code_analysis import BasisVectors, CodeSpec, StabilizerGenerators, validate_code
from .error_basis import PhaseSystem
from .errors import SizeCap
from .group_algebra import AlgebraElement, label_digits
from .reports import CheckReport

DEFAULT_SIZE_CAP = 256
_TOL = 1e-9


def _check_cap(m: int, n: int, cap: int) -> None:
    if m ** n > cap:
        raise SizeCap(f"m^n = {m ** n} exceeds cap {cap}")


def build_operator(sys: PhaseSystem, label, cap: int = DEFAULT_SIZE_CAP) -> np.ndarray:
    """Kronecker product of the single-system matrices for the label."""
    n = len(label)
    _check_cap(sys.m, n, cap)
    out = np.ones((1, 1), dtype=np.complex128)
    for g in label:
        out = np.kron(out, sys.matrices[sys.ordering.index_of(g)])
    return out


def oracle_character(sys: PhaseSystem, h, g, cap: int = DEFAULT_SIZE_CAP) -> complex:
    """tr(E_h^dag E_g^dag E_h E_g) / m^n with explicit matrices."""
    eh = build_operator(sys, h, cap)
    eg = build_operator(sys, g, cap)
    return complex(np.trace(eh.conj().T @ eg.conj().T @ eh @ eg) / sys.m ** len(h))


def verify_basis_axioms(sys: PhaseSystem) -> CheckReport:
    """Check identity, traces, and phase closure of the stored matrices
    against the stored omega table."""
    m, q = sys.m, sys.q
    mats = sys.matrices
    worst = 0.0
    bad = []

    r = float(np.abs(mats[0] - np.eye(m)).max())
    worst = max(worst, r)
    if r > _TOL:
        bad.append(("identity", 0))
    for i in range(q):
        expected = m if i == 0 else 0.0
        r = abs(np.trace(mats[i]) - expected)
        worst = max(worst, r)
        if r > _TOL:
            bad.append(("trace", i))
    add = sys.ordering.add_table
    for i in range(q):
        for j in range(q):
            w = sys.omega[i, j]
            r = max(
                float(np.abs(mats[i] @ mats[j] - w * mats[int(add[i, j])]).max()),
                abs(abs(w) - 1.0),
            )
            worst = max(worst, r)
            if r > _TOL:
                bad.append(("closure", i, j))
    return CheckReport(
        name="basis-axioms",
        passed=not bad,
        max_residual=worst,
        failures=tuple(bad),
    )


def projector(sys: PhaseSystem, code: CodeSpec, cap: int = DEFAULT_SIZE_CAP) -> np.ndarray:
    """Orthogonal projector onto the code space, as a dense matrix.

    For stabilizer input, each generator contributes the averaging projector
    (1/m) sum_t (phi E)^t with phi = exp(i*pi*phase/m); the phased operator
    must have order dividing m.
    """
    validate_code(code)
    _check_cap(code.m, code.n, cap)
    dim = code.m ** code.n
    if isinstance(code.body, BasisVectors):
        v = code.body.vectors
        return v.T @ v.conj()
    p = np.eye(dim, dtype=np.complex128)
    for gen, phase in zip(code.body.labels, code.body.phases):
        op = np.exp(1j * np.pi * phase / code.m) * build_operator(sys, gen, cap)
        power = np.eye(dim, dtype=np.complex128)
        avg = np.zeros_like(power)
        for _ in range(code.m):
            avg += power
            power = power @ op
        if np.abs(power - np.eye(dim)).max() > _TOL:
            raise ValueError(
                f"phased generator {gen} does not have order dividing m={code.m}"
            )
        p = p @ (avg / code.m)
    if np.abs(p @ p - p).max() > _TOL or np.abs(p - p.conj().T).max() > _TOL:
        raise ValueError("stabilizer data does not define an orthogonal projector")
    return p


def codewords_from_stabilizers(
    sys: PhaseSystem, code: CodeSpec, cap: int = DEFAULT_SIZE_CAP
) -> np.ndarray:
    """(K, m^n) orthonormal codewords extracted from the projector."""
    p = projector(sys, code, cap)
    k = round(float(np.trace(p).real))
    vals, vecs = np.linalg.eigh(p)
    if np.abs(vals[-k:] - 1.0).max() > 1e-7:
        raise ValueError("projector eigenvalues are not 0/1 within tolerance")
    return np.ascontiguousarray(vecs[:, -k:].T)


def oracle_associated_element(
    sys: PhaseSystem, code: CodeSpec, cap: int = DEFAULT_SIZE_CAP
) -> AlgebraElement:
    """c_g = |tr(E_g P)|^2 / K^2 with an explicitly materialized projector."""
    p = projector(sys, code, cap)
    k = round(float(np.trace(p).real))
    m, n = code.m, code.n
    digits = label_digits(m, n)
    order = sys.ordering.order
    coeffs = np.empty(digits.shape[0], dtype=np.complex128)
    for idx in range(digits.shape[0]):
        label = [order[d] for d in digits[idx]]
        e = build_operator(sys, label, cap)
        coeffs[idx] = abs((e * p.T).sum()) ** 2 / k ** 2
    return AlgebraElement(m, n, coeffs)


def oracle_dual_element(
    sys: PhaseSystem, code: CodeSpec, cap: int = DEFAULT_SIZE_CAP
) -> AlgebraElement:
    """c'_h = (1/K) sum_{i,j} |<v_i|E_h|v_j>|^2 with explicit matrices."""
    validate_code(code)
    _check_cap(code.m, code.n, cap)
    if isinstance(code.body, BasisVectors):
        v = code.body.vectors
    else:
        v = codewords_from_stabilizers(sys, code, cap)
    k = v.shape[0]
    m, n = code.m, code.n
    digits = label_digits(m, n)
    order = sys.ordering.order
    coeffs = np.empty(digits.shape[0], dtype=np.complex128)
    for idx in range(digits.shape[0]):
        label = [order[d] for d in digits[idx]]
        e = build_operator(sys, label, cap)
        w = v.conj() @ (e @ v.T)
        coeffs[idx] = (np.abs(w) ** 2).sum() / k
    return AlgebraElement(m, n, coeffs)
