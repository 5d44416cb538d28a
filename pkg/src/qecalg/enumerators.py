"""Weight enumerators of algebra elements and their transform identities.

Four enumerators, coarsest last:

  exact     — one variable z_{i,s} per coordinate i and group element s;
              its expanded form IS the element, so it is only ever evaluated.
  complete  — counts occurrences of each group element across coordinates.
  Lee       — complete with each element merged with its negation (odd m).
  Hamming   — counts nonzero coordinates.

Each has a MacWilliams-type identity linking the enumerator of C to that of
its transform C'.  The exact/complete/Lee identities are verified by random
evaluation at points on the complex unit disk; the Hamming identity

    W_C'(x, y) = (1/M) * W_C(x + (m^2 - 1) y, x - y)

is bivariate and checked symbolically by binomial expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .error_basis import GroupElement, GroupOrdering, PhaseSystem, canonical_ordering
from .errors import EvenM
from .group_algebra import AlgebraElement, TransformResult, label_digits, label_weights, transform
from .reports import CheckReport

IDENTITY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class CompleteDistribution:
    """Map composition tuple (s_0..s_{m^2-1}) -> summed coefficient."""

    m: int
    n: int
    terms: dict


@dataclass(frozen=True, eq=False)
class LeeDistribution:
    """Map Lee composition tuple (l_0..l_delta) -> summed coefficient."""

    m: int
    n: int
    delta: int
    terms: dict


@dataclass(frozen=True, eq=False)
class HammingDistribution:
    """Coefficients A_0..A_n, A_i = sum of c_g over labels of weight i."""

    m: int
    n: int
    a: np.ndarray

    def rounded(self, tol: float = 1e-6):
        """Integer-rounded vector, or None if some entry is not near-integer."""
        r = np.round(self.a.real)
        if np.abs(self.a - r).max() <= tol:
            return tuple(int(v) for v in r)
        return None


def _grouped_sums(counts: np.ndarray, coeffs: np.ndarray):
    """Sum coefficients by unique count-vector; rows summing to exactly
    zero (unoccupied keys of indicator elements) are dropped."""
    keys, inverse = np.unique(counts, axis=0, return_inverse=True)
    sums = np.zeros(len(keys), dtype=np.complex128)
    np.add.at(sums, inverse, coeffs)
    out_keys, out_vals = [], []
    for i in range(len(keys)):
        if sums[i] != 0:
            out_keys.append(tuple(int(x) for x in keys[i]))
            out_vals.append(complex(sums[i]))
    return out_keys, out_vals


def composition(label: Sequence[GroupElement], ordering: GroupOrdering) -> tuple[int, ...]:
    """Counts of each ordering element among the coordinates of the label."""
    counts = [0] * ordering.size
    for g in label:
        counts[ordering.index_of(g)] += 1
    return tuple(counts)


def _require_odd(m: int) -> None:
    if m % 2 == 0:
        raise EvenM(f"Lee machinery needs odd m, got m={m}")


@lru_cache(maxsize=None)
def _lee_class(m: int) -> np.ndarray:
    """Ordering index -> Lee class: 0 -> 0, j -> j for j <= delta, else m^2-j."""
    _require_odd(m)
    q = m * m
    delta = (q - 1) // 2
    cls = np.arange(q)
    cls[delta + 1:] = q - cls[delta + 1:]
    cls.setflags(write=False)
    return cls


def lee_composition(label: Sequence[GroupElement], ordering: GroupOrdering) -> tuple[int, ...]:
    """(l_0..l_delta) with l_0 = s_0 and l_i = s_i + s_{m^2-i}."""
    _require_odd(ordering.m)
    cls = _lee_class(ordering.m)
    counts = [0] * (ordering.lee_delta + 1)
    for g in label:
        counts[cls[ordering.index_of(g)]] += 1
    return tuple(counts)


def complete_distribution(a: AlgebraElement) -> CompleteDistribution:
    q = a.m * a.m
    digits = label_digits(a.m, a.n)
    counts = np.stack([(digits == v).sum(axis=1) for v in range(q)], axis=1)
    keys, sums = _grouped_sums(counts, a.coeffs)
    return CompleteDistribution(a.m, a.n, dict(zip(keys, sums)))


def lee_distribution(a: AlgebraElement) -> LeeDistribution:
    _require_odd(a.m)
    delta = (a.m * a.m - 1) // 2
    cls = _lee_class(a.m)
    digits = cls[label_digits(a.m, a.n)]
    counts = np.stack([(digits == v).sum(axis=1) for v in range(delta + 1)], axis=1)
    keys, sums = _grouped_sums(counts, a.coeffs)
    return LeeDistribution(a.m, a.n, delta, dict(zip(keys, sums)))


def hamming_distribution(a: AlgebraElement) -> HammingDistribution:
    weights = label_weights(a.m, a.n)
    out = np.zeros(a.n + 1, dtype=np.complex128)
    np.add.at(out, weights, a.coeffs)
    return HammingDistribution(a.m, a.n, out)


# ---------------------------------------------------------------------------
# identity verification
# ---------------------------------------------------------------------------

def _unit_disk_points(rng: np.random.Generator, shape) -> np.ndarray:
    r = np.sqrt(rng.random(shape))
    theta = rng.random(shape) * 2 * np.pi
    return r * np.exp(1j * theta)


def _relative_residual(lhs: complex, rhs: complex) -> float:
    denom = max(abs(lhs), abs(rhs), 1e-300)
    return abs(lhs - rhs) / denom


def _evaluate_products(values: np.ndarray, digits: np.ndarray, per_coordinate: bool) -> np.ndarray:
    """prod_i values[i, digit_i] (per_coordinate) or prod_i values[digit_i]."""
    n = digits.shape[1]
    out = np.ones(digits.shape[0], dtype=np.complex128)
    for i in range(n):
        out *= values[i, digits[:, i]] if per_coordinate else values[digits[:, i]]
    return out


def exact_enumerator_value(a: AlgebraElement, points: np.ndarray) -> complex:
    """Evaluate the exact enumerator of `a` at `points[i, s]`.

    The exact enumerator uses one variable per (coordinate, group element)
    pair; its expanded form is the element itself, so it is only ever
    evaluated, never expanded.
    """
    points = np.asarray(points, dtype=np.complex128)
    q = a.m * a.m
    if points.shape != (a.n, q):
        raise ValueError(f"expected points of shape ({a.n}, {q}), got {points.shape}")
    digits = label_digits(a.m, a.n)
    return complex(a.coeffs @ _evaluate_products(points, digits, True))


def verify_exact_identity(
    sys: PhaseSystem, a: AlgebraElement, trials: int, seed: int = 0
) -> CheckReport:
    """Exact-enumerator identity, tested by evaluation at random points.

    Per trial: draw z[i, s] on the unit disk for each coordinate i and symbol
    s; the enumerator of C' at z must equal (1/M) times the enumerator of C
    with z[i, r] replaced by sum_s kernel[s, r] * z[i, s].
    """
    rng = np.random.default_rng(seed)
    dual = transform(sys, a).element
    worst = 0.0
    bad = []
    for t in range(trials):
        z = _unit_disk_points(rng, (a.n, sys.q))
        lhs = exact_enumerator_value(dual, z)
        w = z @ sys.kernel  # w[i, r] = sum_s z[i, s] * kernel[s, r]
        rhs = exact_enumerator_value(a, w) / a.mass
        resid = _relative_residual(lhs, rhs)
        worst = max(worst, resid)
        if resid > IDENTITY_TOL:
            bad.append(t)
    return CheckReport(
        name="exact-identity",
        passed=not bad,
        max_residual=worst,
        failures=tuple(bad),
        detail=f"{trials} evaluation points",
    )


def verify_complete_identity(
    sys: PhaseSystem, a: AlgebraElement, trials: int, seed: int = 0
) -> CheckReport:
    """Complete-enumerator identity in m^2 shared variables, by evaluation."""
    rng = np.random.default_rng(seed)
    digits = label_digits(a.m, a.n)
    dual = transform(sys, a).element
    worst = 0.0
    bad = []
    for t in range(trials):
        z = _unit_disk_points(rng, sys.q)
        lhs = complex(dual.coeffs @ _evaluate_products(z, digits, False))
        w = z @ sys.kernel
        rhs = complex(a.coeffs @ _evaluate_products(w, digits, False)) / a.mass
        resid = _relative_residual(lhs, rhs)
        worst = max(worst, resid)
        if resid > IDENTITY_TOL:
            bad.append(t)
    return CheckReport(
        name="complete-identity",
        passed=not bad,
        max_residual=worst,
        failures=tuple(bad),
        detail=f"{trials} evaluation points",
    )


def verify_lee_identity(
    sys: PhaseSystem, a: AlgebraElement, trials: int, seed: int = 0
) -> CheckReport:
    """Lee-enumerator identity (odd m only), by evaluation.

    The substituted variable for Lee class i is
        z_0 + sum_{s=1..delta} 2*Re(kernel[s, i]) * z_s,
    well defined on classes because kernel[s, -g] = conj(kernel[s, g]).
    """
    _require_odd(sys.m)
    rng = np.random.default_rng(seed)
    cls = _lee_class(sys.m)
    digits = cls[label_digits(a.m, a.n)]
    delta = (sys.q - 1) // 2
    dual = transform(sys, a).element
    # subst[i, s]: coefficient of z_s in the replacement for Lee variable i
    subst = np.zeros((delta + 1, delta + 1))
    subst[:, 0] = 1.0
    subst[:, 1:] = 2.0 * sys.kernel[1:delta + 1, :delta + 1].real.T
    worst = 0.0
    bad = []
    for t in range(trials):
        z = _unit_disk_points(rng, delta + 1)
        lhs = complex(dual.coeffs @ _evaluate_products(z, digits, False))
        w = subst @ z
        rhs = complex(a.coeffs @ _evaluate_products(w, digits, False)) / a.mass
        resid = _relative_residual(lhs, rhs)
        worst = max(worst, resid)
        if resid > IDENTITY_TOL:
            bad.append(t)
    return CheckReport(
        name="lee-identity",
        passed=not bad,
        max_residual=worst,
        failures=tuple(bad),
        detail=f"{trials} evaluation points",
    )


def macwilliams_hamming(dist: HammingDistribution, mass: complex) -> np.ndarray:
    """Coefficients of (1/M) * W(x + (m^2-1)y, x - y), by binomial expansion."""
    n, q = dist.n, dist.m * dist.m
    out = np.zeros(n + 1, dtype=np.complex128)
    for j in range(n + 1):
        aj = dist.a[j]
        if aj == 0:
            continue
        # (x + (q-1)y)^(n-j) * (x - y)^j, coefficient of x^(n-k) y^k
        for p in range(n - j + 1):
            base = aj * comb(n - j, p) * (q - 1) ** p
            for s in range(j + 1):
                out[p + s] += base * comb(j, s) * (-1) ** s
    return out / mass


def verify_hamming_identity(sys: PhaseSystem, a: AlgebraElement) -> CheckReport:
    """Hamming-enumerator identity, closed form via binomial expansion."""
    dual = transform(sys, a).element
    lhs = hamming_distribution(dual).a
    rhs = macwilliams_hamming(hamming_distribution(a), a.mass)
    resid = float(np.abs(lhs - rhs).max())
    return CheckReport(name="hamming-identity", passed=resid <= IDENTITY_TOL, max_residual=resid)
