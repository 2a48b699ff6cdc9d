"""Associated Laguerre polynomials and the symmetric-gauge normalization."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import DomainError, validate_quantum_numbers


@dataclass(frozen=True)
class LaguerreParams:
    degree: int
    order: int

    def __post_init__(self):
        if self.degree < 0 or self.order < 0:
            raise DomainError(
                f"Laguerre degree and order must be >= 0, got ({self.degree}, {self.order})"
            )


def radial_index(n: int, m: int) -> int:
    """Radial quantum number n - (m + |m|)/2."""
    validate_quantum_numbers(n, m)
    return n - (m + abs(m)) // 2


def _check_argument(z):
    z = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(z)) or np.any(z < 0):
        raise DomainError("Laguerre argument must be finite and >= 0")
    return z


def assoc_laguerre(params: LaguerreParams, z):
    """L^k_p(z) by upward three-term recurrence in the degree p.

    Accepts scalars or arrays; returns the same shape.
    """
    z = _check_argument(z)
    p, k = params.degree, params.order
    prev = np.ones_like(z)
    if p == 0:
        return prev if z.ndim else float(prev)
    cur = 1.0 + k - z
    for j in range(1, p):
        prev, cur = cur, ((2 * j + 1 + k - z) * cur - (j + k) * prev) / (j + 1)
    return cur if z.ndim else float(cur)


def assoc_laguerre_derivative(params: LaguerreParams, z):
    """d/dz L^k_p(z) = -L^{k+1}_{p-1}(z); zero for p = 0."""
    z = _check_argument(z)
    if params.degree == 0:
        out = np.zeros_like(z)
        return out if z.ndim else 0.0
    return -assoc_laguerre(LaguerreParams(params.degree - 1, params.order + 1), z)


def log_factorial_ratio(a: int, b: int) -> float:
    """log(a! / b!) via log-gamma."""
    return math.lgamma(a + 1) - math.lgamma(b + 1)


def normalization(n: int, m: int, l_B: float) -> float:
    """N_{n,m} = (1/l_B) sqrt(n_r! / (n + (|m| - m)/2)!)."""
    validate_quantum_numbers(n, m)
    if not (math.isfinite(l_B) and l_B > 0):
        raise DomainError(f"l_B must be finite and > 0, got {l_B!r}")
    n_r = radial_index(n, m)
    upper = n + (abs(m) - m) // 2
    return math.exp(0.5 * log_factorial_ratio(n_r, upper)) / l_B
