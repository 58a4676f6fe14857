"""Univalence and starlikeness radii for harmonic means.

Every radius here is a sufficient one: the combination rescaled to it is
guaranteed to be in the target class, but larger radii are not excluded.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .classes import as_lambda
from .series import DiskFunction, DomainError

BISECTION_TOL = 1e-9
BISECTION_MAX_ITER = 200


class Theorem(str, Enum):
    T1_U = "T1_U"
    T1_STARLIKE = "T1_starlike"
    T2A = "T2a"
    T2B = "T2b"
    T3 = "T3"
    T4 = "T4"
    BISECTION = "Bisection"


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    theorem: Theorem
    lambda_out: float | None = None
    sufficient_only: bool = True

    def __post_init__(self):
        if not (0.0 < self.radius <= 1.0):
            raise DomainError(f"radius {self.radius} outside (0, 1]")

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "theorem": self.theorem.value,
            "lambda": self.lambda_out,
            "sufficient_only": self.sufficient_only,
        }


def _t1_formula(lam: float) -> float:
    return math.sqrt(lam / (1.0 + lam))


def radius_t1(lam) -> RadiusResult:
    """Harmonic mean of two univalent functions, rescaled by ``r``, lies in
    U(lambda) for ``r <= sqrt(lambda / (1 + lambda))``."""
    lam = as_lambda(lam)
    return RadiusResult(_t1_formula(lam), Theorem.T1_U, lam)


def radius_t2a(lam) -> RadiusResult:
    """Same bound for the mean of ``m`` univalent functions."""
    lam = as_lambda(lam)
    return RadiusResult(_t1_formula(lam), Theorem.T2A, lam)


def radius_t1_starlike(b1_plus_c1: complex) -> RadiusResult:
    """Starlikeness radius ``sqrt(1 - 2/(4 - |b_1 + c_1|))``.

    ``b_1 + c_1 = -F''(0)`` for the two-function mean; ``|b_1 + c_1| >= 2``
    leaves no positive radius and is rejected.
    """
    s = abs(complex(b1_plus_c1))
    if not s < 2.0:
        raise DomainError(f"|b1 + c1| = {s} >= 2 gives a degenerate (zero) radius")
    lam = 1.0 - s / 2.0
    return RadiusResult(math.sqrt(1.0 - 2.0 / (4.0 - s)), Theorem.T1_STARLIKE, lam)


def radius_from_k(k: float) -> float:
    """``sqrt((-K^2 + K sqrt(K^2 + 4)) / 2)`` in the cancellation-free form."""
    return math.sqrt(2.0 * k / (math.sqrt(k * k + 4.0) + k))


def radius_t3(lam1, lam2, lam_target) -> RadiusResult:
    """Two functions in U(lambda_1), U(lambda_2); target class U(lambda)."""
    l1, l2, lam = as_lambda(lam1), as_lambda(lam2), as_lambda(lam_target)
    k = math.sqrt(2.0 * lam * lam / (l1 + l2))
    return RadiusResult(radius_from_k(k), Theorem.T3, lam)


def radius_t3_t4(lambdas: Sequence, lam_target) -> RadiusResult:
    """``m`` functions in U(lambda_k), ``K = sqrt(m lambda^2 / sum lambda_k)``."""
    lams = [as_lambda(x) for x in lambdas]
    if len(lams) < 2:
        raise DomainError("need at least two lambda values")
    lam = as_lambda(lam_target)
    k = math.sqrt(len(lams) * lam * lam / sum(lams))
    theorem = Theorem.T3 if len(lams) == 2 else Theorem.T4
    return RadiusResult(radius_from_k(k), theorem, lam)


def radius_t2b(second_coeffs: Sequence[complex]) -> RadiusResult:
    """Starlikeness radius for ``m`` functions from their ``f_k''(0)`` values.

    ``lambda = 1 - |(1/m) sum f_k''(0)/2|``; the radius is the U(lambda)
    one. All ``f_k''(0) = 0`` gives ``1/sqrt(2)``.
    """
    vals = [complex(v) for v in second_coeffs]
    if len(vals) < 2:
        raise DomainError("need at least two functions (m >= 2)")
    lam = 1.0 - abs(sum(v / 2.0 for v in vals)) / len(vals)
    if lam <= 0.0:
        raise DomainError(f"λ = {lam} <= 0 gives a degenerate radius")
    return RadiusResult(_t1_formula(lam), Theorem.T2B, lam)


def _weighted_sum(weights: np.ndarray, r: float) -> float:
    return float(np.dot(weights, r ** np.arange(len(weights))))


def radius_bisect(f: DiskFunction, lam_target) -> RadiusResult:
    """Largest ``r`` in (0, 1] with ``sum (n-1)|b_n| r^n <= lambda``, by bisection."""
    lam = as_lambda(lam_target)
    w = np.abs(f.b) * (np.arange(len(f.phi)) - 1.0)
    w[:2] = 0.0
    if _weighted_sum(w, 1.0) <= lam:
        return RadiusResult(1.0, Theorem.BISECTION, lam)
    lo, hi = 0.0, 1.0
    for _ in range(BISECTION_MAX_ITER):
        if hi - lo <= BISECTION_TOL:
            break
        mid = 0.5 * (lo + hi)
        if _weighted_sum(w, mid) <= lam:
            lo = mid
        else:
            hi = mid
    return RadiusResult(lo, Theorem.BISECTION, lam)
