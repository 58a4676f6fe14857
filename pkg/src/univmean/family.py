"""The close-to-convex family ``f_a(z) = z(1 - a z)/(1 - z^2)`` and the
harmonic means ``F_{a,b}`` of two of its members.

Closed forms here are exact; the series modules are checked against them.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .series import DEFAULT_ORDER, CoefficientSeries, DiskFunction, DomainError, RationalPhi
from .combine import harmonic_mean

BRANCH_SWITCH = 1.0 / 9.0  # on alpha**2: the radicand (9a^2 - 1)(1 - a^2) changes sign there


def _check_alpha(a: float, name="alpha") -> float:
    a = float(a)
    if not (-1.0 <= a <= 1.0) or a == 0.0:
        raise DomainError(f"{name} must lie in [-1, 1] without 0, got {a}")
    return a


@dataclass(frozen=True)
class FamilyParams:
    alpha: float
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _check_alpha(self.alpha, "alpha"))
        object.__setattr__(self, "beta", _check_alpha(self.beta, "beta"))


@dataclass(frozen=True)
class FamilyDiagnostics:
    area_sum: float
    r_u: float
    branch: str
    constants: tuple
    min_abs_root: float

    def to_dict(self) -> dict:
        return {
            "area_sum": self.area_sum,
            "r_u": self.r_u,
            "branch": self.branch,
            "constants": [[c.real, c.imag] for c in map(complex, self.constants)],
            "min_abs_root": self.min_abs_root,
        }


def member_rational(alpha: float) -> RationalPhi:
    a = _check_alpha(alpha)
    if a == 1.0:
        return RationalPhi.make([1.0, 1.0], [1.0])
    if a == -1.0:
        return RationalPhi.make([1.0, -1.0], [1.0])
    return RationalPhi.make([1.0, 0.0, -1.0], [1.0, -a])


def family_member(alpha: float, order: int = DEFAULT_ORDER) -> DiskFunction:
    """``phi = (1 - z^2)/(1 - a z)``, i.e. ``f_a``."""
    rat = member_rational(alpha)
    return DiskFunction(rat.to_series(order), f"f[{float(alpha):g}]", rat)


def combination_coeffs(p: FamilyParams, order: int = DEFAULT_ORDER) -> np.ndarray:
    """``b_1 = (a+b)/2``, ``b_n = -(a^(n-2)(1-a^2) + b^(n-2)(1-b^2))/2``."""
    a, b = p.alpha, p.beta
    n = np.arange(2, order + 1)
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = 1.0
    if order >= 1:
        c[1] = (a + b) / 2.0
    c[2:] = -0.5 * (a ** (n - 2) * (1 - a * a) + b ** (n - 2) * (1 - b * b))
    return c


def combination_rational(p: FamilyParams) -> RationalPhi:
    if p.alpha == p.beta:
        return member_rational(p.alpha)
    return RationalPhi.mean([member_rational(p.alpha), member_rational(p.beta)])


def family_combination(p: FamilyParams, order: int = DEFAULT_ORDER) -> DiskFunction:
    """``F_{a,b}`` straight from the closed-form coefficients."""
    return DiskFunction(CoefficientSeries(combination_coeffs(p, order)),
                        f"F[{p.alpha:g},{p.beta:g}]", combination_rational(p))


def family_combination_via_series(p: FamilyParams, order: int = DEFAULT_ORDER) -> DiskFunction:
    return harmonic_mean([family_member(p.alpha, order), family_member(p.beta, order)])


def family_tail_bound(p: FamilyParams, order: int) -> float:
    """Bound on ``sum_{n > order} (n-1)|b_n|`` for ``F_{a,b}``."""
    total = 0.0
    for x in (p.alpha, p.beta):
        t = abs(x)
        if t == 1.0:
            continue
        # sum_{j >= N} j t^(j-1) = d/dt [t^N / (1 - t)]
        tail = (order * t ** (order - 1) * (1 - t) + t ** order) / (1 - t) ** 2
        total += 0.5 * (1 - x * x) * tail
    return total


def family_area_sum(p: FamilyParams) -> float:
    """``S = sum (n-1)|b_n|^2`` in closed form.

    For ``|a|, |b| < 1`` this is ``(2 + 2(1-a^2)(1-b^2)/(1-ab)^2)/4 <= 1``,
    with equality iff ``a = b``. A parameter equal to +-1 contributes no
    coefficients beyond ``b_1``, so its own term drops out (the formula
    would give its 0/0 limit instead).
    """
    a, b = p.alpha, p.beta
    own = (abs(a) < 1.0) + (abs(b) < 1.0)
    if abs(a) == 1.0 or abs(b) == 1.0:
        cross = 0.0
    else:
        cross = 2.0 * (1 - a * a) * (1 - b * b) / (1 - a * b) ** 2
    return 0.25 * (own + cross)


def family_u_radius(alpha: float) -> float:
    """Sharp U-radius of ``F_a = F_{a,-a}``."""
    a = _check_alpha(alpha)
    a2 = a * a
    return math.sqrt(2.0 / (1.0 + a2 + math.sqrt((1 - a2) * (7 * a2 + 1))))


def family_u_functional_closed(alpha: float, z):
    """``f'(z)(z/f(z))^2 - 1`` for ``F_a`` = ``(1-a^2) z^2 (1+a^2 z^2)/(1-a^2 z^2)^2``."""
    a = _check_alpha(alpha)
    z = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("|z| < 1 required")
    a2 = a * a
    w = z * z
    out = (1 - a2) * w * (1 + a2 * w) / (1 - a2 * w) ** 2
    return complex(out) if out.ndim == 0 else out


def family_u_functional_general(p: FamilyParams, z):
    """Same functional for ``F_{a,b}``."""
    a, b = p.alpha, p.beta
    z = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("|z| < 1 required")
    num = (1 - a * b) * (1 - a * z) * (1 - b * z) - (1 - z * z) * (a - b) ** 2 / 2
    out = z * z * num / ((1 - a * z) ** 2 * (1 - b * z) ** 2)
    return complex(out) if out.ndim == 0 else out


def family_m_polynomial(p: FamilyParams) -> np.ndarray:
    """Ascending coefficients of ``M`` with ``F' = M/((1-z^2)^2 (1-sz)^2)``, ``s = (a+b)/2``."""
    a, b = p.alpha, p.beta
    s = a + b
    return np.array([1.0, -2 * s, 1 + 3 * a * b + s * s / 2, -s * (1 + a * b), (a * a + b * b) / 2])


def m_branch_constants(alpha: float, branch: str) -> tuple:
    """Constants of ``M(z) = a^2 (z^2 + c_1)(z^2 + c_2)`` for ``F_a``.

    ``branch="A"`` gives ``(A, conj A)``, ``branch="B"`` gives
    ``(B_plus, B_minus)``. Both use the complex square root, so either can
    be evaluated on both sides of the switch (they coincide there).
    """
    a = _check_alpha(alpha)
    a2 = a * a
    if branch == "A":
        big_a = (1 - 3 * a2 + 1j * cmath.sqrt((9 * a2 - 1) * (1 - a2))) / (2 * a2)
        return big_a, big_a.conjugate()
    if branch == "B":
        root = cmath.sqrt((1 - 9 * a2) * (1 - a2))
        return (1 - 3 * a2 + root) / (2 * a2), (1 - 3 * a2 - root) / (2 * a2)
    raise ValueError(f"unknown branch {branch!r}")


def min_abs_root(constants) -> float:
    """Smallest ``|z|`` over the roots of ``z^2 = -c``."""
    return min(math.sqrt(abs(c)) for c in constants)


def family_m_roots(p: FamilyParams | float) -> FamilyDiagnostics:
    """Factorization of ``M`` for ``F_a`` and the smallest root modulus (>= 1)."""
    if not isinstance(p, FamilyParams):
        p = FamilyParams(p, -float(p))
    if p.beta != -p.alpha:
        raise DomainError("family_m_roots needs beta = -alpha")
    a = p.alpha
    branch = "A" if a * a > BRANCH_SWITCH else "B"
    consts = m_branch_constants(a, branch)
    if branch == "B":
        consts = tuple(c.real for c in consts)
    return FamilyDiagnostics(family_area_sum(p), family_u_radius(a), branch, consts,
                             min_abs_root(consts))


def family_starlike_closed(alpha: float, z):
    """``z F_a'(z)/F_a(z) = (1 + (1-3a^2) z^2 + a^2 z^4)/((1 - a^2 z^2)(1 - z^2))``."""
    a = _check_alpha(alpha)
    a2 = a * a
    z = np.asarray(z, dtype=np.complex128)
    w = z * z
    out = (1 + (1 - 3 * a2) * w + a2 * w * w) / ((1 - a2 * w) * (1 - w))
    return complex(out) if out.ndim == 0 else out


def family_boundary_starlike(alpha: float, theta: float) -> float:
    """``A(theta) = 4a^2 (a^2 - cos 2theta)(1 - cos 2theta)``.

    Same sign as ``Re(z F_a'/F_a)`` at ``z = e^{i theta}``; negative for
    ``0 < theta < arccos(a^2)/2``.
    """
    a = _check_alpha(alpha)
    if abs(a) >= 1.0:
        raise DomainError("|alpha| < 1 required")
    if not (0.0 < theta < math.pi):
        raise DomainError("theta must lie in (0, pi)")
    c = math.cos(2 * theta)
    return 4 * a * a * (a * a - c) * (1 - c)


def sign_boundary(alpha: float) -> float:
    return 0.5 * math.acos(alpha * alpha)


def family_diagnostics(p: FamilyParams) -> FamilyDiagnostics:
    """Area sum for ``(a, b)``, plus U-radius and M-roots of ``F_a``."""
    roots = family_m_roots(p.alpha)
    return FamilyDiagnostics(family_area_sum(p), roots.r_u, roots.branch, roots.constants,
                             roots.min_abs_root)
