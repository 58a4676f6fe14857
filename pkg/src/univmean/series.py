"""Truncated complex power series and the normalized disk functions built on them.

A normalized function ``f(z) = z + ...`` on the unit disk is carried through
its reciprocal form ``phi = z/f = 1 + b_1 z + b_2 z^2 + ...``. Everything
else in the package works on ``phi``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from . import kernels

DEFAULT_ORDER = 128
SERIES_TRUST_RADIUS = 0.95
CLOSED_FORM_TRUST_RADIUS = 0.9999


class DomainError(ValueError):
    """An input lies outside the domain an operation is defined on."""


def _frozen(arr) -> np.ndarray:
    a = np.array(arr, dtype=np.complex128)
    if a.ndim != 1 or a.shape[0] == 0:
        raise ValueError("coefficients must be a non-empty 1-d sequence")
    a.setflags(write=False)
    return a


class CoefficientSeries:
    """Coefficients ``c_0 .. c_N`` of a power series truncated at degree ``N``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs, order: int | None = None):
        c = np.asarray(coeffs, dtype=np.complex128).ravel()
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            if c.shape[0] < order + 1:
                c = np.concatenate([c, np.zeros(order + 1 - c.shape[0], dtype=np.complex128)])
            else:
                c = c[: order + 1]
        self._c = _frozen(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.shape[0] - 1

    def __len__(self):
        return self._c.shape[0]

    def __getitem__(self, n):
        return self._c[n]

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self._c[:6])
        more = ", ..." if self.order > 5 else ""
        return f"CoefficientSeries([{head}{more}], order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, CoefficientSeries):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self._c, other._c))

    __hash__ = None

    def truncate(self, order: int) -> "CoefficientSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return CoefficientSeries(self._c[: order + 1])

    def allclose(self, other: "CoefficientSeries", rtol=1e-12, atol=1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.allclose(self._c[:n], other._c[:n], rtol=rtol, atol=atol))

    def _binary(self, other, op):
        if isinstance(other, CoefficientSeries):
            n = min(self.order, other.order) + 1
            return CoefficientSeries(op(self._c[:n], other._c[:n]))
        return NotImplemented

    def __add__(self, other):
        if np.isscalar(other):
            c = self._c.copy()
            c[0] += other
            return CoefficientSeries(c)
        return self._binary(other, np.add)

    __radd__ = __add__

    def __sub__(self, other):
        if np.isscalar(other):
            return self + (-other)
        return self._binary(other, np.subtract)

    def __neg__(self):
        return CoefficientSeries(-self._c)

    def __mul__(self, other):
        if isinstance(other, CoefficientSeries):
            return multiply(self, other)
        if np.isscalar(other):
            return CoefficientSeries(self._c * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if np.isscalar(other):
            return CoefficientSeries(self._c / other)
        return NotImplemented


def series(coeffs: Sequence[complex], order: int = DEFAULT_ORDER) -> CoefficientSeries:
    """Zero-padded (or truncated) series of the given order."""
    return CoefficientSeries(coeffs, order=order)


def reciprocal(s: CoefficientSeries) -> CoefficientSeries:
    """Series ``t`` with ``s * t = 1 + O(z^(N+1))``."""
    if s[0] == 0:
        raise DomainError("reciprocal needs a non-zero constant term")
    return CoefficientSeries(kernels.reciprocal(s.coeffs))


def multiply(a: CoefficientSeries, b: CoefficientSeries) -> CoefficientSeries:
    """Cauchy product truncated at ``min(a.order, b.order)``."""
    n = min(a.order, b.order) + 1
    return CoefficientSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def rescale(s: CoefficientSeries, r: float) -> CoefficientSeries:
    """Coefficient ``n`` times ``r**n``; the series of ``s(r z)``."""
    if not (0.0 < r <= 1.0):
        raise DomainError(f"rescale factor must lie in (0, 1], got {r}")
    return CoefficientSeries(s.coeffs * r ** np.arange(len(s)))


def rotate(s: CoefficientSeries, theta: float) -> CoefficientSeries:
    """Series of ``s(e^{i theta} z)``."""
    return CoefficientSeries(s.coeffs * np.exp(1j * theta * np.arange(len(s))))


def derivative(s: CoefficientSeries) -> CoefficientSeries:
    if s.order == 0:
        return CoefficientSeries([0.0])
    return CoefficientSeries(s.coeffs[1:] * np.arange(1, len(s)))


def shift(s: CoefficientSeries) -> CoefficientSeries:
    """Multiply by ``z``, keeping degree ``N + 1`` terms."""
    return CoefficientSeries(np.concatenate([[0.0], s.coeffs]))


def evaluate(s: CoefficientSeries, z):
    """Horner evaluation of the truncated polynomial at ``z`` (scalar or array)."""
    za = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(za) >= 1.0):
        raise DomainError("series evaluation requires |z| < 1")
    val, _ = kernels.horner(s.coeffs, za)
    if za.ndim == 0:
        return complex(val)
    return val


def evaluate_with_derivative(s: CoefficientSeries, z):
    za = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(za) >= 1.0):
        raise DomainError("series evaluation requires |z| < 1")
    val, der = kernels.horner(s.coeffs, za)
    if za.ndim == 0:
        return complex(val), complex(der)
    return val, der


@dataclass(frozen=True)
class RationalPhi:
    """Closed form ``phi = num/den`` with ascending real or complex coefficients.

    Used where truncated series cannot be trusted, i.e. close to the unit
    circle.
    """

    num: tuple
    den: tuple

    @classmethod
    def make(cls, num, den) -> "RationalPhi":
        num = tuple(complex(c) for c in np.atleast_1d(num))
        den = tuple(complex(c) for c in np.atleast_1d(den))
        if den[0] == 0 or num[0] != den[0]:
            raise DomainError("closed form must satisfy phi(0) = 1")
        return cls(num, den)

    def __call__(self, z):
        """Return ``(phi(z), phi'(z))``."""
        n, dn = kernels.horner(np.asarray(self.num), z)
        d, dd = kernels.horner(np.asarray(self.den), z)
        return n / d, (dn * d - n * dd) / (d * d)

    def to_series(self, order: int = DEFAULT_ORDER) -> CoefficientSeries:
        return multiply(series(self.num, order), reciprocal(series(self.den, order)))

    def rescale(self, r: float) -> "RationalPhi":
        return RationalPhi.make(np.asarray(self.num) * r ** np.arange(len(self.num)),
                                np.asarray(self.den) * r ** np.arange(len(self.den)))

    def rotate(self, theta: float) -> "RationalPhi":
        return RationalPhi.make(np.asarray(self.num) * np.exp(1j * theta * np.arange(len(self.num))),
                                np.asarray(self.den) * np.exp(1j * theta * np.arange(len(self.den))))

    @staticmethod
    def mean(items: Sequence["RationalPhi"]) -> "RationalPhi":
        """Arithmetic mean over a common denominator."""
        den = np.array([1.0 + 0j])
        for it in items:
            den = P.polymul(den, np.asarray(it.den))
        num = np.array([0.0 + 0j])
        for k, it in enumerate(items):
            term = np.asarray(it.num)
            for j, other in enumerate(items):
                if j != k:
                    term = P.polymul(term, np.asarray(other.den))
            num = P.polyadd(num, term)
        num = num / len(items)
        scale = den[0]
        return RationalPhi.make(num / scale, den / scale)


@dataclass(frozen=True)
class DiskFunction:
    """Normalized ``f = z/phi`` with ``phi(0) = 1``.

    ``closed`` optionally holds an exact rational form of ``phi``; scans use
    it near the boundary where the truncated series is unreliable.
    """

    phi: CoefficientSeries
    label: str = ""
    closed: RationalPhi | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.phi[0] != 1:
            raise DomainError(f"phi(0) must equal 1, got {self.phi[0]}")

    @classmethod
    def from_coeffs(cls, coeffs, label="", order: int = DEFAULT_ORDER) -> "DiskFunction":
        return cls(series(coeffs, order), label)

    @classmethod
    def from_rational(cls, num, den, label="", order: int = DEFAULT_ORDER) -> "DiskFunction":
        rat = RationalPhi.make(num, den)
        return cls(rat.to_series(order), label, rat)

    @property
    def order(self) -> int:
        return self.phi.order

    @property
    def b(self) -> np.ndarray:
        """The phi coefficients ``b_0 = 1, b_1, b_2, ...``."""
        return self.phi.coeffs

    @property
    def trust_radius(self) -> float:
        return CLOSED_FORM_TRUST_RADIUS if self.closed is not None else SERIES_TRUST_RADIUS

    def rescaled(self, r: float) -> "DiskFunction":
        """``r^{-1} f(r z)``."""
        closed = self.closed.rescale(r) if self.closed is not None else None
        return DiskFunction(rescale(self.phi, r), self.label, closed)

    def rotated(self, theta: float) -> "DiskFunction":
        """``e^{-i theta} f(e^{i theta} z)``."""
        closed = self.closed.rotate(theta) if self.closed is not None else None
        return DiskFunction(rotate(self.phi, theta), self.label, closed)

    def phi_eval(self, z):
        """``(phi(z), phi'(z))`` from the closed form when present."""
        z = np.asarray(z, dtype=np.complex128)
        if self.closed is not None:
            if np.any(np.abs(z) > CLOSED_FORM_TRUST_RADIUS * (1 + 1e-12)):
                raise DomainError(f"closed-form evaluation limited to |z| <= {CLOSED_FORM_TRUST_RADIUS}")
            return self.closed(z)
        if np.any(np.abs(z) > SERIES_TRUST_RADIUS * (1 + 1e-12)):
            raise DomainError(f"series evaluation limited to |z| <= {SERIES_TRUST_RADIUS}")
        return kernels.horner(self.phi.coeffs, z)

    def __call__(self, z):
        ph, _ = self.phi_eval(z)
        return np.asarray(z) / ph

    def derivative(self, z):
        ph, dph = self.phi_eval(z)
        return (ph - np.asarray(z) * dph) / (ph * ph)


def identity(order: int = DEFAULT_ORDER) -> DiskFunction:
    return DiskFunction.from_rational([1.0], [1.0], "identity", order)


def u_functional_series(f: DiskFunction) -> CoefficientSeries:
    """Series of ``f'(z) (z/f(z))^2 - 1 = -z phi'(z) + phi(z) - 1``.

    Coefficient ``n`` is ``(1 - n) b_n``; the constant and linear terms vanish.
    """
    n = np.arange(len(f.phi))
    c = (1 - n) * f.phi.coeffs
    c[0] = 0.0
    return CoefficientSeries(c)
