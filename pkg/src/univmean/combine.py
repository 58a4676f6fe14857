"""Harmonic means of normalized functions: ``z/F = (1/m) sum z/f_k``."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .classes import as_lambda
from .series import CoefficientSeries, DiskFunction, DomainError, RationalPhi

ZERO_TOL = 1e-14


@dataclass(frozen=True)
class CombineInput:
    functions: tuple
    lambdas: tuple = field(default=None)

    def __post_init__(self):
        fs = tuple(self.functions)
        if len(fs) < 2:
            raise DomainError("a combination needs at least two functions")
        object.__setattr__(self, "functions", fs)
        lams = self.lambdas
        if lams is None:
            lams = (None,) * len(fs)
        lams = tuple(None if lam is None else as_lambda(lam) for lam in lams)
        if len(lams) != len(fs):
            raise DomainError("one lambda (or None) per function")
        object.__setattr__(self, "lambdas", lams)

    def __len__(self):
        return len(self.functions)

    def __iter__(self):
        return iter(self.functions)


@dataclass(frozen=True)
class ZeroScreenReport:
    min_modulus: float
    grid_radius: float
    winding_number: int
    witness: complex = 0j

    @property
    def passed(self) -> bool:
        return self.winding_number == 0 and self.min_modulus > ZERO_TOL

    def to_dict(self) -> dict:
        return {
            "min_modulus": self.min_modulus,
            "grid_radius": self.grid_radius,
            "winding_number": self.winding_number,
            "passed": self.passed,
        }


def _functions(inp) -> tuple:
    fs = tuple(inp.functions) if isinstance(inp, CombineInput) else tuple(inp)
    if not fs:
        raise DomainError("empty input")
    return fs


def harmonic_mean(inp: CombineInput | Sequence[DiskFunction], label: str | None = None) -> DiskFunction:
    """``F`` with ``phi_F`` the termwise arithmetic mean of the ``phi_k``.

    Orders are truncated to the smallest one present. A closed form is kept
    when every input has one.
    """
    fs = _functions(inp)
    n = min(f.order for f in fs) + 1
    coeffs = np.mean([f.phi.coeffs[:n] for f in fs], axis=0)
    coeffs[0] = 1.0
    closed = None
    if all(f.closed is not None for f in fs):
        if all(f.closed == fs[0].closed for f in fs):
            closed = fs[0].closed
        else:
            closed = RationalPhi.mean([f.closed for f in fs])
    if label is None:
        label = "H(" + ",".join(f.label for f in fs) + ")"
    return DiskFunction(CoefficientSeries(coeffs), label, closed)


def screen_denominator(inp: CombineInput | Sequence[DiskFunction], grid_radius: float,
                       density: int) -> ZeroScreenReport:
    """Numerical screen for zeros of ``(1/m) sum phi_k`` in ``|z| <= grid_radius``.

    ``density`` angular samples per ring; the zero count inside the circle
    comes from the winding of the mean along ``|z| = grid_radius``.
    """
    if not (0.0 < grid_radius < 1.0):
        raise DomainError("grid radius must lie in (0, 1)")
    if density < 8:
        raise DomainError("density must be at least 8")
    mean = harmonic_mean(_functions(inp))
    rings = max(2, density // 32)
    radii = np.linspace(0.0, grid_radius, rings + 1)
    angles = np.linspace(0.0, 2 * np.pi, density, endpoint=False)
    grid = radii[:, None] * np.exp(1j * angles)[None, :]
    ph, _ = mean.phi_eval(grid)
    mod = np.abs(ph)
    k = np.unravel_index(np.argmin(mod), mod.shape)
    circle = ph[-1]
    # a sample sitting on a zero breaks the phase accumulation; nudge outward
    if np.min(np.abs(circle)) <= ZERO_TOL:
        circle, _ = mean.phi_eval(grid[-1] * (1 + 1e-9))
    winding = kernels.winding_number(circle)
    return ZeroScreenReport(float(mod[k]), float(grid_radius), int(winding), complex(grid[k]))


def rescaled_combination(inp: CombineInput | Sequence[DiskFunction], r: float) -> DiskFunction:
    """``G(z) = r^{-1} F(r z)`` for ``F`` the harmonic mean."""
    return harmonic_mean(inp).rescaled(r)
