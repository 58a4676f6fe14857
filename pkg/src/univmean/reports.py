"""Result containers shared by the scan-style operations."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class Quantity(str, Enum):
    U_FUNCTIONAL_MAX = "UFunctionalMax"
    MIN_RE_STARLIKE = "MinReStarlike"
    MIN_ABS_DERIVATIVE = "MinAbsDerivative"
    INJECTIVITY_VIOLATIONS = "InjectivityViolations"
    MIN_RE_HALFPLANE = "MinReHalfplane"


@dataclass
class ScanReport:
    """Per-radius extremal values of a sampled quantity.

    ``values[i]`` belongs to ``radius_grid[i]`` and is attained at
    ``witnesses[i]``. ``violations`` holds point pairs for injectivity scans,
    ``flagged`` holds sample points where ``phi`` numerically vanished.
    """

    quantity: Quantity
    radius_grid: list[float]
    values: list[float]
    witnesses: list[complex]
    violations: list[tuple[complex, complex]] = field(default_factory=list)
    flagged: list[complex] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.values) != len(self.radius_grid):
            raise ValueError("values and radius_grid must have equal length")

    @property
    def extreme(self) -> float:
        """Overall max for maximization scans, overall min otherwise."""
        if self.quantity in (Quantity.U_FUNCTIONAL_MAX, Quantity.INJECTIVITY_VIOLATIONS):
            return max(self.values)
        return min(self.values)

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity.value,
            "radius_grid": [float(r) for r in self.radius_grid],
            "values": [float(v) for v in self.values],
            "witnesses": [[float(np.real(w)), float(np.imag(w))] for w in self.witnesses],
            "violations": [[[float(a.real), float(a.imag)], [float(b.real), float(b.imag)]]
                           for a, b in self.violations],
            "flagged": [[float(w.real), float(w.imag)] for w in self.flagged],
            "meta": self.meta,
        }
