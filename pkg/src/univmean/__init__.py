"""Harmonic means of normalized univalent functions on the unit disk."""
from .classes import LambdaParam, MembershipVerdict, Status
from .combine import CombineInput, harmonic_mean, rescaled_combination, screen_denominator
from .kernels import BACKEND
from .radius import RadiusResult, Theorem
from .series import CoefficientSeries, DiskFunction, DomainError, RationalPhi

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CoefficientSeries", "CombineInput", "DiskFunction", "DomainError",
    "LambdaParam", "MembershipVerdict", "RadiusResult", "RationalPhi", "Status", "Theorem",
    "harmonic_mean", "rescaled_combination", "screen_denominator",
]
