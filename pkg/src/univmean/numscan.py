"""Numerical sweeps over circles in the disk, plus the conjecture harness.

Everything here is evidence, not proof: values are sampled on finite grids.
Series-backed functions are only scanned up to ``|z| = 0.95``; functions
carrying a rational closed form may go to ``0.9999``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .combine import harmonic_mean, screen_denominator
from .family import family_member
from .reports import Quantity, ScanReport
from .series import (DEFAULT_ORDER, SERIES_TRUST_RADIUS, DiskFunction, DomainError,
                     u_functional_series)

DEFAULT_ANGULAR = 2048
PHI_ZERO_TOL = 1e-14
COLLINEAR_TOL = 1e-13


def _angles(samples: int) -> np.ndarray:
    if samples < 1:
        raise DomainError("angular samples must be positive")
    return np.linspace(0.0, 2 * np.pi, samples, endpoint=False)


def _check_radii(f: DiskFunction, radii: Sequence[float]) -> np.ndarray:
    r = np.asarray(radii, dtype=float)
    if r.ndim != 1 or r.size == 0:
        raise DomainError("need a non-empty list of radii")
    limit = f.trust_radius
    if np.any(r <= 0) or np.any(r > limit):
        kind = "closed-form" if f.closed is not None else "series-backed"
        raise DomainError(f"radii must lie in (0, {limit}] for {kind} input {f.label!r}")
    return r


def _grid(radii, samples):
    return radii[:, None] * np.exp(1j * _angles(samples))[None, :]


def _reduce(quantity, radii, grid, vals, use_max, flagged=(), meta=None) -> ScanReport:
    idx = np.argmax(vals, axis=1) if use_max else np.argmin(vals, axis=1)
    rows = np.arange(len(radii))
    return ScanReport(quantity, [float(r) for r in radii],
                      [float(v) for v in vals[rows, idx]],
                      [complex(w) for w in grid[rows, idx]],
                      flagged=list(flagged), meta=meta or {})


def u_functional_values(f: DiskFunction, z, backend: str = "auto"):
    """``f'(z)(z/f)^2 - 1`` sampled at ``z``."""
    z = np.asarray(z, dtype=np.complex128)
    if backend == "series" or (backend == "auto" and f.closed is None):
        if np.any(np.abs(z) > SERIES_TRUST_RADIUS * (1 + 1e-12)):
            raise DomainError(f"series evaluation limited to |z| <= {SERIES_TRUST_RADIUS}")
        val, _ = kernels.horner(u_functional_series(f).coeffs, z)
        return val
    ph, dph = f.phi_eval(z)
    return ph - z * dph - 1.0


def scan_u_functional(f: DiskFunction, radii, angular_samples: int = DEFAULT_ANGULAR,
                      backend: str = "auto") -> ScanReport:
    """Per radius, ``max |f'(z)(z/f(z))^2 - 1|`` over the circle."""
    r = _check_radii(f, radii)
    grid = _grid(r, angular_samples)
    vals = np.abs(u_functional_values(f, grid, backend))
    return _reduce(Quantity.U_FUNCTIONAL_MAX, r, grid, vals, True,
                   meta={"backend": _backend_name(f, backend)})


def _backend_name(f, backend):
    if backend != "auto":
        return backend
    return "closed" if f.closed is not None else "series"


def _phi_on_grid(f, grid):
    ph, dph = f.phi_eval(grid)
    bad = np.abs(ph) < PHI_ZERO_TOL
    flagged = [complex(w) for w in grid[bad]]
    ph = np.where(bad, np.nan, ph)
    return ph, dph, flagged


def _quiet(fn):
    with np.errstate(invalid="ignore", divide="ignore"):
        return fn()


def scan_starlike(f: DiskFunction, radii, angular_samples: int = DEFAULT_ANGULAR) -> ScanReport:
    """Per radius, ``min Re(z f'(z)/f(z))`` with ``z f'/f = 1 - z phi'/phi``."""
    r = _check_radii(f, radii)
    grid = _grid(r, angular_samples)
    ph, dph, flagged = _phi_on_grid(f, grid)
    vals = _quiet(lambda: np.real(1.0 - grid * dph / ph))
    vals = np.where(np.isnan(vals), np.inf, vals)
    return _reduce(Quantity.MIN_RE_STARLIKE, r, grid, vals, False, flagged,
                   {"backend": _backend_name(f, "auto")})


def scan_local_univalence(f: DiskFunction, radii, angular_samples: int = DEFAULT_ANGULAR) -> ScanReport:
    """Per radius, ``min |f'(z)|`` with ``f' = (phi - z phi')/phi^2``."""
    r = _check_radii(f, radii)
    grid = _grid(r, angular_samples)
    ph, dph, flagged = _phi_on_grid(f, grid)
    vals = _quiet(lambda: np.abs((ph - grid * dph) / (ph * ph)))
    vals = np.where(np.isnan(vals), np.inf, vals)
    return _reduce(Quantity.MIN_ABS_DERIVATIVE, r, grid, vals, False, flagged,
                   {"backend": _backend_name(f, "auto")})


def scan_injectivity(f: DiskFunction, radius: float, samples: int = DEFAULT_ANGULAR,
                     tol: float = COLLINEAR_TOL) -> ScanReport:
    """Self-intersections of the image of ``|z| = radius``.

    ``values[0]`` is the number of properly crossing edge pairs of the sampled
    image polygon; each violation lists the two circle points starting the
    crossing edges. ``meta["winding"]`` is the winding of the image about
    ``f(0) = 0``: zero crossings with winding 1 is evidence of univalence on
    the closed sub-disk.
    """
    r = _check_radii(f, [radius])
    if samples < 4:
        raise DomainError("need at least 4 samples")
    z = r[0] * np.exp(1j * _angles(samples))
    w = np.asarray(f(z), dtype=np.complex128)
    if not np.all(np.isfinite(w)):
        raise DomainError(f"{f.label!r} has a pole on |z| = {radius}")
    steps = np.abs(np.roll(w, -1) - w)
    degenerate = [complex(z[i]) for i in np.nonzero(steps == 0.0)[0]]
    pairs = kernels.segment_crossings(w.real, w.imag, tol)
    violations = [(complex(z[i]), complex(z[j])) for i, j in pairs]
    winding = kernels.winding_number(w, 0j)
    return ScanReport(
        Quantity.INJECTIVITY_VIOLATIONS, [float(r[0])], [float(len(violations))],
        [complex(z[pairs[0][0]]) if len(violations) else complex(z[0])],
        violations=violations, flagged=degenerate,
        meta={"winding": int(winding), "samples": samples, "backend": kernels.BACKEND},
    )


class ClassTag(str, Enum):
    S = "S"
    SSTAR = "Sstar"
    K = "K"
    C = "C"
    U = "U"


# inclusions K < S* < C < S and U < S
_C_TAGS = {ClassTag.K, ClassTag.SSTAR, ClassTag.C}


@dataclass(frozen=True)
class CatalogEntry:
    """A named test function. ``declared_class`` is documentation only."""

    name: str
    build: Callable[[int], DiskFunction]
    declared_class: ClassTag

    def make(self, order: int = DEFAULT_ORDER) -> DiskFunction:
        f = self.build(order)
        return f if f.label == self.name else DiskFunction(f.phi, self.name, f.closed)

    @property
    def in_c(self) -> bool:
        return self.declared_class in _C_TAGS


def _rational(num, den=(1.0,)):
    return lambda order: DiskFunction.from_rational(num, den, order=order)


def builtin_catalog() -> list[CatalogEntry]:
    cat = [
        CatalogEntry("identity", _rational([1.0]), ClassTag.K),
        CatalogEntry("koebe", _rational([1.0, -2.0, 1.0]), ClassTag.SSTAR),
        CatalogEntry("koebe-rot", _rational([1.0, 2.0, 1.0]), ClassTag.SSTAR),
        CatalogEntry("koebe-i", _rational([1.0, -2j, -1.0]), ClassTag.SSTAR),
        CatalogEntry("koebe-negi", _rational([1.0, 2j, -1.0]), ClassTag.SSTAR),
        CatalogEntry("halfplane", _rational([1.0, -1.0]), ClassTag.K),
        CatalogEntry("halfplane-rot", _rational([1.0, 1.0]), ClassTag.K),
    ]
    for a in (-0.75, -0.5, -0.25, 0.25, 0.5, 0.75):
        cat.append(CatalogEntry(f"falpha[{a:g}]", lambda order, a=a: family_member(a, order), ClassTag.C))
    # non-negative coefficients from index 2 with sum (n-1) b_n <= 1
    cat += [
        CatalogEntry("t5-square", _rational([1.0, 0.0, 1.0]), ClassTag.U),
        CatalogEntry("t5-plus", _rational([1.0, 0.4, 0.3, 0.2]), ClassTag.U),
        CatalogEntry("t5-minus", _rational([1.0, -0.4, 0.3, 0.2]), ClassTag.U),
    ]
    return cat


def catalog_lookup(name: str, catalog: Iterable[CatalogEntry] | None = None) -> CatalogEntry:
    for e in catalog if catalog is not None else builtin_catalog():
        if e.name == name:
            return e
    raise KeyError(f"no catalog entry named {name!r}")


def select_pairs(catalog: Sequence[CatalogEntry], policy: str) -> list[tuple[CatalogEntry, CatalogEntry]]:
    """Unordered pairs (including ``(f, f)``) chosen by ``policy``.

    ``all``: every pair; ``all-c``: both entries declared close-to-convex or
    stronger; ``all-s``: same as ``all``; ``family``: ``falpha`` entries
    only; otherwise a comma-separated list of ``name:name`` pairs.
    """
    if policy in ("all", "all-s"):
        keep = list(catalog)
    elif policy == "all-c":
        keep = [e for e in catalog if e.in_c]
    elif policy == "family":
        keep = [e for e in catalog if e.name.startswith("falpha")]
    else:
        out = []
        for item in policy.split(","):
            a, _, b = item.strip().partition(":")
            if not b:
                raise DomainError(f"pair {item!r} is not of the form name:name")
            out.append((catalog_lookup(a, catalog), catalog_lookup(b, catalog)))
        return out
    return list(itertools.combinations_with_replacement(keep, 2))


@dataclass
class PairEvidence:
    pair_id: str
    first: str
    second: str
    both_c: bool
    screen: dict
    hypothesis_violated: bool
    rows: list
    reports: list

    def to_dict(self) -> dict:
        return {
            "pair_id": self.pair_id,
            "first": self.first,
            "second": self.second,
            "both_c": self.both_c,
            "screen": self.screen,
            "hypothesis_violated": self.hypothesis_violated,
            "rows": self.rows,
        }


def conjecture_harness(catalog: Sequence[CatalogEntry], pairs: str = "all",
                       radii: Sequence[float] = (0.9, 0.99),
                       angular_samples: int = DEFAULT_ANGULAR,
                       injectivity_samples: int = DEFAULT_ANGULAR,
                       screen_density: int = DEFAULT_ANGULAR,
                       order: int = DEFAULT_ORDER) -> list[PairEvidence]:
    """Screen, combine and scan every selected pair on the radius schedule.

    Pairs whose mean ``(1/2)(phi_f + phi_g)`` winds around 0 on the screen
    circle are marked ``hypothesis_violated`` and carry no scan rows.
    """
    if not catalog:
        raise DomainError("catalog is empty")
    out = []
    for first, second in select_pairs(catalog, pairs):
        f, g = first.make(order), second.make(order)
        pair_id = f"{first.name}+{second.name}"
        big_f = harmonic_mean([f, g], label=pair_id)
        screen_r = min(max(radii), big_f.trust_radius)
        screen = screen_denominator([f, g], screen_r, screen_density)
        ev = PairEvidence(pair_id, first.name, second.name, first.in_c and second.in_c,
                          screen.to_dict(), screen.winding_number > 0, [], [])
        if not ev.hypothesis_violated:
            usable = [r for r in radii if r <= big_f.trust_radius]
            local = scan_local_univalence(big_f, usable, angular_samples)
            star = scan_starlike(big_f, usable, angular_samples)
            ev.reports += [local, star]
            for i, r in enumerate(usable):
                inj = scan_injectivity(big_f, r, injectivity_samples)
                ev.reports.append(inj)
                ev.rows.append({
                    "pair_id": pair_id,
                    "radius": float(r),
                    "min_abs_derivative": local.values[i],
                    "min_re_starlike": star.values[i],
                    "violations": int(inj.values[0]),
                    "winding": inj.meta["winding"],
                    "screen_min_modulus": screen.min_modulus,
                    "screen_winding": screen.winding_number,
                })
        out.append(ev)
    return out


EVIDENCE_COLUMNS = ["pair_id", "radius", "min_abs_derivative", "min_re_starlike",
                    "violations", "winding", "screen_min_modulus", "screen_winding"]
