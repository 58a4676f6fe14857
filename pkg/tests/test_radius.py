import math

import numpy as np
import pytest

from univmean.classes import test_u_sufficient
from univmean.combine import harmonic_mean, rescaled_combination, screen_denominator
from univmean.family import FamilyParams, family_combination
from univmean.radius import (Theorem, radius_bisect, radius_from_k, radius_t1, radius_t1_starlike,
                             radius_t2a, radius_t2b, radius_t3, radius_t3_t4)
from univmean.series import DiskFunction, DomainError


def literal_k_radius(k):
    return math.sqrt((-k * k + k * math.sqrt(k * k + 4)) / 2)


def test_t1():
    assert abs(radius_t1(1).radius - 0.707107) < 1e-6
    assert radius_t1(1 / 3).radius == pytest.approx(0.5, abs=1e-15)
    assert radius_t1(1e-12).radius < 1e-5
    lams = np.linspace(0.01, 1, 50)
    rs = [radius_t1(x).radius for x in lams]
    assert all(a < b for a, b in zip(rs, rs[1:]))
    assert radius_t1(1).sufficient_only and radius_t1(1).theorem is Theorem.T1_U
    assert radius_t2a(0.5).radius == radius_t1(0.5).radius
    for bad in (0, 1.1, -1):
        with pytest.raises(DomainError):
            radius_t1(bad)


def test_t1_starlike():
    assert radius_t1_starlike(0).radius == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert radius_t1_starlike(1).radius == pytest.approx(1 / math.sqrt(3), abs=1e-15)
    assert radius_t1_starlike(1).radius == pytest.approx(radius_t1(0.5).radius, abs=1e-15)
    for s in np.linspace(0, 1.99, 40):
        for phase in (0, 1.3):
            v = s * np.exp(1j * phase)
            assert radius_t1_starlike(v).radius == pytest.approx(radius_t1(1 - s / 2).radius, abs=1e-14)
    with pytest.raises(DomainError):
        radius_t1_starlike(2)
    with pytest.raises(DomainError):
        radius_t1_starlike(2.5j)


def test_t3_t4():
    assert radius_t3_t4([1, 1], 1).radius == pytest.approx(math.sqrt((math.sqrt(5) - 1) / 2), abs=1e-15)
    assert abs(radius_t3_t4([1, 1], 1).radius - 0.78615) < 1e-5
    assert radius_t3_t4([1, 1, 1], 1).radius == radius_t3_t4([1, 1], 1).radius
    assert radius_t3_t4([1, 1, 1], 1).theorem is Theorem.T4
    r = radius_t3_t4([0.01, 0.01], 1).radius
    assert r == pytest.approx(literal_k_radius(10.0), abs=1e-12)
    assert r == pytest.approx(0.9951, abs=1e-4)
    with pytest.raises(DomainError):
        radius_t3_t4([1], 1)
    with pytest.raises(DomainError):
        radius_t3_t4([1, 0], 1)


def test_k_formula_stable_and_monotone():
    ks = np.geomspace(1e-3, 1e4, 200)
    rs = [radius_from_k(k) for k in ks]
    assert all(a < b for a, b in zip(rs, rs[1:]))
    assert rs[-1] < 1 and rs[-1] > 0.9999
    for k in ks[ks < 50]:
        assert radius_from_k(k) == pytest.approx(literal_k_radius(k), rel=1e-10)


def test_t3_equals_t4_m2():
    for l1 in np.linspace(0.1, 1, 5):
        for l2 in np.linspace(0.1, 1, 5):
            for lam in np.linspace(0.1, 1, 4):
                assert abs(radius_t3(l1, l2, lam).radius - radius_t3_t4([l1, l2], lam).radius) <= 1e-15


def test_t2b():
    assert radius_t2b([0, 0, 0]).radius == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    r = radius_t2b([2, -2])
    assert r.lambda_out == 1 and r.radius == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    with pytest.raises(DomainError):
        radius_t2b([0])
    with pytest.raises(DomainError):
        radius_t2b([2, 2])


def test_bisect_examples():
    assert radius_bisect(DiskFunction.from_coeffs([1]), 1).radius == 1.0
    assert radius_bisect(DiskFunction.from_coeffs([1, -2, 1]), 1).radius == 1.0
    f = family_combination(FamilyParams(0.5, -0.5))
    rs = [radius_bisect(f, lam).radius for lam in (0.2, 0.5, 1.0)]
    assert all(0 < r <= 1 for r in rs) and rs[0] <= rs[1] <= rs[2]


def test_bisect_is_tight():
    f = DiskFunction.from_coeffs([1, 0.3, 0.8, -0.5, 0.4])
    res = radius_bisect(f, 0.5)
    n = np.arange(len(f.b))
    s = lambda r: np.sum((n[2:] - 1) * np.abs(f.b[2:]) * r ** n[2:])
    assert s(res.radius) <= 0.5
    assert s(min(res.radius + 1e-6, 1)) > 0.5
    # Koebe has sum r^2
    assert radius_bisect(DiskFunction.from_coeffs([1, -2, 1]), 0.25).radius == pytest.approx(0.5, abs=1e-9)


def test_mixed_lambda_radius_pipeline():
    """f, g certified in U(1) and screened: mean rescaled to the T3 radius is certified in U(1)."""
    rng = np.random.default_rng(11)
    r3 = radius_t3_t4([1, 1], 1).radius
    checked = 0
    for _ in range(200):
        fs = []
        for _ in range(2):
            c = rng.normal(size=8) + 1j * rng.normal(size=8)
            c[0] = 1
            w = np.arange(8) - 1.0
            c[2:] *= rng.uniform(0, 1) / np.sum(w[2:] * np.abs(c[2:]))
            f = DiskFunction.from_coeffs(c, order=16)
            assert test_u_sufficient(f, 1).certified
            fs.append(f)
        if not screen_denominator(fs, 0.9, 128).passed:
            continue
        checked += 1
        assert test_u_sufficient(rescaled_combination(fs, r3), 1).certified
    assert checked > 50
