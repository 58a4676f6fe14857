import numpy as np
import pytest

from univmean.series import DiskFunction, series


def random_phi(rng, order=128, terms=10, radius=0.8, budget=0.5):
    """phi with |phi - 1| <= budget on |z| <= radius, so phi has no zeros there."""
    n = np.arange(1, terms + 1)
    u = rng.uniform(-1, 1, terms) + 1j * rng.uniform(-1, 1, terms)
    u /= np.maximum(np.abs(u), 1.0)
    b = budget * u * (6 / np.pi**2) / n**2 / radius**n
    return DiskFunction(series(np.concatenate([[1.0], b]), order), "random")


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, text): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    key = (mark.args[0], mark.args[1])
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        ok = rep.passed and _ACCEPTANCE.get(key, True)
        _ACCEPTANCE[key] = ok


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (n, text), ok in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {text}")
