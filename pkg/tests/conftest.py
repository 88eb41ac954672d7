import numpy as np
import pytest

from eacap.verify import random_ball


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def ball_points(rng):
    return random_ball(rng, 1000)


def eigh_entropy(m):
    """Entropy in bits via numpy's eigensolver, independent of eacap.qmat."""
    lam = np.clip(np.linalg.eigvalsh(np.asarray(m)), 0, None)
    lam = lam[lam > 0]
    return float(-(lam * np.log2(lam)).sum())


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
