import numpy as np
import pytest

from arbpack.digraph import build, complete
from arbpack.random_model import sample

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def c3():
    return build(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def star4():
    return build(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def k4():
    return complete(4)


def random_digraphs(count, n_range=(2, 9), seed=0):
    """Deterministic mixed suite of small D(n, p) samples."""
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.choice(np.round(np.arange(0.1, 1.0, 0.1), 1)))
        yield sample(n, p, int(rng.integers(2**63)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
