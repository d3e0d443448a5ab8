import numpy as np
import pytest

from impactdisc import series_from_arrays

_acceptance_lines = []


@pytest.fixture
def record_criterion():
    """Register a one-line verdict printed in the terminal summary."""

    def record(number, status, detail=""):
        _acceptance_lines.append(f"criterion {number}: {status}" + (f"  {detail}" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def random_series(rng, n, low=0.0, high=100.0):
    x = np.cumsum(rng.uniform(0.5, 2.0, n))
    y = rng.uniform(low, high, n)
    return series_from_arrays(x, y)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
