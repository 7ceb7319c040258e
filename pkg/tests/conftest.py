import numpy as np
import pytest


def brute_force_cycles(x, N):
    """Cycle tracing written independently of numtheory.orbit_decomposition."""
    remaining = set(range(N))
    cycles = []
    while remaining:
        start = min(remaining)
        cyc = [start]
        nxt = start * x % N
        while nxt != start:
            cyc.append(nxt)
            nxt = nxt * x % N
        remaining -= set(cyc)
        cycles.append(cyc)
    return cycles


@pytest.fixture
def rng():
    return np.random.default_rng(20061)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
