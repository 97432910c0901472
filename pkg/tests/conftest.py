from functools import lru_cache

import pytest

from powerlimits.oracle import census

_CRITERIA: list[str] = []


@lru_cache(maxsize=None)
def _cached_census(kind, n, q, M):
    return census(kind, n, q, M)


@pytest.fixture(scope="session")
def cached_census():
    """Census results are deterministic, so share them across tests."""
    return _cached_census


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(number: int, ok: bool, text: str) -> None:
        _CRITERIA.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
