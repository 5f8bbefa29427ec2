import functools

import pytest

from spiderfree.enumeration import all_graphs_upto, connected_graphs_upto


@functools.lru_cache(maxsize=None)
def subcubic_connected(max_n: int):
    return tuple(connected_graphs_upto(max_n, max_degree=3))


@functools.lru_cache(maxsize=None)
def connected_upto(max_n: int):
    return tuple(connected_graphs_upto(max_n))


@functools.lru_cache(maxsize=None)
def graphs_upto(max_n: int):
    return tuple(all_graphs_upto(max_n))


@pytest.fixture(scope="session")
def subcubic10():
    return subcubic_connected(10)


# one PASS/FAIL line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
