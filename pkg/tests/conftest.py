import random

import pytest

from hamfree.enumeration import enumerate_graphs, write_graph6

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def graphs_upto7():
    return [G for n in range(1, 8) for G in enumerate_graphs(n)]


@pytest.fixture(scope="session")
def graphs_n8():
    return list(enumerate_graphs(8))


@pytest.fixture(scope="session")
def universe8_file(tmp_path_factory, graphs_n8):
    path = tmp_path_factory.mktemp("universe") / "graphs8.g6"
    write_graph6(graphs_n8, path)
    return path


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
