import pytest

from sombor_chains.graph_core import MolecularGraph

# Hand-written graphs used as oracles; they never go through the builders.
NAPHTHALENE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 9), (9, 0),
                     (4, 5), (5, 6), (6, 7), (7, 8), (8, 9)]
BIPHENYLENE_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
                     (6, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 6),
                     (0, 6), (1, 7)]
C6_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]


@pytest.fixture
def naphthalene():
    return MolecularGraph.from_edges(10, NAPHTHALENE_EDGES)


@pytest.fixture
def biphenylene():
    return MolecularGraph.from_edges(12, BIPHENYLENE_EDGES)


@pytest.fixture
def c6():
    return MolecularGraph.from_edges(6, C6_EDGES)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
