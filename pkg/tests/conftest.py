import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cagekit.generators import petersen
from cagekit.graph_core import Graph, build_graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def petersen_graph() -> Graph:
    return petersen()


def make_separating_fixture() -> Graph:
    """Cubic girth-3 graph whose central triangle separates it.

    A triangle, each corner tied to its own gadget: a 4-clique with one
    edge subdivided, the subdivision vertex hooked to the corner. Removing
    the central triangle leaves the three gadgets as separate components.
    """
    edges = [(0, 1), (1, 2), (0, 2)]
    for i in range(3):
        a, b, c, d, s = (3 + 5 * i, 4 + 5 * i, 5 + 5 * i, 6 + 5 * i, 7 + 5 * i)
        edges += [(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (s, b), (s, i)]
    return build_graph(18, edges)


@pytest.fixture
def separating_fixture() -> Graph:
    return make_separating_fixture()
