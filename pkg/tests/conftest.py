from pathlib import Path

import pytest

from graph_ideal.graph import Graph, load_graph

ROOT = Path(__file__).resolve().parent.parent
GRAPHS = ROOT / "graphs"
GOLDEN = Path(__file__).resolve().parent / "golden"

BRIDGED = Graph.from_edges([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
K33M = Graph.from_edges([(1, 2), (1, 4), (1, 6), (2, 3), (2, 5), (3, 4), (3, 6), (4, 5)])
BRIDGED_ORDER = [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)]


def graph_files():
    return sorted(p for p in GRAPHS.iterdir() if p.suffix in (".json", ".txt"))


@pytest.fixture(scope="session")
def golden_graphs():
    return {p.stem: load_graph(p) for p in graph_files()}


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
