import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from nutgraphs.catalog import load_fixture  # noqa: E402
from nutgraphs.graphcore import adjacency_matrix  # noqa: E402


def appendix_graph_rows(order):
    return adjacency_matrix(load_fixture(order).graph).to_rows()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
