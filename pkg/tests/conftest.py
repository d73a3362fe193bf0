import json
import random
from pathlib import Path

import pytest

from pentagon.graph import Graph
from pentagon.io import read_graph6_file

DATA = Path(__file__).parent / "data"


def load_corpus(name):
    return [g for _, g in read_graph6_file(DATA / name)]


def random_graph(rng, n, p):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.fixture(scope="session")
def golden():
    return json.loads((DATA / "golden.json").read_text())


@pytest.fixture(scope="session")
def all_le7():
    return load_corpus("all_le7.g6")


@pytest.fixture(scope="session")
def all_8():
    return load_corpus("all_8.g6")


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
