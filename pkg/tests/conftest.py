import random

import pytest
from hypothesis import settings

from cisgraphs.graph import from_edges

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def rand_graph(rng: random.Random, n: int, p: float = 0.5):
    return from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)
