import random
from fractions import Fraction

import pytest

from streamsparse import Graph

WEIGHTS = (1, 1, 1, 2, 3, Fraction(1, 2), Fraction(2, 3), Fraction(5, 4))


def random_graph(rnd: random.Random, n_min=2, n_max=7, max_edges=14, weights=WEIGHTS) -> Graph:
    """Random multigraph with parallel edges and mixed rational weights."""
    n = rnd.randint(n_min, n_max)
    g = Graph(n)
    for _ in range(rnd.randint(0, max_edges)):
        u, v = rnd.sample(range(n), 2)
        g.add_edge(u, v, rnd.choice(weights))
    return g


def complete(n, w=1):
    return Graph(n, [(u, v, w) for u in range(n) for v in range(u + 1, n)])


def barbell(b=4):
    g = Graph(2 * b)
    for off in (0, b):
        for u in range(b):
            for v in range(u + 1, b):
                g.add_edge(off + u, off + v)
    g.add_edge(b - 1, b)
    return g


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def rnd():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[number])
