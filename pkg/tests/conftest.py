from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from boxcol.graph import Graph

settings.register_profile(
    "default",
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def labeled_graphs(n: int):
    """Every labeled graph on vertex set 0..n-1."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_mask(n, mask)


def graphs_up_to(n_max: int):
    for n in range(1, n_max + 1):
        yield from labeled_graphs(n)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_order(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n, max_n))
    seq = draw(st.permutations(range(g.n)))
    return g, seq


@pytest.fixture
def p3():
    # a=0, b=1, c=2 with path a-b-c
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def c4():
    # cycle 1-2-3-4-1 relabelled to 0-1-2-3-0
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
