import math

import pytest
from hypothesis import given, settings

from boxcol.errors import BudgetExceeded, OracleBudget
from boxcol.graph import Graph, complete, complete_minus_pm, cycle, edgeless, gnp, path
from boxcol.oracle import (
    boxicity_cover,
    circular_dimension_cover,
    enumerate_circular_arc_supergraphs,
    enumerate_interval_supergraphs,
    exact_boxicity,
    exact_chromatic_number,
    exact_circular_dimension,
    min_cover,
)
from boxcol.recognition import graph_classes, is_circular_arc_graph, is_interval_graph

from .conftest import graphs


def intersect(n, factors):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if all(f.has_edge(u, v) for f in factors)]
    return Graph.from_edges(n, edges)


class TestEnumerate:
    def test_three_vertices(self):
        assert len(enumerate_interval_supergraphs(edgeless(3))) == 8

    def test_four_vertices(self):
        sups = enumerate_interval_supergraphs(edgeless(4))
        assert len(sups) == 61
        assert all(not (s.edge_count == 4 and all(s.degree(v) == 2 for v in range(4))) for s in sups)

    def test_complete(self):
        assert enumerate_interval_supergraphs(complete(4)) == [complete(4)]

    @given(graphs(max_n=5))
    def test_all_are_interval_supergraphs(self, g):
        for s in enumerate_interval_supergraphs(g):
            assert is_interval_graph(s)
            assert all(s.has_edge(u, v) for u, v in g.edges())

    def test_circular_superset_of_interval(self):
        g = path(4)
        a = {s.mask for s in enumerate_interval_supergraphs(g)}
        b = {s.mask for s in enumerate_circular_arc_supergraphs(g)}
        assert a < b or a == b
        assert all(is_circular_arc_graph(Graph.from_mask(4, m)) for m in b)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_interval_supergraphs(edgeless(8))


class TestMinCover:
    def test_simple(self):
        assert sorted(min_cover(0b111, [0b001, 0b011, 0b110, 0b100])) in ([0b001, 0b110], [0b011, 0b100], [0b011, 0b110])

    def test_empty_universe(self):
        assert min_cover(0, [0b1]) == []

    def test_uncoverable(self):
        with pytest.raises(ValueError):
            min_cover(0b11, [0b01])


class TestBoxicity:
    def test_examples(self):
        assert exact_boxicity(cycle(4)) == 2
        assert exact_boxicity(complete(5)) == 0
        assert exact_boxicity(complete_minus_pm(2)) == 2
        assert exact_boxicity(complete_minus_pm(3)) == 3

    def test_cover_is_witness(self):
        g = complete_minus_pm(3)
        cover = boxicity_cover(g)
        assert all(is_interval_graph(f) for f in cover)
        assert intersect(6, cover) == g

    def test_c5(self):
        assert exact_boxicity(cycle(5)) == 2

    def test_budget_bounds(self):
        g = gnp(9, 0.5, 3)
        with pytest.raises(BudgetExceeded) as info:
            exact_boxicity(g)
        b = info.value.bounds
        assert 1 <= b["lower"] <= b["upper"] <= math.ceil(g.n / 2)

    def test_candidate_budget(self):
        with pytest.raises(BudgetExceeded):
            exact_boxicity(edgeless(5), OracleBudget(max_n=6, max_candidates=10))

    @settings(max_examples=60)
    @given(graphs(min_n=1, max_n=6))
    def test_relabel_invariant(self, g):
        perm = list(reversed(range(g.n)))
        assert exact_boxicity(g.relabel(perm)) == exact_boxicity(g)


class TestCircularDimension:
    def test_examples(self):
        assert exact_circular_dimension(complete_minus_pm(3)) == 1
        assert exact_circular_dimension(cycle(4)) == 1
        assert exact_circular_dimension(complete(4)) == 0

    def test_cover_is_witness(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
        cover = circular_dimension_cover(g)
        assert len(cover) == 2
        assert all(is_circular_arc_graph(f) for f in cover)
        assert intersect(5, cover) == g


class TestChromatic:
    def test_examples(self):
        assert exact_chromatic_number(cycle(5)) == 3
        assert exact_chromatic_number(complete(4)) == 4
        assert exact_chromatic_number(complete(3)) == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_cross_consistency(n):
    for rep, members in graph_classes(n):
        g = Graph.from_mask(n, rep)
        box, cdim = exact_boxicity(g), exact_circular_dimension(g)
        assert cdim <= box <= math.ceil(n / 2)
        assert (box == 1) == (is_interval_graph(g) and not g.is_complete())
        assert (cdim == 1) == (is_circular_arc_graph(g) and not g.is_complete())
        other = Graph.from_mask(n, int(members[-1]))
        assert exact_boxicity(other) == box
