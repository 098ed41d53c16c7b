import random

import pytest
from hypothesis import given

from boxcol.errors import FormatError, UnsupportedSizeError
from boxcol.graph import (
    Graph,
    SplitMix64,
    complement,
    complete,
    complete_minus_pm,
    cycle,
    edgeless,
    generate,
    gnp,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    path,
    star,
    to_edge_list,
    to_graph6,
    _encode_n,
)

from .conftest import graphs

nx = pytest.importorskip("networkx")


def reference_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def assert_well_formed(g: Graph) -> None:
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert g.edge_count * 2 == sum(g.degree(v) for v in range(g.n))


class TestGraph6:
    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.edge_count == 0

    def test_single_edge(self):
        g = parse_graph6("A_")
        assert g.n == 2 and g.edges() == [(0, 1)]

    def test_k4(self):
        assert parse_graph6("C~") == complete(4)
        assert to_graph6(complete(4)) == "C~"
        assert to_graph6(edgeless(1)) == "@"

    def test_reference_values(self):
        # frozen from the networkx encoder
        assert reference_graph6(complete(4)) == "C~"
        assert reference_graph6(edgeless(1)) == "@"
        assert reference_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"

    @given(graphs(min_n=0, max_n=20))
    def test_matches_reference_encoder(self, g):
        assert to_graph6(g) == reference_graph6(g)

    def test_round_trip_random(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(0, 62)
            g = gnp(n, rng.random(), rng.getrandbits(64))
            assert parse_graph6(to_graph6(g)) == g

    def test_long_header_round_trip(self):
        g = gnp(70, 0.1, 3)
        text = to_graph6(g)
        assert text[0] == "~"
        assert parse_graph6(text) == g
        assert text == reference_graph6(g)

    def test_header_prefix_ignored(self):
        assert parse_graph6(">>graph6<<C~\n") == complete(4)

    @pytest.mark.parametrize(
        "text, offset",
        [("!!", 0), ("C~!", 2), ("C", 1), ("C~~", 2), ("", 0)],
    )
    def test_malformed(self, text, offset):
        with pytest.raises(FormatError) as info:
            parse_graph6(text)
        assert info.value.offset == offset

    def test_unsupported_size(self):
        with pytest.raises(UnsupportedSizeError):
            _encode_n(258048)


class TestEdgeList:
    def test_dedup_and_reversed(self):
        g = parse_edge_list("4\n0 1\n1 0\n0 1\n2 3 # comment\n\n")
        assert g.edges() == [(0, 1), (2, 3)]

    def test_round_trip(self):
        g = cycle(6)
        assert parse_edge_list(to_edge_list(g)) == g

    @pytest.mark.parametrize("text", ["", "x\n", "3\n0 3\n", "3\n1 1\n", "3\n0 1 2\n"])
    def test_errors(self, text):
        with pytest.raises(FormatError):
            parse_edge_list(text)

    def test_sniffing(self):
        assert parse_graph("C~") == complete(4)
        assert parse_graph("2\n0 1\n") == complete(2)


class TestComplement:
    def test_c4(self):
        assert complement(cycle(4)) == Graph.from_edges(4, [(0, 2), (1, 3)])

    def test_k5(self):
        assert complement(complete(5)) == edgeless(5)

    @given(graphs(min_n=0, max_n=10))
    def test_involution(self, g):
        assert complement(complement(g)) == g

    @given(graphs(min_n=0, max_n=10))
    def test_partition_of_pairs(self, g):
        h = complement(g)
        assert g.edge_count + h.edge_count == g.n * (g.n - 1) // 2
        assert not any(h.has_edge(u, v) for u, v in g.edges())


class TestGenerators:
    def test_counts(self):
        assert complete_minus_pm(3).n == 6
        assert complete_minus_pm(3).edge_count == 12
        assert path(4).edge_count == 3
        assert gnp(10, 0.0, seed=1) == edgeless(10)
        assert gnp(10, 1.0, seed=1) == complete(10)
        assert star(5).degree(0) == 4

    @pytest.mark.parametrize("m", range(1, 8))
    def test_complete_minus_pm_regular(self, m):
        g = complete_minus_pm(m)
        assert {g.degree(v) for v in range(g.n)} == {2 * m - 2}
        assert all(not g.has_edge(2 * i, 2 * i + 1) for i in range(m))

    @pytest.mark.parametrize(
        "spec",
        ["path(0)", "path(7)", "cycle(5)", "complete(6)", "edgeless(4)", "star(6)",
         "complete_minus_pm(4)", "gnp(12, 0.4, 9)"],
    )
    def test_well_formed(self, spec):
        assert_well_formed(generate(spec))

    def test_generate_forms_agree(self):
        assert generate("gnp(15, 0.3, 5)") == generate("gnp", 15, 0.3, 5) == gnp(15, 0.3, 5)

    @pytest.mark.parametrize(
        "family, params",
        [("cycle", (2,)), ("gnp", (5, 1.5, 0)), ("complete_minus_pm", (0,)), ("path", (-1,)),
         ("nonsense", (3,)), ("star", (0,))],
    )
    def test_invalid(self, family, params):
        with pytest.raises(ValueError):
            generate(family, *params)

    def test_gnp_deterministic(self):
        assert gnp(30, 0.3, 42) == gnp(30, 0.3, 42)
        assert gnp(30, 0.3, 42) != gnp(30, 0.3, 43)


class TestSplitMix64:
    def test_reference_stream(self):
        # frozen from rand_xoshiro's SplitMix64 (Rust) seeded with the same state
        rng = SplitMix64(1234567)
        assert [rng.next() for _ in range(3)] == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
        ]
        rng = SplitMix64(0)
        assert [rng.next(), rng.next()] == [16294208416658607535, 7960286522194355700]

    def test_random_in_unit_interval(self):
        rng = SplitMix64(0)
        xs = [rng.random() for _ in range(1000)]
        assert all(0.0 <= x < 1.0 for x in xs)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
