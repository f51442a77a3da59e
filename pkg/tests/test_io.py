import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicliques.errors import ParseError
from bicliques.gen import bipartite_gnm, gnm
from bicliques.graph import Graph
from bicliques.io import parse_bipartite, parse_graph, serialize_bipartite, serialize_graph


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 20))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) \
        if pairs else []
    return Graph.from_edge_list(n, edges)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_serialize_parse_identity(g):
    text = serialize_graph(g)
    g2 = parse_graph(text)
    assert g2 == g
    assert serialize_graph(g2) == text


class TestGeneralFormat:
    def test_parse_path(self):
        g = parse_graph("3 2\n0 1\n1 2\n")
        assert g.n == 3 and g.m == 2
        assert g.degrees().tolist() == [1, 2, 1]

    def test_serialize_canonical(self):
        text = "3 2\n0 1\n1 2\n"
        assert serialize_graph(parse_graph(text)) == text

    def test_parse_accepts_any_line_order(self):
        g = parse_graph("3 2\n1 2\n0 1\n")
        assert serialize_graph(g) == "3 2\n0 1\n1 2\n"

    def test_out_of_range_line_number(self):
        with pytest.raises(ParseError) as ei:
            parse_graph("2 1\n0 2\n")
        assert ei.value.line == 2 and "range" in ei.value.reason

    def test_u_ge_v_rejected(self):
        with pytest.raises(ParseError) as ei:
            parse_graph("3 1\n2 1\n")
        assert ei.value.line == 2
        with pytest.raises(ParseError):
            parse_graph("3 1\n1 1\n")

    def test_duplicate_line(self):
        with pytest.raises(ParseError) as ei:
            parse_graph("3 2\n0 1\n0 1\n")
        assert ei.value.line == 3 and "duplicate" in ei.value.reason

    def test_missing_trailing_newline(self):
        with pytest.raises(ParseError):
            parse_graph("3 1\n0 1")

    def test_bad_header(self):
        with pytest.raises(ParseError) as ei:
            parse_graph("3\n")
        assert ei.value.line == 1

    def test_wrong_line_count(self):
        with pytest.raises(ParseError):
            parse_graph("3 2\n0 1\n")
        with pytest.raises(ParseError):
            parse_graph("3 1\n0 1\n1 2\n")

    def test_non_integer_tokens(self):
        with pytest.raises(ParseError) as ei:
            parse_graph("3 1\n0 x\n")
        assert ei.value.line == 2

    def test_too_many_edges_declared(self):
        with pytest.raises(ParseError) as ei:
            parse_graph("2 2\n0 1\n0 1\n")
        assert ei.value.line == 1

    def test_empty_graph(self):
        assert serialize_graph(parse_graph("4 0\n")) == "4 0\n"

    def test_roundtrip_random(self):
        for i, seed in enumerate([5, 6, 7]):
            n = 30 + i * 17
            g = gnm(n, n * 2, seed)
            assert parse_graph(serialize_graph(g)) == g


class TestBipartiteFormat:
    def test_parse_basic(self):
        bg = parse_bipartite("2 2 1\n1 1\n")
        assert bg.orig_a == 2 and bg.orig_b == 2 and bg.m == 1
        assert bg.has_edge(1, 1) and not bg.has_edge(0, 1)

    def test_per_side_indices(self):
        # the same numeral may be a valid id on each side
        bg = parse_bipartite("3 2 2\n2 1\n2 0\n")
        assert bg.m == 2 and bg.has_edge(2, 1)

    def test_serialize_roundtrip(self):
        text = "3 2 2\n0 1\n2 0\n"
        assert serialize_bipartite(parse_bipartite(text)) == text

    def test_swapped_orientation_preserved(self):
        text = "2 5 3\n0 0\n0 4\n1 2\n"
        bg = parse_bipartite(text)
        assert bg.swapped and bg.a == 5 and bg.b == 2
        assert serialize_bipartite(bg) == text

    def test_out_of_range(self):
        with pytest.raises(ParseError) as ei:
            parse_bipartite("2 2 1\n0 2\n")
        assert ei.value.line == 2

    def test_duplicate(self):
        with pytest.raises(ParseError) as ei:
            parse_bipartite("2 2 2\n0 1\n0 1\n")
        assert ei.value.line == 3

    def test_roundtrip_random(self):
        for seed in (1, 2):
            bg = bipartite_gnm(9, 14, 40, seed)  # swapped internally
            assert parse_bipartite(serialize_bipartite(bg)) == bg
        bg = bipartite_gnm(14, 9, 40, 3)
        assert parse_bipartite(serialize_bipartite(bg)) == bg
