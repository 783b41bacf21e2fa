import pytest
from hypothesis import given

from conftest import graphs
from oracles import graph6_bits, isomorphic
from fixatic.families import complete, cycle, path
from fixatic.graph import (Graph, GraphFormatError, complement, disjoint_union, encode_graph6,
                           is_connected, join, parse_edge_list, parse_graph, parse_graph6,
                           to_edge_list)

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("text, n, edges", [
    ("C~", 4, K4_EDGES),
    ("A_", 2, [(0, 1)]),
    ("Ch", 4, [(0, 1), (1, 2), (2, 3)]),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("@", 1, []),
    ("Dhc", 5, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]),
])
def test_graph6_examples(text, n, edges):
    assert graph6_bits(n, edges) == text
    g = parse_graph6(text)
    assert g == Graph.from_edges(n, edges)
    assert encode_graph6(g) == text


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    s = encode_graph6(g)
    assert s == graph6_bits(g.n, list(g.edges()))
    assert parse_graph6(s) == g


def test_graph6_strips_whitespace():
    assert parse_graph6("C~\n") == parse_graph6("C~")


@pytest.mark.parametrize("text, where", [
    ("C!", "byte 1"),
    ("C~~", "byte 0"),
    ("C", "byte 0"),
    ("~??", "byte 0"),
    ("", "empty"),
])
def test_graph6_errors(text, where):
    with pytest.raises(GraphFormatError, match=where):
        parse_graph6(text)


def test_graph6_nonzero_padding():
    # n=3 uses 3 bits; '@' + 1 = 'A' sets the last padding bit
    with pytest.raises(GraphFormatError, match="padding"):
        parse_graph6("BA")


def test_graph6_rejects_large():
    with pytest.raises(GraphFormatError):
        encode_graph6(Graph.empty(63))


def test_edge_list():
    assert parse_edge_list("4 3\n0 1\n1 2\n2 3") == path(4)
    assert parse_edge_list("# triangle\n3 3\n0 1\n1 2\n0 2\n") == complete(3)
    assert parse_edge_list("3 2\n0 1\n1 0") == Graph.from_edges(3, [(0, 1)])


@pytest.mark.parametrize("text, msg", [
    ("2 1\n0 0", "self-loop"),
    ("2 1\n0 2", "out of range"),
    ("2 1\n0 x", "non-integer"),
    ("", "header"),
    ("3 2\n0 1", "announces"),
])
def test_edge_list_errors(text, msg):
    with pytest.raises(GraphFormatError, match=msg):
        parse_edge_list(text)


@given(graphs(max_n=9))
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g
    assert parse_graph(to_edge_list(g)) == g
    assert parse_graph(encode_graph6(g) + "\n") == g


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(2, (0b01, 0))
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_complement_examples():
    assert complement(complete(4)) == Graph.empty(4)
    assert isomorphic(complement(cycle(5)), cycle(5))
    assert isomorphic(complement(path(4)), path(4))


@given(graphs(max_n=9))
def test_complement_involution(g):
    c = complement(g)
    assert complement(c) == g
    assert c.m + g.m == g.n * (g.n - 1) // 2
    for v in range(g.n):
        assert c.degree(v) == g.n - 1 - g.degree(v)


def test_join_examples():
    k4e = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert isomorphic(join(complete(1), path(3)), k4e)
    wheel = join(complete(1), cycle(4))
    assert wheel.degree(0) == 4
    assert join(complete(2), complete(2)) == complete(4)


def test_union_examples():
    assert disjoint_union(complete(1), complete(1)) == Graph.empty(2)
    assert disjoint_union(path(2), path(2)) == Graph.from_edges(4, [(0, 1), (2, 3)])


@given(graphs(max_n=5), graphs(max_n=5))
def test_join_union_edge_counts(g1, g2):
    u, j = disjoint_union(g1, g2), join(g1, g2)
    assert u.n == j.n == g1.n + g2.n
    assert u.m == g1.m + g2.m
    assert j.m == u.m + g1.n * g2.n
    for a in range(g1.n):
        for b in range(g2.n):
            assert j.has_edge(a, g1.n + b) and not u.has_edge(a, g1.n + b)


def test_is_connected():
    assert is_connected(path(4))
    assert not is_connected(disjoint_union(complete(1), complete(1)))
    assert is_connected(cycle(7))
    assert is_connected(Graph.empty(1)) and is_connected(Graph.empty(0))


def test_degree_and_neighbors():
    g = path(4)
    assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]
    assert g.neighbors(1) == [0, 2]
    assert g.induced([1, 2, 3]) == path(3)
