import itertools
import random

import pytest

from graph_core import (Graph, GraphFormatError, VertexOrdering, complete_graph_of, cycle_graph,
                        degeneracy_ordering, matching_graph, max_back_degree, parse_edge_list,
                        parse_ordering, path_graph, read_graph_file, serialize_edge_list)
from oracle import networkx_degeneracy, random_degenerate_graph, random_graph


def test_parse_edge_list_with_header():
    g = parse_edge_list("p 4 3\n1 2\n2 3\n3 4\n")
    assert g.n == 4
    assert g.m == 3
    assert g.has_edge(3, 2)
    assert not g.has_edge(1, 4)


def test_parse_edge_list_without_header_uses_max_index():
    g = parse_edge_list("# comment\n2 5\n\n1 2\n")
    assert g.n == 5
    assert g.sorted_edges() == [(1, 2), (2, 5)]
    assert g.degree(3) == 0


def test_parse_dimacs_style():
    g = parse_edge_list("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == complete_graph_of(3)


@pytest.mark.parametrize("text", [
    "1 1\n",
    "1 2\n2 1\n",
    "p 3 2\n1 2\n",
    "p 2 1\n1 3\n",
    "1 x\n",
    "1 2 3\n",
    "",
    "p 3 1\np 3 1\n1 2\n",
])
def test_parse_edge_list_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_serialize_edge_list_is_parsed_back(c4):
    text = serialize_edge_list(c4)
    assert text.splitlines()[0] == "p 4 4"
    assert parse_edge_list(text) == c4


def test_read_graph_file(write_file):
    path = write_file('k4.txt', serialize_edge_list(complete_graph_of(4)))
    assert read_graph_file(path).m == 6


def test_graph_validation():
    with pytest.raises(GraphFormatError):
        Graph(0)
    with pytest.raises(GraphFormatError):
        Graph(2, frozenset({(1, 3)}))
    assert Graph(3, frozenset({(3, 1)})).edges == frozenset({(1, 3)})


def test_without_edges_keeps_vertices(k4):
    g = k4.without_edges([(2, 1), (3, 4)])
    assert g.n == 4
    assert g.m == 4
    assert not g.has_edge(1, 2)


def test_parse_ordering():
    assert parse_ordering("3 1\n2", 3).order == (3, 1, 2)
    with pytest.raises(GraphFormatError):
        parse_ordering("1 2 2", 3)
    with pytest.raises(GraphFormatError):
        parse_ordering("1 2", 3)
    with pytest.raises(GraphFormatError):
        parse_ordering("1 a 2", 3)


def test_identity_ordering():
    ordering = VertexOrdering.identity(4)
    assert list(ordering) == [1, 2, 3, 4]
    ordering.validate(4)
    with pytest.raises(GraphFormatError):
        ordering.validate(5)


@pytest.mark.parametrize("g, d", [
    (path_graph(6), 1),
    (cycle_graph(5), 2),
    (complete_graph_of(5), 4),
    (matching_graph(6), 1),
    (Graph(3), 0),
])
def test_degeneracy_of_standard_graphs(g, d):
    result = degeneracy_ordering(g)
    assert result.d == d
    result.ordering.validate(g.n)
    assert max_back_degree(g, result.ordering) == d


def test_degeneracy_tie_break_smallest_index_first():
    # 剥离顺序 1,2,3，逆序后为 3,2,1
    result = degeneracy_ordering(path_graph(3))
    assert result.ordering.order == (3, 2, 1)


def test_degeneracy_agrees_with_core_numbers():
    rng = random.Random(7)
    for seed in range(60):
        n = rng.randint(2, 40)
        m = rng.randint((n + 1) // 2, min(3 * n, n * (n - 1) // 2))
        g = random_graph(n, m, seed)
        result = degeneracy_ordering(g)
        assert result.d == networkx_degeneracy(g)
        assert max_back_degree(g, result.ordering) <= result.d


def test_degenerate_generator_respects_bound():
    for seed in range(20):
        g = random_degenerate_graph(50, 2, seed)
        assert degeneracy_ordering(g).d <= 2


def test_named_graph_errors():
    with pytest.raises(GraphFormatError):
        matching_graph(3)
    with pytest.raises(GraphFormatError):
        cycle_graph(2)


def _min_back_degree(g):
    return min(max_back_degree(g, VertexOrdering(order)) for order in itertools.permutations(g.vertices()))


def test_degeneracy_is_optimal_on_all_small_graphs():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            edges = frozenset(pair for k, pair in enumerate(pairs) if mask >> k & 1)
            g = Graph(n, edges)
            assert degeneracy_ordering(g).d == _min_back_degree(g)


def test_degeneracy_is_optimal_on_random_graphs():
    rng = random.Random(11)
    for seed in range(200):
        n = rng.randint(2, 7)
        m = rng.randint((n + 1) // 2, n * (n - 1) // 2)
        g = random_graph(n, m, seed)
        assert degeneracy_ordering(g).d == _min_back_degree(g)


@pytest.mark.parametrize("text", ["p 4 4 4\n1 2\n", "p edge 4\n1 2\n"])
def test_header_rejects_extra_numeric_field(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_header_with_format_word():
    assert parse_edge_list("p col 3 1\n1 2\n").m == 1
