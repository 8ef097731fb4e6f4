import itertools
import math
import random

import pytest

from graph_core import Graph, path_graph
from labeller import check_valid, is_exclusive, sum_label
from oracle import random_graph
from schemes import (SchemeError, build_scheme, complete_graph_labelling, expected_path_isolates,
                     incidence_scheme, matching_block_union, matching_block_union_pairs,
                     matching_closed_form, matching_exponential, matching_exponential_labels,
                     matching_linear, path_optimal_ordering)


def _labels_in_order(labelling):
    return [labelling.vertex_labels[v] for v in sorted(labelling.vertex_labels)]


def test_matching_exponential_sixteen_vertices():
    labelling = matching_exponential(16)
    assert _labels_in_order(labelling) == [2, 3, 5, 6, 11, 12, 23, 24, 47, 48, 95, 96, 191, 192, 383, 384]
    assert labelling.isolate_labels == (767,)
    assert check_valid(labelling).ok


@pytest.mark.parametrize("n, labels, isolate", [
    (2, [2, 3], 5),
    (4, [2, 3, 5, 6], 11),
])
def test_matching_exponential_small(n, labels, isolate):
    labelling = matching_exponential(n)
    assert _labels_in_order(labelling) == labels
    assert labelling.isolate_labels == (isolate,)


def test_closed_form_matches_recurrence():
    recurrence = matching_exponential_labels(60)
    assert [matching_closed_form(k) for k in range(1, 61)] == recurrence
    assert matching_closed_form(10) == 48
    assert matching_closed_form(9) == 47
    assert matching_closed_form(1) == 2


def test_exponential_growth_rate():
    for k, label in enumerate(matching_exponential_labels(60), start=1):
        ratio = label / math.sqrt(2) ** k
        assert 1 <= ratio <= 3


def test_matching_linear_sixteen_vertices():
    labelling = matching_linear(16)
    labels = _labels_in_order(labelling)
    assert list(zip(labels[::2], labels[1::2])) == [(16 + i, 31 - i) for i in range(8)]
    assert labelling.isolate_labels == (47,)
    assert check_valid(labelling).ok
    assert is_exclusive(labelling)


def test_matching_linear_small():
    assert _labels_in_order(matching_linear(8)) == [8, 15, 9, 14, 10, 13, 11, 12]
    assert matching_linear(8).isolate_labels == (23,)
    assert _labels_in_order(matching_linear(2)) == [2, 3]


@pytest.mark.parametrize("factory", [matching_exponential, matching_linear])
def test_matching_rejects_odd(factory):
    with pytest.raises(SchemeError):
        factory(5)


def test_block_union_worked_example():
    pairs = matching_block_union_pairs(2)
    assert pairs[0] == (193, 26)
    assert pairs[1] == (137, 82)
    assert all(sum(pair) == 219 for pair in pairs)
    assert matching_block_union(2).isolate_labels == (219,)


def test_block_union_single_edge():
    labelling = matching_block_union(0)
    assert _labels_in_order(labelling) == [1, 2]
    assert labelling.isolate_labels == (3,)


@pytest.mark.parametrize("d", range(6))
def test_block_union_valid(d):
    labelling = matching_block_union(d)
    labels = labelling.all_labels()
    assert len(set(labels)) == len(labels)
    assert labelling.isolate_count == 1
    assert all(label.bit_length() <= 2 * d + 5 for label in labels)
    assert check_valid(labelling).ok
    assert is_exclusive(labelling)


def test_complete_graph_labelling():
    labelling = complete_graph_labelling(4)
    assert _labels_in_order(labelling) == [1, 5, 9, 13]
    assert labelling.isolate_labels == (6, 10, 14, 18, 22)
    five = complete_graph_labelling(5)
    assert five.isolate_labels == tuple(range(6, 31, 4))
    for n in range(4, 10):
        labelling = complete_graph_labelling(n)
        assert labelling.isolate_count == 2 * n - 3
        assert check_valid(labelling).ok
        assert is_exclusive(labelling)
    with pytest.raises(SchemeError):
        complete_graph_labelling(3)


def test_path_optimal_ordering_shapes():
    assert path_optimal_ordering(5).order == (1, 3, 5, 4, 2)
    assert path_optimal_ordering(6).order == (1, 3, 5, 6, 4, 2)
    with pytest.raises(SchemeError):
        path_optimal_ordering(2)


@pytest.mark.parametrize("n", range(3, 21))
def test_path_optimal_ordering_gives_two_isolates(n):
    labelling = sum_label(path_graph(n), path_optimal_ordering(n))
    assert labelling.isolate_labels == expected_path_isolates(n)


def test_path_isolates_for_small_cases():
    assert expected_path_isolates(5) == (18, 22)
    assert expected_path_isolates(6) == (22, 26)
    assert expected_path_isolates(7) == (26, 30)


def test_incidence_scheme_small():
    k2 = incidence_scheme(Graph(2, frozenset({(1, 2)})))
    assert dict(k2.vertex_labels) == {1: 6, 2: 5}
    assert k2.isolate_labels == (11,)
    k3 = incidence_scheme(Graph(3, frozenset(itertools.combinations(range(1, 4), 2))))
    assert dict(k3.vertex_labels) == {1: 12, 2: 10, 3: 9}
    assert sorted(k3.isolate_labels) == [19, 21, 22]


def test_incidence_scheme_random_graphs():
    rng = random.Random(5)
    for seed in range(40):
        n = rng.randint(2, 16)
        m = rng.randint((n + 1) // 2, n * (n - 1) // 2)
        g = random_graph(n, m, seed)
        labelling = incidence_scheme(g)
        assert labelling.max_label() < 2 ** (n + 2)
        assert labelling.isolate_count == g.m <= n * n / 2
        assert check_valid(labelling).ok
        assert is_exclusive(labelling)


def test_incidence_scheme_rejects_isolated_vertex():
    with pytest.raises(SchemeError):
        incidence_scheme(Graph(3, frozenset({(1, 2)})))


def test_build_scheme_dispatch():
    assert build_scheme('matching-lin', n=4).isolate_labels == (11,)
    assert build_scheme('matching-block', d=1).isolate_count == 1
    with pytest.raises(SchemeError):
        build_scheme('unknown', n=4)
    with pytest.raises(SchemeError):
        build_scheme('incidence')
