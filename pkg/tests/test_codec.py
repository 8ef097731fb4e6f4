import random

import pytest
from hypothesis import given, settings

from codec import (BitReader, BitWriter, CodecError, QueryStats, SumEncoding, adjacent,
                   adjacent_labels, decode, encode, gamma_bit_length, label_order_graph,
                   parse_gamma, parse_incidence, serialize_gamma, serialize_incidence, unwrap_container,
                   wrap_container)
from graph_core import Graph, complete_graph_of, cycle_graph
from labeller import SumLabelling, sum_label
from metrics import compressed_incidence_cost, storage_bits
from oracle import brute_force_decode, isomorphic, random_graph
from schemes import (complete_graph_labelling, incidence_scheme, matching_block_union, matching_exponential,
                     matching_linear)
from strategies import graphs, label_sets

TRIANGLE = SumEncoding((1, 3, 4, 5, 7))
K4_ENCODING = (1, 5, 6, 9, 10, 13, 14, 18, 22)


class TestEncodeDecode:
    def test_encode_k4(self, k4):
        assert encode(sum_label(k4)).labels == K4_ENCODING

    def test_encode_triangle(self, triangle_labelling):
        assert encode(triangle_labelling) == TRIANGLE

    def test_encode_single_vertex(self):
        assert encode(SumLabelling({1: 1}, (), Graph(1))).labels == (1,)

    def test_encode_rejects_duplicates(self):
        with pytest.raises(CodecError):
            encode(SumLabelling({1: 1, 2: 5}, (6, 6), complete_graph_of(2)))

    def test_encoding_must_be_increasing(self):
        with pytest.raises(CodecError):
            SumEncoding((3, 2))
        with pytest.raises(CodecError):
            SumEncoding((0, 2))

    def test_decode_triangle(self):
        decoded = decode(TRIANGLE)
        assert decoded.graph.sorted_edges() == [(1, 2), (1, 3), (2, 3)]
        assert decoded.isolate_labels() == [5, 7]

    def test_decode_without_sums(self):
        decoded = decode(SumEncoding((1, 2)))
        assert decoded.graph.m == 0
        assert decoded.isolate_labels() == [1, 2]
        assert decoded.core_graph() is None

    def test_decode_k4(self):
        assert decode(SumEncoding(K4_ENCODING)).core_graph() == complete_graph_of(4)

    @settings(max_examples=200, derandomize=True, deadline=None)
    @given(label_sets())
    def test_decode_agrees_with_triple_scan(self, labels):
        assert decode(SumEncoding(tuple(sorted(labels)))).graph == brute_force_decode(sorted(labels))


class TestAdjacency:
    def test_triangle_queries(self):
        assert adjacent_labels(TRIANGLE, 1, 3)
        assert not adjacent_labels(TRIANGLE, 1, 5)

    def test_positions(self):
        assert adjacent(TRIANGLE, 1, 2)
        assert not adjacent(TRIANGLE, 4, 5)
        with pytest.raises(CodecError):
            adjacent(TRIANGLE, 2, 2)
        with pytest.raises(CodecError):
            adjacent(TRIANGLE, 0, 6)
        with pytest.raises(CodecError):
            adjacent_labels(TRIANGLE, 1, 2)

    def test_one_search_per_query(self):
        stats = QueryStats()
        adjacent(TRIANGLE, 1, 3, stats)
        adjacent(TRIANGLE, 3, 5, stats)
        assert stats.searches == 2

    def test_queries_agree_with_triple_scan(self):
        rng = random.Random(9)
        for _ in range(500):
            labels = sorted(rng.sample(range(1, 10 ** 6), rng.randint(2, 20)))
            enc = SumEncoding(tuple(labels))
            reference = brute_force_decode(labels)
            i, j = rng.sample(range(1, len(labels) + 1), 2)
            assert adjacent(enc, i, j) == reference.has_edge(i, j)


class TestGamma:
    def test_single_label_bytes(self):
        assert serialize_gamma(SumEncoding((1,))) == bytes([0x53, 0x01, 0xC0])

    def test_k4_round_trip(self):
        enc = SumEncoding(K4_ENCODING)
        assert parse_gamma(serialize_gamma(enc)) == enc

    @settings(max_examples=200, derandomize=True, deadline=None)
    @given(label_sets(max_size=40))
    def test_round_trip(self, labels):
        enc = SumEncoding(tuple(sorted(labels)))
        data = serialize_gamma(enc)
        assert parse_gamma(data) == enc
        assert len(data) == 2 + (gamma_bit_length(enc) + 7) // 8

    @pytest.mark.parametrize("data", [
        b"",
        b"\x54\x01\xc0",
        b"\x53\x02\xc0",
        b"\x53\x01",
        b"\x53\x01\xc0\x00",
        b"\x53\x01\xc1",
    ])
    def test_rejects_malformed(self, data):
        with pytest.raises(CodecError):
            parse_gamma(data)

    def test_size_close_to_storage_bits(self):
        for seed in range(30):
            labelling = sum_label(random_graph(20, 30, seed))
            enc = encode(labelling)
            count = len(enc)
            assert gamma_bit_length(enc) <= 2 * storage_bits(enc) + count + 2 * count.bit_length()


class TestIncidence:
    def test_k2_bits(self):
        g = complete_graph_of(2)
        assert serialize_incidence(g) == bytes([0b10100100])
        assert parse_incidence(serialize_incidence(g)) == g

    def test_c4_round_trip(self):
        assert parse_incidence(serialize_incidence(cycle_graph(4))) == cycle_graph(4)

    @settings(max_examples=200, derandomize=True, deadline=None)
    @given(graphs(max_n=30))
    def test_round_trip(self, g):
        assert parse_incidence(serialize_incidence(g)) == g

    def test_length_matches_cost_without_vertex_pointers(self):
        from codec import incidence_bit_length
        from utils import ceil_log2
        for n, m in [(2, 1), (6, 6), (4, 6), (17, 40)]:
            g = random_graph(n, m, seed=n + m)
            bits = incidence_bit_length(g)
            assert bits == compressed_incidence_cost(n, m) - n * ceil_log2(n)
            assert len(serialize_incidence(g)) == (bits + 7) // 8

    def test_rejects_out_of_range_index(self):
        # n=3, m=1, 端点 3 和 0
        with pytest.raises(CodecError):
            parse_incidence(bytes([0xD3, 0x00]))

    def test_rejects_truncated_header(self):
        with pytest.raises(CodecError):
            parse_incidence(b"\xff")

    def test_requires_an_edge(self):
        with pytest.raises(CodecError):
            serialize_incidence(Graph(3))


def test_container_tags():
    assert wrap_container('gamma', b"\x01") == b"\x01\x01"
    assert unwrap_container(b"\x02abc") == ('incidence', b"abc")
    with pytest.raises(CodecError):
        unwrap_container(b"\x07")
    with pytest.raises(CodecError):
        wrap_container('zip', b"")


def test_bit_writer_and_reader():
    writer = BitWriter()
    writer.write_gamma(5)
    writer.write_header(4)
    writer.write_int(3, 2)
    reader = BitReader(writer.to_bytes())
    assert reader.read_gamma() == 5
    assert reader.read_header() == 4
    assert reader.read_int(2) == 3
    with pytest.raises(CodecError):
        writer.write_int(4, 2)


@pytest.mark.parametrize("labelling", [
    matching_exponential(16),
    matching_linear(16),
    matching_block_union(3),
    complete_graph_labelling(7),
    incidence_scheme(cycle_graph(6)),
    incidence_scheme(random_graph(12, 30, seed=4)),
], ids=['matching-exp', 'matching-lin', 'matching-block', 'complete', 'incidence-c6', 'incidence-random'])
def test_scheme_outputs_decode_to_their_graph(labelling):
    decoded = decode(encode(labelling))
    assert decoded.graph == label_order_graph(labelling)
    assert isomorphic(decoded.core_graph(), labelling.base_graph)
