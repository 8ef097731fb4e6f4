# -*- coding: utf-8 -*-
# -------------------------------
# 文件名   :   codec.py
# -------------------------------
# 说明 :   和数编码（有序整数列表）、邻接查询、Elias gamma 与压缩关联矩阵的二进制格式
# -------------------------------

import bisect
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Tuple

from graph_core import Graph, normalize_edge
from labeller import SumLabelling
from utils import ceil_log2

logger = logging.getLogger(__name__)

GAMMA_MAGIC = 0x53
GAMMA_VERSION = 0x01

FORMAT_GAMMA = 0x01
FORMAT_INCIDENCE = 0x02
FORMAT_TAGS = {'gamma': FORMAT_GAMMA, 'incidence': FORMAT_INCIDENCE}


class CodecError(ValueError):
    """编码内容不合法或二进制流损坏"""


@dataclass(frozen=True)
class SumEncoding:
    """严格递增的正整数标签序列"""
    labels: Tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, 'labels', labels)
        if labels and labels[0] < 1:
            raise CodecError(f"标签必须为正整数，收到 {labels[0]}")
        for previous, current in zip(labels, labels[1:]):
            if current <= previous:
                raise CodecError(f"标签必须严格递增: {previous} 之后是 {current}")

    def __len__(self) -> int:
        return len(self.labels)


@dataclass
class QueryStats:
    """记录成员查找（二分查找）的次数"""
    searches: int = 0


@dataclass(frozen=True)
class DecodedGraph:
    """按标签顺序编号的图，顶点 i 对应 labels[i-1]"""
    graph: Graph
    labels: Tuple[int, ...]
    isolate_positions: FrozenSet[int] = field(default_factory=frozenset)

    def isolate_labels(self) -> List[int]:
        return [self.labels[i - 1] for i in sorted(self.isolate_positions)]

    def core_graph(self) -> Optional[Graph]:
        """去掉度为0的顶点后按标签顺序重新编号的图"""
        kept = [v for v in self.graph.vertices() if v not in self.isolate_positions]
        if not kept:
            return None
        index = {v: k + 1 for k, v in enumerate(kept)}
        return Graph(len(kept), frozenset((index[u], index[w]) for u, w in self.graph.edges))


def encode(labelling: SumLabelling) -> SumEncoding:
    labels = labelling.all_labels()
    if len(set(labels)) != len(labels):
        raise CodecError("标注中存在重复标签，无法编码")
    return SumEncoding(tuple(sorted(labels)))


def _contains(labels: Sequence[int], value: int, stats: Optional[QueryStats] = None) -> bool:
    if stats is not None:
        stats.searches += 1
    index = bisect.bisect_left(labels, value)
    return index < len(labels) and labels[index] == value


def decode(enc: SumEncoding) -> DecodedGraph:
    """位置 i<j 之间有边当且仅当 labels[i]+labels[j] 在标签集合中"""
    labels = enc.labels
    if not labels:
        raise CodecError("空编码无法解码")
    largest = labels[-1]
    edges = set()
    for i, a in enumerate(labels):
        for j in range(i + 1, len(labels)):
            total = a + labels[j]
            if total > largest:
                break
            if _contains(labels, total):
                edges.add((i + 1, j + 1))
    graph = Graph(len(labels), frozenset(edges))
    isolates = frozenset(v for v in graph.vertices() if graph.degree(v) == 0)
    return DecodedGraph(graph=graph, labels=labels, isolate_positions=isolates)


def adjacent(enc: SumEncoding, i: int, j: int, stats: Optional[QueryStats] = None) -> bool:
    """按位置（从1开始）查询两点是否相邻，只做一次二分查找"""
    size = len(enc.labels)
    if not (1 <= i <= size and 1 <= j <= size):
        raise CodecError(f"位置 {i},{j} 超出 1..{size}")
    if i == j:
        raise CodecError(f"不能查询顶点 {i} 与自身的邻接关系")
    return _contains(enc.labels, enc.labels[i - 1] + enc.labels[j - 1], stats)


def adjacent_labels(enc: SumEncoding, a: int, b: int, stats: Optional[QueryStats] = None) -> bool:
    """按标签值查询"""
    positions = []
    for label in (a, b):
        index = bisect.bisect_left(enc.labels, label)
        if index >= len(enc.labels) or enc.labels[index] != label:
            raise CodecError(f"标签 {label} 不在编码中")
        positions.append(index + 1)
    return adjacent(enc, positions[0], positions[1], stats)


def label_order_graph(labelling: SumLabelling) -> Graph:
    """把底图按标签排序后的位置重新编号（包含孤立点）"""
    enc = encode(labelling)
    position = {label: index + 1 for index, label in enumerate(enc.labels)}
    edges = frozenset(
        normalize_edge(position[labelling.vertex_labels[u]], position[labelling.vertex_labels[w]])
        for u, w in labelling.base_graph.edges
        if u in labelling.vertex_labels and w in labelling.vertex_labels)
    return Graph(len(enc.labels), edges)


class BitWriter:
    """按位写入，高位在前"""

    def __init__(self):
        self.value = 0
        self.length = 0

    def write_bit(self, bit: int) -> None:
        self.value = (self.value << 1) | (1 if bit else 0)
        self.length += 1

    def write_int(self, value: int, width: int) -> None:
        if value < 0 or value.bit_length() > width:
            raise CodecError(f"{value} 无法用 {width} 位表示")
        self.value = (self.value << width) | value
        self.length += width

    def write_gamma(self, x: int) -> None:
        """Elias gamma：⌊log2 x⌋ 个 0，然后是 x 的二进制"""
        if x < 1:
            raise CodecError(f"Elias gamma 只能编码正整数，收到 {x}")
        width = x.bit_length()
        self.write_int(0, width - 1)
        self.write_int(x, width)

    def write_header(self, x: int) -> None:
        """头部格式: k 个 1，一个 0，然后 x−1 的 k 位二进制，k = ⌈log2 x⌉"""
        if x < 1:
            raise CodecError(f"头部只能编码正整数，收到 {x}")
        k = ceil_log2(x)
        self.write_int((1 << k) - 1, k)
        self.write_bit(0)
        self.write_int(x - 1, k)

    def to_bytes(self) -> bytes:
        padding = (-self.length) % 8
        return (self.value << padding).to_bytes((self.length + padding) // 8, byteorder='big')


class BitReader:
    def __init__(self, data: bytes):
        self.data = data
        self.position = 0
        self.total = len(data) * 8

    def read_bit(self) -> int:
        if self.position >= self.total:
            raise CodecError("数据流被截断")
        byte = self.data[self.position >> 3]
        bit = (byte >> (7 - (self.position & 7))) & 1
        self.position += 1
        return bit

    def read_int(self, width: int) -> int:
        value = 0
        for _ in range(width):
            value = (value << 1) | self.read_bit()
        return value

    def read_gamma(self) -> int:
        zeros = 0
        while self.read_bit() == 0:
            zeros += 1
        return (1 << zeros) | self.read_int(zeros)

    def read_header(self) -> int:
        k = 0
        while self.read_bit() == 1:
            k += 1
        return self.read_int(k) + 1

    def check_padding(self) -> None:
        remaining = self.total - self.position
        if remaining >= 8:
            raise CodecError(f"数据流末尾多出 {remaining} 位")
        if self.read_int(remaining) != 0:
            raise CodecError("填充位必须为0")


def serialize_gamma(enc: SumEncoding) -> bytes:
    """魔数 0x53、版本 0x01，然后 gamma(个数)、gamma(首项)、gamma(各差值)"""
    if not enc.labels:
        raise CodecError("空编码无法序列化")
    writer = BitWriter()
    writer.write_gamma(len(enc.labels))
    writer.write_gamma(enc.labels[0])
    for previous, current in zip(enc.labels, enc.labels[1:]):
        writer.write_gamma(current - previous)
    return bytes([GAMMA_MAGIC, GAMMA_VERSION]) + writer.to_bytes()


def parse_gamma(data: bytes) -> SumEncoding:
    if len(data) < 2:
        raise CodecError("数据太短，缺少头部")
    if data[0] != GAMMA_MAGIC:
        raise CodecError(f"魔数错误: 0x{data[0]:02X}")
    if data[1] != GAMMA_VERSION:
        raise CodecError(f"不支持的版本: 0x{data[1]:02X}")
    reader = BitReader(data[2:])
    count = reader.read_gamma()
    labels = [reader.read_gamma()]
    for _ in range(count - 1):
        labels.append(labels[-1] + reader.read_gamma())
    reader.check_padding()
    return SumEncoding(tuple(labels))


def gamma_bit_length(enc: SumEncoding) -> int:
    """gamma 数据流的位数（不含头部两字节和填充）"""
    if not enc.labels:
        return 0
    values = [len(enc.labels), enc.labels[0]]
    values.extend(b - a for a, b in zip(enc.labels, enc.labels[1:]))
    return sum(2 * x.bit_length() - 1 for x in values)


def serialize_incidence(g: Graph) -> bytes:
    """n 与 m 的头部，然后按排序后的边写 2m 个端点（0 起始，⌈log2 n⌉ 位）"""
    if g.m < 1:
        raise CodecError("压缩关联矩阵格式需要至少一条边")
    width = ceil_log2(g.n)
    writer = BitWriter()
    writer.write_header(g.n)
    writer.write_header(g.m)
    for u, w in g.sorted_edges():
        writer.write_int(u - 1, width)
        writer.write_int(w - 1, width)
    logger.debug(f"关联矩阵格式: {writer.length} 位")
    return writer.to_bytes()


def incidence_bit_length(g: Graph) -> int:
    k_n = ceil_log2(g.n)
    k_m = ceil_log2(g.m)
    return (2 * k_n + 1) + (2 * k_m + 1) + 2 * g.m * k_n


def parse_incidence(data: bytes) -> Graph:
    reader = BitReader(data)
    n = reader.read_header()
    m = reader.read_header()
    width = ceil_log2(n)
    edges = set()
    for _ in range(m):
        u = reader.read_int(width)
        w = reader.read_int(width)
        if u >= n or w >= n:
            raise CodecError(f"端点编号超出范围: {u} {w} (n={n})")
        if u == w:
            raise CodecError(f"不允许自环: {u}")
        edge = normalize_edge(u + 1, w + 1)
        if edge in edges:
            raise CodecError(f"重复的边: {edge}")
        edges.add(edge)
    reader.check_padding()
    return Graph(n, frozenset(edges))


def wrap_container(fmt: str, payload: bytes) -> bytes:
    if fmt not in FORMAT_TAGS:
        raise CodecError(f"未知格式: {fmt}")
    return bytes([FORMAT_TAGS[fmt]]) + payload


def unwrap_container(data: bytes) -> Tuple[str, bytes]:
    if not data:
        raise CodecError("空文件")
    for name, tag in FORMAT_TAGS.items():
        if data[0] == tag:
            return name, data[1:]
    raise CodecError(f"未知的格式标记: 0x{data[0]:02X}")
