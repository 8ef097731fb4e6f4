# -*- coding: utf-8 -*-
# -------------------------------
# 文件名   :   graph_core.py
# -------------------------------
# 说明 :   简单无向图、边表文本格式、顶点排序（含退化序）
# -------------------------------

import heapq
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from utils import iter_content_lines, parse_int_tokens, read_text_file

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class GraphFormatError(ValueError):
    """图或排序不合法"""


def normalize_edge(u: int, w: int) -> Edge:
    return (u, w) if u < w else (w, u)


@dataclass(frozen=True)
class Graph:
    """顶点为 1..n 的简单无向图，构造后不可变"""
    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError(f"顶点数必须为正数，当前为 {self.n}")
        normalized = set()
        for u, w in self.edges:
            if u == w:
                raise GraphFormatError(f"不允许自环: {u} {w}")
            if min(u, w) < 1 or max(u, w) > self.n:
                raise GraphFormatError(f"边 ({u},{w}) 的端点超出 1..{self.n}")
            normalized.add(normalize_edge(u, w))
        object.__setattr__(self, 'edges', frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def _adjacency(self) -> Dict[int, FrozenSet[int]]:
        adjacency: Dict[int, Set[int]] = {v: set() for v in self.vertices()}
        for u, w in self.edges:
            adjacency[u].add(w)
            adjacency[w].add(u)
        return {v: frozenset(nbrs) for v, nbrs in adjacency.items()}

    def neighbours(self, v: int) -> FrozenSet[int]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, w: int) -> bool:
        return normalize_edge(u, w) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def without_edges(self, removed: Iterable[Edge]) -> 'Graph':
        """返回删除若干条边后的新图（顶点集不变）"""
        removed_set = {normalize_edge(u, w) for u, w in removed}
        return Graph(self.n, self.edges - removed_set)


@dataclass(frozen=True)
class VertexOrdering:
    """1..n 的一个排列"""
    order: Tuple[int, ...]

    @staticmethod
    def identity(n: int) -> 'VertexOrdering':
        return VertexOrdering(tuple(range(1, n + 1)))

    def validate(self, n: int) -> None:
        if len(self.order) != n or set(self.order) != set(range(1, n + 1)):
            raise GraphFormatError(f"排序不是 1..{n} 的排列: {list(self.order)}")

    def positions(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def __iter__(self):
        return iter(self.order)

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class DegeneracyResult:
    ordering: VertexOrdering
    d: int


def parse_edge_list(text: str) -> Graph:
    """解析边表文本

    支持 "p <n> <m>" 或 DIMACS 风格 "p edge <n> <m>" 头部，
    边行为 "u w" 或 "e u w"，以 # 开头的行和 DIMACS 的 c 行被忽略。

    Args:
        text: 边表文本

    Returns:
        解析得到的 Graph
    """
    header_n: Optional[int] = None
    header_m: Optional[int] = None
    edges: Set[Edge] = set()
    max_index = 0

    for line in iter_content_lines(text):
        tokens = line.split()
        # DIMACS 注释行
        if tokens[0] == 'c':
            continue
        if tokens[0] == 'p':
            if header_n is not None:
                raise GraphFormatError("重复的 p 头部行")
            numbers = tokens[1:]
            # DIMACS 的 "p edge n m" 带一个格式名
            if len(numbers) == 3 and not numbers[0].lstrip('+-').isdigit():
                numbers = numbers[1:]
            if len(numbers) != 2:
                raise GraphFormatError(f"无法解析头部行: '{line}'")
            header_n, header_m = _parse_ints(numbers, line)
            continue
        if tokens[0] == 'e':
            tokens = tokens[1:]
        if len(tokens) != 2:
            raise GraphFormatError(f"边行必须恰好包含两个顶点: '{line}'")
        u, w = _parse_ints(tokens, line)
        if u < 1 or w < 1:
            raise GraphFormatError(f"顶点编号必须 ≥ 1: '{line}'")
        if u == w:
            raise GraphFormatError(f"不允许自环: '{line}'")
        edge = normalize_edge(u, w)
        if edge in edges:
            raise GraphFormatError(f"重复的边: '{line}'")
        edges.add(edge)
        max_index = max(max_index, edge[1])

    if header_n is not None:
        if max_index > header_n:
            raise GraphFormatError(f"顶点编号 {max_index} 超出头部声明的 n={header_n}")
        if header_m != len(edges):
            raise GraphFormatError(f"头部声明 m={header_m}，实际读到 {len(edges)} 条边")
        n = header_n
    else:
        n = max_index
    if n < 1:
        raise GraphFormatError("图为空：没有头部也没有边")
    return Graph(n, frozenset(edges))


def _parse_ints(tokens: List[str], line: str) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphFormatError(f"存在非整数字段: '{line}'")


def serialize_edge_list(g: Graph) -> str:
    """输出 "p n m" 头部加按字典序排列的边"""
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {w}" for u, w in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph_file(path: str) -> Graph:
    graph = parse_edge_list(read_text_file(path))
    logger.info(f"读取图文件 {path}: n={graph.n}, m={graph.m}")
    return graph


def parse_ordering(text: str, n: int) -> VertexOrdering:
    """解析排序文件（空白分隔的顶点编号）"""
    try:
        order = VertexOrdering(tuple(parse_int_tokens(text)))
    except ValueError as e:
        raise GraphFormatError(str(e))
    order.validate(n)
    return order


def degeneracy_ordering(g: Graph) -> DegeneracyResult:
    """最小度剥离，返回剥离顺序的逆序以及退化度 d

    同为最小度时先删除编号最小的顶点。逆序后每个顶点
    在它之前至多有 d 个邻居。
    """
    degrees = {v: g.degree(v) for v in g.vertices()}
    heap = [(deg, v) for v, deg in degrees.items()]
    heapq.heapify(heap)
    removed: Set[int] = set()
    peel_order: List[int] = []
    d = 0

    while heap:
        deg, v = heapq.heappop(heap)
        # 懒删除：跳过过期的堆条目
        if v in removed or deg != degrees[v]:
            continue
        removed.add(v)
        peel_order.append(v)
        d = max(d, deg)
        for u in g.neighbours(v):
            if u not in removed:
                degrees[u] -= 1
                heapq.heappush(heap, (degrees[u], u))

    ordering = VertexOrdering(tuple(reversed(peel_order)))
    logger.debug(f"退化序计算完成: d={d}")
    return DegeneracyResult(ordering=ordering, d=d)


def max_back_degree(g: Graph, ordering: VertexOrdering) -> int:
    """排序中每个顶点在它之前的邻居数的最大值"""
    positions = ordering.positions()
    best = 0
    for v in ordering:
        earlier = sum(1 for u in g.neighbours(v) if positions[u] < positions[v])
        best = max(best, earlier)
    return best


def path_graph(n: int) -> Graph:
    """路径 P_n: 1-2-...-n"""
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def matching_graph(n: int) -> Graph:
    """完美匹配 M_n: {1,2},{3,4},..."""
    if n < 2 or n % 2:
        raise GraphFormatError(f"匹配图需要正偶数个顶点，当前为 {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n, 2)))


def complete_graph_of(n: int) -> Graph:
    """完全图 K_n"""
    return Graph(n, frozenset((u, w) for u in range(1, n + 1) for w in range(u + 1, n + 1)))


def cycle_graph(n: int) -> Graph:
    """圈 C_n: 1-2-...-n-1"""
    if n < 3:
        raise GraphFormatError(f"圈至少需要3个顶点，当前为 {n}")
    return Graph(n, frozenset(normalize_edge(i, i % n + 1) for i in range(1, n + 1)))
