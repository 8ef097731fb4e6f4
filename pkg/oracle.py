# -*- coding: utf-8 -*-
# -------------------------------
# 文件名   :   oracle.py
# -------------------------------
# 说明 :   暴力参考实现（解码、σ 搜索）、随机图生成、networkx 交叉验证
# -------------------------------

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from graph_core import Edge, Graph, VertexOrdering, normalize_edge
from labeller import LabellingError, SumLabelling, sum_label

logger = logging.getLogger(__name__)


class OracleError(ValueError):
    """参数超出暴力搜索的规模限制或不可行"""


@dataclass(frozen=True)
class SumNumberResult:
    """sigma 为 None 表示在给定范围内没有找到"""
    sigma: Optional[int]
    witness: Optional[SumLabelling]

    @property
    def exhausted(self) -> bool:
        return self.sigma is None


def brute_force_decode(labels: Sequence[int]) -> Graph:
    """O(n³) 三重循环解码，顶点按标签排序编号"""
    if len(set(labels)) != len(labels):
        raise OracleError("标签存在重复")
    if not labels:
        raise OracleError("标签为空")
    ordered = sorted(labels)
    edges = set()
    for i, j in itertools.combinations(range(len(ordered)), 2):
        for k in range(len(ordered)):
            if ordered[i] + ordered[j] == ordered[k]:
                edges.add((i + 1, j + 1))
    return Graph(len(ordered), frozenset(edges))


def _leaf_witness(g: Graph, labels: Dict[int, int], max_label: int) -> Optional[Set[int]]:
    """顶点标签固定后，孤立点只能是那些不等于顶点标签的边和"""
    vertex_values = set(labels.values())
    isolates = {labels[u] + labels[w] for u, w in g.edges} - vertex_values
    if any(z > max_label for z in isolates):
        return None
    present = vertex_values | isolates
    for u, w in itertools.combinations(g.vertices(), 2):
        if not g.has_edge(u, w) and labels[u] + labels[w] in present:
            return None
    for z in isolates:
        for value in present:
            if value != z and z + value in present:
                return None
    return isolates


def _search(g: Graph, s: int, max_label: int) -> Optional[Tuple[Dict[int, int], Set[int]]]:
    vertices = list(g.vertices())
    labels: Dict[int, int] = {}

    def extend(index: int) -> Optional[Tuple[Dict[int, int], Set[int]]]:
        if index == len(vertices):
            isolates = _leaf_witness(g, labels, max_label)
            if isolates is not None and len(isolates) == s:
                return dict(labels), isolates
            return None
        v = vertices[index]
        used = set(labels.values())
        for x in range(1, max_label + 1):
            if x in used:
                continue
            feasible = True
            for u, label in labels.items():
                total = x + label
                if g.has_edge(u, v):
                    if total > max_label:
                        feasible = False
                        break
                elif total in used:
                    feasible = False
                    break
            if not feasible:
                continue
            labels[v] = x
            assigned = set(labels.values())
            sums = {labels[a] + labels[b] for a, b in g.edges if a in labels and b in labels} - assigned
            remaining = len(vertices) - index - 1
            # 剩余顶点最多能"吸收"remaining 个边和
            if len(sums) - remaining <= s:
                found = extend(index + 1)
                if found is not None:
                    return found
            del labels[v]
        return None

    return extend(0)


def brute_force_sum_number(g: Graph, max_isolates: int, max_label: int,
                           max_total_vertices: int = 10, max_label_limit: int = 64) -> SumNumberResult:
    """从小到大枚举孤立点个数 s，深度优先搜索顶点标签

    Args:
        g: 输入图
        max_isolates: s 的上限
        max_label: 所有标签（含孤立点）的上限 L
        max_total_vertices: n + s 的规模限制
        max_label_limit: L 的规模限制

    Returns:
        SumNumberResult，找到时附带一个合法标注
    """
    if g.n + max_isolates > max_total_vertices:
        raise OracleError(f"n + s_max = {g.n + max_isolates} 超过限制 {max_total_vertices}")
    if max_label > max_label_limit:
        raise OracleError(f"L = {max_label} 超过限制 {max_label_limit}")
    if max_isolates < 0 or max_label < 1:
        raise OracleError("s_max 必须 ≥ 0 且 L 必须 ≥ 1")

    # 有边的图至少需要一个孤立点
    start = 1 if g.m else 0
    for s in range(start, max_isolates + 1):
        found = _search(g, s, max_label)
        if found is not None:
            labels, isolates = found
            witness = SumLabelling(vertex_labels=labels, isolate_labels=tuple(sorted(isolates)), base_graph=g)
            logger.info(f"暴力搜索完成: σ = {s}")
            return SumNumberResult(sigma=s, witness=witness)
        logger.debug(f"s = {s} 无解")
    logger.info(f"在 s ≤ {max_isolates}, L ≤ {max_label} 范围内没有找到和标注")
    return SumNumberResult(sigma=None, witness=None)


def best_ordering_labelling(g: Graph, max_vertices: int = 8) -> Tuple[SumLabelling, VertexOrdering]:
    """枚举所有顶点排序，返回孤立点最少的增量标注（取字典序最小的排序）"""
    if g.n > max_vertices:
        raise OracleError(f"n = {g.n} 超过排序枚举限制 {max_vertices}")
    best: Optional[Tuple[SumLabelling, VertexOrdering]] = None
    for order in itertools.permutations(g.vertices()):
        ordering = VertexOrdering(order)
        try:
            labelling = sum_label(g, ordering)
        except LabellingError as e:
            raise OracleError(f"排序 {order} 标注失败: {e}")
        if best is None or labelling.isolate_count < best[0].isolate_count:
            best = (labelling, ordering)
    return best


def random_graph(n: int, m: int, seed: int, min_degree: int = 1) -> Graph:
    """给定种子的随机图；min_degree=1 时先用随机配对覆盖所有顶点"""
    rng = random.Random(seed)
    max_edges = n * (n - 1) // 2
    if n < 1 or m < 0 or m > max_edges:
        raise OracleError(f"不可行的参数: n={n}, m={m}")
    edges: Set[Edge] = set()
    if min_degree >= 1:
        if n < 2 or m < (n + 1) // 2:
            raise OracleError(f"最小度为1需要 n ≥ 2 且 m ≥ {(n + 1) // 2}，当前 n={n}, m={m}")
        order = list(range(1, n + 1))
        rng.shuffle(order)
        for k in range(0, n - 1, 2):
            edges.add(normalize_edge(order[k], order[k + 1]))
        if n % 2:
            edges.add(normalize_edge(order[-1], rng.choice(order[:-1])))
    candidates = [e for e in itertools.combinations(range(1, n + 1), 2) if e not in edges]
    edges.update(rng.sample(candidates, m - len(edges)))
    return Graph(n, frozenset(edges))


def random_degenerate_graph(n: int, d: int, seed: int) -> Graph:
    """每个顶点 i ≥ 2 随机连到 1..min(d, i−1) 个之前的顶点"""
    if n < 1 or d < 1:
        raise OracleError(f"不可行的参数: n={n}, d={d}")
    rng = random.Random(seed)
    edges: Set[Edge] = set()
    for i in range(2, n + 1):
        k = rng.randint(1, min(d, i - 1))
        for u in rng.sample(range(1, i), k):
            edges.add((u, i))
    return Graph(n, frozenset(edges))


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices())
    graph.add_edges_from(g.edges)
    return graph


def networkx_degeneracy(g: Graph) -> int:
    """networkx 核数的最大值"""
    cores = nx.core_number(to_networkx(g))
    return max(cores.values(), default=0)


def isomorphic(g1: Graph, g2: Graph) -> bool:
    return nx.is_isomorphic(to_networkx(g1), to_networkx(g2))
