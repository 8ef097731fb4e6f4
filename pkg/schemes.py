# -*- coding: utf-8 -*-
# -------------------------------
# 文件名   :   schemes.py
# -------------------------------
# 说明 :   匹配图、完全图、路径与关联矩阵的显式标注方案
# -------------------------------

import logging
from typing import Dict, List, Tuple

from graph_core import (Graph, GraphFormatError, VertexOrdering, complete_graph_of,
                        matching_graph)
from labeller import SumLabelling

logger = logging.getLogger(__name__)


class SchemeError(ValueError):
    """方案参数不满足前置条件"""


SCHEME_NAMES = ('matching-exp', 'matching-lin', 'matching-block', 'complete', 'incidence')


def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise SchemeError(f"匹配图需要正偶数个顶点，当前为 {n}")


def _matching_labelling(labels: List[int], isolates: List[int]) -> SumLabelling:
    n = len(labels)
    return SumLabelling(
        vertex_labels={index + 1: label for index, label in enumerate(labels)},
        isolate_labels=tuple(isolates),
        base_graph=matching_graph(n),
    )


def matching_exponential_labels(n: int) -> List[int]:
    """递推：λ(1)=2, λ(2)=3；奇数位为前两项之和，偶数位为前一项加一"""
    labels = [2, 3]
    while len(labels) < n:
        if len(labels) % 2 == 0:
            labels.append(labels[-2] + labels[-1])
        else:
            labels.append(labels[-1] + 1)
    return labels[:n]


def matching_exponential(n: int) -> SumLabelling:
    _require_even(n)
    labels = matching_exponential_labels(n)
    return _matching_labelling(labels, [labels[-2] + labels[-1]])


def matching_closed_form(k: int) -> int:
    if k < 1:
        raise SchemeError(f"位置必须 ≥ 1，当前为 {k}")
    j, odd = divmod(k, 2)
    if odd:
        return 3 * 2 ** j - 1
    return 3 * 2 ** (j - 1)


def matching_linear(n: int) -> SumLabelling:
    """每一对的标签和都是 3n−1，只需一个孤立点"""
    _require_even(n)
    labels = []
    for i in range(n // 2):
        labels.extend([n + i, 2 * n - 1 - i])
    return _matching_labelling(labels, [3 * n - 1])


def matching_block_union_pairs(d: int) -> List[Tuple[int, int]]:
    """M_(2^(d+1)) 第 j 对的两个标签，j = 1..2^d"""
    if d < 0:
        raise SchemeError(f"d 必须 ≥ 0，当前为 {d}")
    size = 2 ** d
    shift = 2 ** (4 + d)
    return [(1 + 8 * (j - 1) + shift * (size - j),
             2 + 8 * (size - j) + shift * (j - 1))
            for j in range(1, size + 1)]


def matching_block_union(d: int) -> SumLabelling:
    pairs = matching_block_union_pairs(d)
    labels = [label for pair in pairs for label in pair]
    return _matching_labelling(labels, [sum(pairs[0])])


def complete_graph_labelling(n: int) -> SumLabelling:
    """顶点 i 取 4i−3，孤立点为 4j+2 (j = 1..2n−3)"""
    if n < 4:
        raise SchemeError(f"完全图方案需要 n ≥ 4，当前为 {n}")
    return SumLabelling(
        vertex_labels={i: 4 * i - 3 for i in range(1, n + 1)},
        isolate_labels=tuple(4 * j + 2 for j in range(1, 2 * n - 2)),
        base_graph=complete_graph_of(n),
    )


def path_optimal_ordering(n: int) -> VertexOrdering:
    """先取所有奇数编号顶点递增，再取偶数编号顶点递减

    奇数 n: 1,3,…,n,n−1,…,2；偶数 n: 1,3,…,n−1,n,n−2,…,2。
    """
    if n < 3:
        raise SchemeError(f"路径排序需要 n ≥ 3，当前为 {n}")
    odds = list(range(1, n + 1, 2))
    evens = list(range(2, n + 1, 2))
    return VertexOrdering(tuple(odds + evens[::-1]))


def expected_path_isolates(n: int) -> Tuple[int, int]:
    """按路径最优排序运行增量标注得到的两个孤立点"""
    if n < 3:
        raise SchemeError(f"路径排序需要 n ≥ 3，当前为 {n}")
    return 4 * n - 2, 4 * n + 2


def incidence_scheme(g: Graph) -> SumLabelling:
    """关联矩阵方案：标签为 n+2 位，第 1 行对应最高位

    顶点 i 为 2^n + 2^(n−i)，边 {u,w} 的孤立点为 2^(n+1) + 2^(n−u) + 2^(n−w)。
    """
    isolated = [v for v in g.vertices() if g.degree(v) == 0]
    if isolated:
        raise SchemeError(f"关联矩阵方案不支持孤立顶点: {isolated}")
    n = g.n
    vertex_labels: Dict[int, int] = {i: 2 ** n + 2 ** (n - i) for i in g.vertices()}
    isolates = sorted(2 ** (n + 1) + 2 ** (n - u) + 2 ** (n - w) for u, w in g.edges)
    logger.debug(f"关联矩阵方案: n={n}, 孤立点 {len(isolates)} 个")
    return SumLabelling(vertex_labels=vertex_labels, isolate_labels=tuple(isolates), base_graph=g)


def build_scheme(name: str, n: int = 0, d: int = 0, graph: Graph = None) -> SumLabelling:
    """按名称构造方案，供命令行使用"""
    try:
        if name == 'matching-exp':
            return matching_exponential(n)
        if name == 'matching-lin':
            return matching_linear(n)
        if name == 'matching-block':
            return matching_block_union(d)
        if name == 'complete':
            return complete_graph_labelling(n)
        if name == 'incidence':
            if graph is None:
                raise SchemeError("incidence 方案需要输入图")
            return incidence_scheme(graph)
    except GraphFormatError as e:
        raise SchemeError(str(e))
    raise SchemeError(f"未知方案: {name}，可选 {', '.join(SCHEME_NAMES)}")
