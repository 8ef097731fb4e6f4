# -*- coding: utf-8 -*-
# -------------------------------
# 文件名   :   labelling_store.py
# -------------------------------
# 说明 :   标注文件（文本 / JSON）、编码文件、排序文件的读写
# -------------------------------

import json
import logging
from typing import Any, Dict, List, Optional, Set, Tuple

from codec import CodecError, SumEncoding, encode
from graph_core import Edge, Graph, GraphFormatError, VertexOrdering, normalize_edge, parse_ordering
from labeller import LabellingError, SumLabelling
from utils import iter_content_lines, parse_int_tokens, read_text_file, write_text_file

logger = logging.getLogger(__name__)

SECTIONS = ('vertices', 'isolates', 'edges')
UNIQUE_MARKER = 'mode unique'


def _derive_base_graph(vertex_labels: Dict[int, int], isolates: List[int],
                       edges: Optional[Set[Edge]]) -> Graph:
    """edges 为 None 时，由顶点之间的标签和推导底图"""
    ids = sorted(vertex_labels)
    if edges is None:
        present = set(vertex_labels.values()) | set(isolates)
        edges = set()
        for index, u in enumerate(ids):
            for w in ids[index + 1:]:
                if vertex_labels[u] + vertex_labels[w] in present:
                    edges.add((u, w))
    n = max(ids + [v for edge in edges for v in edge], default=0)
    if n < 1:
        raise LabellingError("标注中没有任何顶点")
    try:
        return Graph(n, frozenset(edges))
    except GraphFormatError as e:
        raise LabellingError(f"edges 段不合法: {e}")


def _edge_witnesses(vertex_labels: Dict[int, int], isolates: List[int], graph: Graph) -> Dict[Edge, int]:
    isolate_set = set(isolates)
    witnesses = {}
    for u, w in graph.edges:
        total = vertex_labels[u] + vertex_labels[w]
        if total not in isolate_set:
            raise LabellingError(f"unique 模式下边 {u} {w} 的和 {total} 必须是孤立点")
        witnesses[(u, w)] = total
    if len(set(witnesses.values())) != len(witnesses):
        raise LabellingError("unique 模式下每条边必须有不同的孤立点")
    return witnesses


def build_labelling(vertex_labels: Dict[int, int], isolates: List[int],
                    edges: Optional[Set[Edge]] = None, unique_isolates: bool = False) -> SumLabelling:
    for v, label in vertex_labels.items():
        if v < 1 or label < 1:
            raise LabellingError(f"顶点编号和标签必须为正整数: {v} {label}")
    if any(label < 1 for label in isolates):
        raise LabellingError("孤立点标签必须为正整数")
    graph = _derive_base_graph(vertex_labels, isolates, edges)
    for u, w in graph.edges:
        if u not in vertex_labels or w not in vertex_labels:
            raise LabellingError(f"边 {u} {w} 的端点没有标签")
    witnesses = _edge_witnesses(vertex_labels, isolates, graph) if unique_isolates else {}
    return SumLabelling(vertex_labels=vertex_labels, isolate_labels=tuple(isolates), base_graph=graph,
                        unique_isolates=unique_isolates, edge_witnesses=witnesses)


def parse_labelling_text(text: str) -> SumLabelling:
    """解析分段文本格式

    vertices 段每行 "id label"，isolates 段每行一个标签，
    可选的 edges 段每行 "u w"；单独一行 "mode unique" 表示 unique 模式。
    """
    section = None
    vertex_labels: Dict[int, int] = {}
    isolates: List[int] = []
    edges: Optional[Set[Edge]] = None
    unique = False

    for line in iter_content_lines(text):
        lowered = line.lower()
        if lowered in SECTIONS:
            section = lowered
            if section == 'edges' and edges is None:
                edges = set()
            continue
        if lowered == UNIQUE_MARKER:
            unique = True
            continue
        try:
            values = [int(token) for token in line.split()]
        except ValueError:
            raise LabellingError(f"无法解析的行: '{line}'")
        if section == 'vertices' and len(values) == 2:
            v, label = values
            if v in vertex_labels:
                raise LabellingError(f"顶点 {v} 重复出现")
            vertex_labels[v] = label
        elif section == 'isolates' and len(values) == 1:
            isolates.append(values[0])
        elif section == 'edges' and len(values) == 2:
            edges.add(normalize_edge(*values))
        else:
            raise LabellingError(f"行 '{line}' 不属于任何段或字段数错误")
    return build_labelling(vertex_labels, isolates, edges, unique)


def format_labelling_text(labelling: SumLabelling, include_edges: bool = True) -> str:
    lines = []
    if labelling.unique_isolates:
        lines.append(UNIQUE_MARKER)
    lines.append('vertices')
    lines.extend(f"{v} {label}" for v, label in sorted(labelling.vertex_labels.items()))
    lines.append('isolates')
    lines.extend(str(label) for label in labelling.isolate_labels)
    if include_edges:
        lines.append('edges')
        lines.extend(f"{u} {w}" for u, w in labelling.base_graph.sorted_edges())
    return "\n".join(lines) + "\n"


def labelling_to_dict(labelling: SumLabelling) -> Dict[str, Any]:
    return {
        'vertices': [[v, label] for v, label in sorted(labelling.vertex_labels.items())],
        'isolates': list(labelling.isolate_labels),
        'edges': [list(edge) for edge in labelling.base_graph.sorted_edges()],
        'unique_isolates': labelling.unique_isolates,
    }


def labelling_from_dict(data: Dict[str, Any]) -> SumLabelling:
    try:
        vertex_labels = {}
        for v, label in data['vertices']:
            if int(v) in vertex_labels:
                raise LabellingError(f"顶点 {v} 重复出现")
            vertex_labels[int(v)] = int(label)
        isolates = [int(label) for label in data.get('isolates', [])]
        edges = None
        if data.get('edges') is not None:
            edges = {normalize_edge(int(u), int(w)) for u, w in data['edges']}
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, LabellingError):
            raise
        raise LabellingError(f"JSON 标注格式错误: {e}")
    return build_labelling(vertex_labels, isolates, edges, bool(data.get('unique_isolates', False)))


def parse_labelling(text: str) -> SumLabelling:
    """按内容自动识别 JSON 或分段文本"""
    if text.lstrip().startswith('{'):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise LabellingError(f"JSON 解析失败: {e}")
        return labelling_from_dict(data)
    return parse_labelling_text(text)


def format_labelling(labelling: SumLabelling, as_json: bool = False) -> str:
    if as_json:
        return json.dumps(labelling_to_dict(labelling), ensure_ascii=False, indent=2) + "\n"
    return format_labelling_text(labelling)


def read_labelling_file(path: str) -> SumLabelling:
    labelling = parse_labelling(read_text_file(path))
    logger.info(f"读取标注文件 {path}: {len(labelling.vertex_labels)} 个顶点, {labelling.isolate_count} 个孤立点")
    return labelling


def write_labelling_file(path: str, labelling: SumLabelling, as_json: bool = False) -> None:
    write_text_file(path, format_labelling(labelling, as_json))


def parse_encoding_text(text: str) -> SumEncoding:
    try:
        values = parse_int_tokens(text)
    except ValueError as e:
        raise CodecError(str(e))
    if not values:
        raise CodecError("编码文件为空")
    return SumEncoding(tuple(values))


def format_encoding_text(enc: SumEncoding) -> str:
    return " ".join(str(label) for label in enc.labels) + "\n"


def read_ordering_file(path: str, n: int) -> VertexOrdering:
    return parse_ordering(read_text_file(path), n)


def load_labelling_or_encoding(path: str) -> Tuple[Optional[SumLabelling], SumEncoding]:
    """标注文件返回 (标注, 编码)；纯编码文件返回 (None, 编码)"""
    text = read_text_file(path)
    stripped = text.lstrip()
    is_labelling = stripped.startswith('{') or any(
        line.lower() in SECTIONS or line.lower() == UNIQUE_MARKER for line in iter_content_lines(text))
    if is_labelling:
        labelling = parse_labelling(text)
        return labelling, encode(labelling)
    return None, parse_encoding_text(text)
