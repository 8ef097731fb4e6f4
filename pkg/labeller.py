# -*- coding: utf-8 -*-
# -------------------------------
# 文件名   :   labeller.py
# -------------------------------
# 说明 :   增量和图标注（模4互斥结构）、合法性检查、动态删除、互斥提升
# -------------------------------

import bisect
import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from config_loader import ConfigLoader
from graph_core import Edge, Graph, VertexOrdering, normalize_edge

logger = logging.getLogger(__name__)

# 内部对象引用: ('v', 顶点编号) 或 ('i', 孤立点序号，从1开始)
Ref = Tuple[str, int]


class LabellingError(ValueError):
    """标注构造失败或标注不满足前置条件"""


def _ref_name(ref: Ref) -> str:
    kind, index = ref
    return f"v{index}" if kind == 'v' else f"iso{index}"


@dataclass(frozen=True)
class Violation:
    """一处违规

    kind:
        pair    两个对象标签相同（构造期间两个孤立点相同不算）
        triple  两个非邻接对象的标签之和等于某个已有标签
        missing 底图中的一条边，其标签之和不存在
    """
    kind: str
    labels: Tuple[int, ...]
    vertices: Tuple[str, ...]

    def describe(self) -> str:
        return f"{self.kind} {' '.join(str(label) for label in self.labels)}"


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    violations: Tuple[Violation, ...] = ()


@dataclass(frozen=True)
class SumLabelling:
    """底图 G 加若干孤立点的和标注

    vertex_labels 只包含 G 中仍然存在的顶点；isolate_labels 为孤立点标签。
    unique_isolates 模式下 edge_witnesses 记录每条边对应的孤立点标签。
    """
    vertex_labels: Mapping[int, int]
    isolate_labels: Tuple[int, ...]
    base_graph: Graph
    unique_isolates: bool = False
    edge_witnesses: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'vertex_labels', MappingProxyType(dict(self.vertex_labels)))
        object.__setattr__(self, 'isolate_labels', tuple(self.isolate_labels))
        object.__setattr__(self, 'edge_witnesses', MappingProxyType(dict(self.edge_witnesses)))

    @property
    def isolate_count(self) -> int:
        return len(self.isolate_labels)

    def all_labels(self) -> List[int]:
        return list(self.vertex_labels.values()) + list(self.isolate_labels)

    def max_label(self) -> int:
        labels = self.all_labels()
        return max(labels) if labels else 0


@dataclass(frozen=True)
class StepRecord:
    """单步记录，increment_bound 为 i³ − i²"""
    vertex: int
    i: int
    t_raw: int
    new_isolates: Tuple[int, ...]
    increments: int
    label: int
    increment_bound: int


@dataclass
class LabellerState:
    """已处理前缀上的标注状态

    extend 会原地修改并返回同一个对象，调用方需保证独占访问。
    isolate_labels 在构造期间允许重复，finalize 时去重。
    """
    cap_factor: int = 4
    unique_isolates: bool = False
    vertex_labels: Dict[int, int] = field(default_factory=dict)
    isolate_labels: List[int] = field(default_factory=list)
    isolate_edges: List[Edge] = field(default_factory=list)
    owners: Dict[int, List[Ref]] = field(default_factory=dict)
    sorted_labels: List[int] = field(default_factory=list)
    edges: Set[Edge] = field(default_factory=set)
    processed: List[int] = field(default_factory=list)
    t: int = 0
    increment_count: int = 0
    budget: int = 0
    steps: List[StepRecord] = field(default_factory=list)

    def _add_label(self, label: int, ref: Ref) -> None:
        refs = self.owners.get(label)
        if refs is None:
            self.owners[label] = [ref]
            bisect.insort(self.sorted_labels, label)
        else:
            refs.append(ref)

    def is_edge(self, p: Ref, q: Ref) -> bool:
        if p[0] != 'v' or q[0] != 'v':
            return False
        return normalize_edge(p[1], q[1]) in self.edges


def start_state(cap_factor: int = 4, unique_isolates: bool = False) -> LabellerState:
    if cap_factor < 1:
        raise LabellingError(f"cap_factor 必须为正数，当前为 {cap_factor}")
    return LabellerState(cap_factor=cap_factor, unique_isolates=unique_isolates)


def _step_violation(state: LabellerState, vertex: int, x: int,
                    neighbours: Sequence[int], new_isolates: Sequence[int]) -> Optional[Violation]:
    """检查加入候选标签 x 及新孤立点后的第一个违规

    旧状态本身合法，只需检查至少涉及一个新对象的重复与三元组。
    """
    owners = state.owners
    new_vertex: Ref = ('v', vertex)
    base_index = len(state.isolate_labels)
    new_refs: List[Tuple[Ref, int]] = [(new_vertex, x)]
    new_refs.extend((('i', base_index + k + 1), z) for k, z in enumerate(new_isolates))
    new_owner: Dict[int, Ref] = {}
    for ref, label in new_refs:
        new_owner.setdefault(label, ref)

    # 重复标签
    if x in owners:
        return Violation('pair', (x, x), (_ref_name(new_vertex), _ref_name(owners[x][0])))
    for ref, z in new_refs[1:]:
        for other in owners.get(z, ()):
            if state.unique_isolates or other[0] == 'v':
                return Violation('pair', (z, z), (_ref_name(ref), _ref_name(other)))

    max_label = max(state.sorted_labels[-1] if state.sorted_labels else 0, x,
                    max(new_isolates, default=0))
    neighbour_set = set(neighbours)

    def sum_owner(total: int) -> Optional[Ref]:
        if total in owners:
            return owners[total][0]
        return new_owner.get(total)

    def adjacent_to_new(p: Ref, q: Ref) -> bool:
        if p == new_vertex:
            return q[0] == 'v' and q[1] in neighbour_set
        if q == new_vertex:
            return p[0] == 'v' and p[1] in neighbour_set
        return False

    # 新对象作为加数
    for index, (p, a) in enumerate(new_refs):
        for b in state.sorted_labels:
            total = a + b
            if total > max_label:
                break
            y = sum_owner(total)
            if y is None:
                continue
            for q in owners[b]:
                if not adjacent_to_new(p, q):
                    return Violation('triple', (min(a, b), max(a, b), total),
                                     (_ref_name(p), _ref_name(q), _ref_name(y)))
        for q, b in new_refs[index + 1:]:
            y = sum_owner(a + b)
            if y is not None and not adjacent_to_new(p, q):
                return Violation('triple', (min(a, b), max(a, b), a + b),
                                 (_ref_name(p), _ref_name(q), _ref_name(y)))

    # 新对象作为和，两个加数都是旧对象
    for y, total in new_refs:
        for a in state.sorted_labels:
            b = total - a
            if b < a:
                break
            if b not in owners:
                continue
            for p in owners[a]:
                for q in owners[b]:
                    if p != q and not state.is_edge(p, q):
                        return Violation('triple', (a, b, total),
                                         (_ref_name(p), _ref_name(q), _ref_name(y)))
    return None


def extend(state: LabellerState, vertex: int, neighbours: Iterable[int]) -> LabellerState:
    """加入一个新顶点及其与已处理顶点之间的边

    第一个顶点标为 1；之后的候选标签从 5 开始，每次 +4，直到
    新顶点和新孤立点 λ(v)+λ(u) 不产生任何违规。

    Args:
        state: 当前状态，会被原地修改
        vertex: 新顶点编号
        neighbours: 新顶点在已处理顶点中的邻居

    Returns:
        同一个 state 对象

    Raises:
        LabellingError: 顶点重复、邻居未处理，或 +4 次数超过 cap_factor·i³
    """
    if vertex < 1:
        raise LabellingError(f"顶点编号必须 ≥ 1，当前为 {vertex}")
    if vertex in state.vertex_labels:
        raise LabellingError(f"顶点 {vertex} 已经处理过")
    nbrs = sorted(set(neighbours))
    for u in nbrs:
        if u not in state.vertex_labels:
            raise LabellingError(f"邻居 {u} 尚未处理，不能连接到顶点 {vertex}")

    i = len(state.processed)
    nbr_labels = [state.vertex_labels[u] for u in nbrs]
    x = 1 if i == 0 else 5
    state.t = len(nbrs)
    state.increment_count = 0
    state.budget = state.cap_factor * i ** 3
    seen_triples: Set[Tuple[str, ...]] = set()

    while True:
        new_isolates = [x + label for label in nbr_labels]
        violation = _step_violation(state, vertex, x, nbrs, new_isolates)
        if violation is None:
            break
        if violation.kind == 'triple':
            # 同一组对象的三元组不会再次出现；标签相同但对象不同的可以
            if violation.vertices in seen_triples:
                raise LabellingError(f"顶点 {vertex} 的违规三元组 {violation.vertices} 再次出现")
            seen_triples.add(violation.vertices)
        state.increment_count += 1
        if state.increment_count > state.budget:
            raise LabellingError(
                f"顶点 {vertex} 的 +4 次数超过上限 {state.budget}（第 {i + 1} 步）")
        x += 4

    state.vertex_labels[vertex] = x
    state._add_label(x, ('v', vertex))
    for u, z in zip(nbrs, new_isolates):
        state.isolate_labels.append(z)
        edge = normalize_edge(u, vertex)
        state.isolate_edges.append(edge)
        state.edges.add(edge)
        state._add_label(z, ('i', len(state.isolate_labels)))
    state.processed.append(vertex)
    state.steps.append(StepRecord(
        vertex=vertex, i=i, t_raw=state.t, new_isolates=tuple(new_isolates),
        increments=state.increment_count, label=x,
        increment_bound=i ** 3 - i ** 2))
    logger.debug(f"顶点 {vertex}: 标签 {x}, 新孤立点 {new_isolates}, +4 次数 {state.increment_count}")
    return state


def finalize(state: LabellerState, n: Optional[int] = None, verify: bool = True) -> SumLabelling:
    """结束构造：孤立点去重排序，并做完整检查"""
    if not state.processed:
        raise LabellingError("没有处理任何顶点")
    n = n if n is not None else max(state.processed)
    out_of_range = [v for v in state.processed if v > n]
    if out_of_range:
        raise LabellingError(f"顶点 {out_of_range} 超出 1..{n}")

    witnesses: Dict[Edge, int] = {}
    if state.unique_isolates:
        witnesses = {edge: label for label, edge in zip(state.isolate_labels, state.isolate_edges)}
    labelling = SumLabelling(
        vertex_labels=state.vertex_labels,
        isolate_labels=tuple(sorted(set(state.isolate_labels))),
        base_graph=Graph(n, frozenset(state.edges)),
        unique_isolates=state.unique_isolates,
        edge_witnesses=witnesses,
    )
    if verify:
        report = check_valid(labelling)
        if not report.ok:
            raise LabellingError(f"最终标注不合法: {report.violations[0].describe()}")
    return labelling


def sum_label(g: Graph, ordering: Optional[VertexOrdering] = None, unique_isolates: bool = False,
              cap_factor: int = 4, verify: bool = True) -> SumLabelling:
    """按给定顶点排序运行增量标注（默认恒等排序）"""
    labelling, _ = sum_label_with_steps(g, ordering, unique_isolates, cap_factor, verify)
    return labelling


def sum_label_with_steps(g: Graph, ordering: Optional[VertexOrdering] = None, unique_isolates: bool = False,
                         cap_factor: int = 4, verify: bool = True) -> Tuple[SumLabelling, List[StepRecord]]:
    ordering = ordering or VertexOrdering.identity(g.n)
    ordering.validate(g.n)
    state = start_state(cap_factor, unique_isolates)
    for v in ordering:
        earlier = [u for u in g.neighbours(v) if u in state.vertex_labels]
        extend(state, v, earlier)
    return finalize(state, g.n, verify), state.steps


def _objects(labelling: SumLabelling) -> List[Tuple[Ref, int]]:
    objects: List[Tuple[Ref, int]] = [(('v', v), label) for v, label in sorted(labelling.vertex_labels.items())]
    objects.extend((('i', k + 1), label) for k, label in enumerate(labelling.isolate_labels))
    return objects


def find_violations(labelling: SumLabelling, during_construction: bool = False) -> List[Violation]:
    """穷举所有重复标签、违规三元组和缺失的边

    Args:
        labelling: 待检查的标注
        during_construction: 为 True 时两个孤立点标签相同不算违规

    Returns:
        违规列表，为空当且仅当标注合法
    """
    graph = labelling.base_graph
    owners: Dict[int, List[Ref]] = {}
    for ref, label in _objects(labelling):
        owners.setdefault(label, []).append(ref)

    def is_edge(p: Ref, q: Ref) -> bool:
        return p[0] == 'v' and q[0] == 'v' and graph.has_edge(p[1], q[1])

    violations: List[Violation] = []
    for label, refs in sorted(owners.items()):
        for a in range(len(refs)):
            for b in range(a + 1, len(refs)):
                p, q = refs[a], refs[b]
                if during_construction and p[0] == 'i' and q[0] == 'i':
                    continue
                violations.append(Violation('pair', (label, label), (_ref_name(p), _ref_name(q))))

    labels = sorted(owners)
    max_label = labels[-1] if labels else 0
    for index, a in enumerate(labels):
        for b in labels[index:]:
            total = a + b
            if total > max_label:
                break
            if total not in owners:
                continue
            y = owners[total][0]
            summands = owners[a]
            for pi, p in enumerate(summands):
                partners = owners[b][pi + 1:] if a == b else owners[b]
                for q in partners:
                    if not is_edge(p, q):
                        violations.append(Violation('triple', (a, b, total),
                                                    (_ref_name(p), _ref_name(q), _ref_name(y))))

    for u, w in graph.sorted_edges():
        if u not in labelling.vertex_labels or w not in labelling.vertex_labels:
            continue
        total = labelling.vertex_labels[u] + labelling.vertex_labels[w]
        if total not in owners:
            violations.append(Violation('missing', (labelling.vertex_labels[u], labelling.vertex_labels[w], total),
                                        (f"v{u}", f"v{w}")))
    return violations


def check_valid(labelling: SumLabelling, during_construction: bool = False) -> ValidityReport:
    violations = find_violations(labelling, during_construction)
    return ValidityReport(ok=not violations, violations=tuple(violations))


def is_exclusive(labelling: SumLabelling) -> bool:
    """每条边的标签和都落在孤立点上"""
    isolates = set(labelling.isolate_labels)
    for u, w in labelling.base_graph.edges:
        if labelling.vertex_labels[u] + labelling.vertex_labels[w] not in isolates:
            return False
    return True


def _require_unique(labelling: SumLabelling) -> None:
    if not labelling.unique_isolates:
        raise LabellingError("动态删除需要 unique_isolates 模式生成的标注")


def _checked(labelling: SumLabelling) -> SumLabelling:
    report = check_valid(labelling)
    if not report.ok:
        raise LabellingError(f"删除后标注不合法: {report.violations[0].describe()}")
    return labelling


def delete_edge(labelling: SumLabelling, edge: Edge) -> SumLabelling:
    """删除一条边，同时删除见证它的孤立点，顶点标签不变"""
    _require_unique(labelling)
    key = normalize_edge(*edge)
    if not labelling.base_graph.has_edge(*key) or key not in labelling.edge_witnesses:
        raise LabellingError(f"边 {key[0]} {key[1]} 不存在")
    witness = labelling.edge_witnesses[key]
    witnesses = {e: label for e, label in labelling.edge_witnesses.items() if e != key}
    logger.info(f"删除边 {key}，移除孤立点 {witness}")
    return _checked(SumLabelling(
        vertex_labels=labelling.vertex_labels,
        isolate_labels=tuple(label for label in labelling.isolate_labels if label != witness),
        base_graph=labelling.base_graph.without_edges([key]),
        unique_isolates=True,
        edge_witnesses=witnesses,
    ))


def delete_vertex(labelling: SumLabelling, v: int) -> SumLabelling:
    """删除一个顶点及其所有关联边的孤立点"""
    _require_unique(labelling)
    if v not in labelling.vertex_labels:
        raise LabellingError(f"顶点 {v} 不存在")
    incident = [e for e in labelling.base_graph.edges if v in e]
    removed = {labelling.edge_witnesses[e] for e in incident if e in labelling.edge_witnesses}
    logger.info(f"删除顶点 {v}，移除 {len(incident)} 条边和 {len(removed)} 个孤立点")
    return _checked(SumLabelling(
        vertex_labels={u: label for u, label in labelling.vertex_labels.items() if u != v},
        isolate_labels=tuple(label for label in labelling.isolate_labels if label not in removed),
        base_graph=labelling.base_graph.without_edges(incident),
        unique_isolates=True,
        edge_witnesses={e: label for e, label in labelling.edge_witnesses.items() if v not in e},
    ))


def exclusive_lift(vertex_labels: Mapping[int, int], extra_labels: Sequence[int], graph: Graph) -> SumLabelling:
    """把和标注或超和标注提升为互斥标注

    G 的顶点取 4λ+1，额外顶点取 4λ+2。若某条边的和只由 G 中的
    顶点见证，再补一个孤立点 4(λu+λw)+2。

    Raises:
        LabellingError: 输入标签不唯一，或在 G 上解码出的图不等于 G
    """
    if set(vertex_labels) != set(graph.vertices()):
        raise LabellingError(f"顶点标签必须覆盖 1..{graph.n}")
    all_labels = list(vertex_labels.values()) + list(extra_labels)
    if len(set(all_labels)) != len(all_labels):
        raise LabellingError("输入标签存在重复")
    if min(all_labels) < 1:
        raise LabellingError("标签必须为正整数")
    present = set(all_labels)
    extras = set(extra_labels)

    promoted: Set[int] = set()
    vertices = sorted(vertex_labels)
    for index, u in enumerate(vertices):
        for w in vertices[index + 1:]:
            total = vertex_labels[u] + vertex_labels[w]
            if (total in present) != graph.has_edge(u, w):
                raise LabellingError(f"输入标注在顶点 {u},{w} 上与图不一致")
            if graph.has_edge(u, w) and total not in extras:
                promoted.add(4 * total + 2)

    isolates = sorted({4 * label + 2 for label in extra_labels} | promoted)
    lifted = SumLabelling(
        vertex_labels={v: 4 * label + 1 for v, label in vertex_labels.items()},
        isolate_labels=tuple(isolates),
        base_graph=graph,
    )
    if promoted:
        logger.info(f"互斥提升补充了 {len(promoted)} 个孤立点")
    return lifted


class SumLabeller:
    """按配置运行增量标注"""

    def __init__(self, config_loader: ConfigLoader):
        self.config_loader = config_loader
        config = config_loader.get_labeller_config()
        self.cap_factor = config['increment_cap_factor']
        self.verify_on_finalize = config['verify_on_finalize']
        self.unique_isolates = config['unique_isolates']

    def label(self, g: Graph, ordering: Optional[VertexOrdering] = None,
              unique_isolates: Optional[bool] = None) -> SumLabelling:
        unique = self.unique_isolates if unique_isolates is None else unique_isolates
        labelling, steps = sum_label_with_steps(g, ordering, unique, self.cap_factor, self.verify_on_finalize)
        total_increments = sum(step.increments for step in steps)
        logger.info(f"标注完成: n={g.n}, m={g.m}, 孤立点 {labelling.isolate_count}, "
                    f"最大标签 {labelling.max_label()}, +4 总次数 {total_increments}")
        return labelling

    def verify(self, labelling: SumLabelling, during_construction: bool = False) -> ValidityReport:
        report = check_valid(labelling, during_construction)
        if report.ok:
            logger.info("标注合法")
        else:
            logger.warning(f"标注不合法，共 {len(report.violations)} 处违规")
        return report
