# -*- coding: utf-8 -*-
# -------------------------------
# 文件名   :   metrics.py
# -------------------------------
# 说明 :   标签存储位数统计与各类上界检查
# -------------------------------

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterable, Optional, Union

from codec import SumEncoding, encode, serialize_gamma
from labeller import SumLabelling, is_exclusive
from utils import ceil_log2, format_table

logger = logging.getLogger(__name__)

LabelSource = Union[SumLabelling, SumEncoding, Iterable[int]]


class MetricsError(ValueError):
    """统计参数不满足前置条件"""


@dataclass(frozen=True)
class BoundCheck:
    bound: float
    value: int
    holds: bool


@dataclass(frozen=True)
class RangeReport:
    range: int
    min_label: int
    max_label: int
    range_exceeds_min: bool
    double_range_exceeds_max: bool


@dataclass(frozen=True)
class StorageReport:
    total_vertices: int
    storage_bits: int
    storage_max_bits: int
    range: int
    min_label: int
    max_label: int
    isolate_count: int
    exclusive: bool
    gamma_bits: int
    stirling_bits: int
    range_storage_bits: int
    bound_checks: Dict[str, BoundCheck] = field(default_factory=dict)
    baselines: Dict[str, int] = field(default_factory=dict)


def _labels_of(source: LabelSource) -> list:
    if isinstance(source, SumLabelling):
        return source.all_labels()
    if isinstance(source, SumEncoding):
        return list(source.labels)
    return list(source)


def _check_positive(labels: list) -> None:
    if any(label < 1 for label in labels):
        raise MetricsError("标签必须为正整数")


def storage_bits(source: LabelSource) -> int:
    """Σ⌈log2 λ⌉，孤立点也计入，⌈log2 1⌉ 记为 0"""
    labels = _labels_of(source)
    _check_positive(labels)
    return sum(ceil_log2(label) for label in labels)


def storage_max_bits(source: LabelSource) -> int:
    labels = _labels_of(source)
    if not labels:
        return 0
    _check_positive(labels)
    return len(labels) * ceil_log2(max(labels))


def range_storage_bits(source: LabelSource) -> int:
    """|V|·⌈log2 range⌉ + ⌈log2 min⌉：只存最小值和相对偏移"""
    labels = _labels_of(source)
    if not labels:
        return 0
    _check_positive(labels)
    spread = max(labels) - min(labels)
    return len(labels) * ceil_log2(max(spread, 1)) + ceil_log2(min(labels))


def range_report(labelling: SumLabelling) -> RangeReport:
    if labelling.base_graph.m == 0:
        raise MetricsError("范围检查需要至少一条边")
    labels = labelling.all_labels()
    low, high = min(labels), max(labels)
    spread = high - low
    return RangeReport(
        range=spread, min_label=low, max_label=high,
        range_exceeds_min=spread > low,
        double_range_exceeds_max=2 * spread > high,
    )


def bound_report(labelling: SumLabelling, n: int, m: int, d: Optional[int] = None) -> Dict[str, BoundCheck]:
    """增量标注输出的标签上界与存储上界

    Args:
        labelling: 增量标注的输出
        n: 顶点数
        m: 边数
        d: 使用退化序时的退化度，None 表示任意排序

    Returns:
        检查名 -> BoundCheck
    """
    vertex_max = max(labelling.vertex_labels.values(), default=0)
    label_max = labelling.max_label()
    checks = {
        'vertex_label_cubic': BoundCheck(4 * n ** 3, vertex_max, vertex_max <= 4 * n ** 3),
        'label_cubic': BoundCheck(8 * n ** 3, label_max, label_max <= 8 * n ** 3),
    }
    if d is not None and d >= 1:
        checks['vertex_label_degenerate'] = BoundCheck(6 * d * n ** 2, vertex_max, vertex_max <= 6 * d * n ** 2)
        checks['label_degenerate'] = BoundCheck(12 * d * n ** 2, label_max, label_max <= 12 * d * n ** 2)
    if m >= 1:
        total = storage_max_bits(labelling)
        general = 9 * m * (math.log2(n) + 1)
        checks['storage_max_general'] = BoundCheck(general, total, total <= general)
        if d is not None and d >= 1:
            degenerate = 3 * m * (2 * math.log2(n) + math.log2(12 * d))
            checks['storage_max_degenerate'] = BoundCheck(degenerate, total, total <= degenerate)
    return checks


def stirling_lower_bound(total_vertices: int) -> int:
    """⌈log2 N!⌉，精确整数计算"""
    if total_vertices < 1:
        raise MetricsError(f"N 必须 ≥ 1，当前为 {total_vertices}")
    return (math.factorial(total_vertices) - 1).bit_length()


def compressed_incidence_cost(n: int, m: int) -> int:
    if n < 2 or m < 1:
        raise MetricsError(f"压缩关联矩阵开销需要 n ≥ 2 且 m ≥ 1，当前 n={n}, m={m}")
    return (n + 2 * m + 2) * ceil_log2(n) + 2 * ceil_log2(m) + 2


def incidence_matrix_bits(n: int, m: int) -> int:
    """未压缩的 (n+m) 列、每列 n+2 位"""
    return (n + m) * (n + 2)


def baseline_costs(n: int, m: int) -> Dict[str, int]:
    width = ceil_log2(n) if n >= 1 else 0
    return {
        'adjacency_matrix_bits': n * n,
        'adjacency_list_bits': 2 * m * width + n * width,
    }


def build_report(labelling: SumLabelling, d: Optional[int] = None) -> StorageReport:
    labels = labelling.all_labels()
    if not labels:
        raise MetricsError("标注为空")
    g = labelling.base_graph
    baselines = baseline_costs(g.n, g.m)
    baselines['incidence_matrix_bits'] = incidence_matrix_bits(g.n, g.m)
    if g.n >= 2 and g.m >= 1:
        baselines['compressed_incidence_bits'] = compressed_incidence_cost(g.n, g.m)
    low, high = min(labels), max(labels)
    report = StorageReport(
        total_vertices=len(labels),
        storage_bits=storage_bits(labels),
        storage_max_bits=storage_max_bits(labels),
        range=high - low,
        min_label=low,
        max_label=high,
        isolate_count=labelling.isolate_count,
        exclusive=is_exclusive(labelling),
        gamma_bits=8 * len(serialize_gamma(encode(labelling))),
        stirling_bits=stirling_lower_bound(len(labels)),
        range_storage_bits=range_storage_bits(labels),
        bound_checks=bound_report(labelling, g.n, g.m, d),
        baselines=baselines,
    )
    failed = [name for name, check in report.bound_checks.items() if not check.holds]
    if failed:
        logger.warning(f"上界检查未通过: {failed}")
    return report


def report_to_dict(report: StorageReport) -> Dict[str, Any]:
    return asdict(report)


def format_report(report: StorageReport) -> str:
    rows = [
        ('total_vertices', report.total_vertices),
        ('isolates', report.isolate_count),
        ('exclusive', 'yes' if report.exclusive else 'no'),
        ('min_label', report.min_label),
        ('max_label', report.max_label),
        ('range', report.range),
        ('storage_bits', report.storage_bits),
        ('storage_max_bits', report.storage_max_bits),
        ('range_storage_bits', report.range_storage_bits),
        ('gamma_bits', report.gamma_bits),
        ('stirling_bits', report.stirling_bits),
    ]
    rows.extend(report.baselines.items())
    text = format_table(('metric', 'value'), rows)
    check_rows = [(name, f"{check.bound:g}", check.value, 'yes' if check.holds else 'no')
                  for name, check in report.bound_checks.items()]
    return text + "\n" + format_table(('bound', 'limit', 'value', 'holds'), check_rows)
