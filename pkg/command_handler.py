#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令处理器

处理命令行子命令：
- label: 对图运行增量标注
- verify: 检查标注是否合法
- decode / query: 从编码恢复图、查询邻接
- metrics: 存储位数与上界检查
- scheme: 输出显式构造的标注或排序
- serialize / deserialize: 二进制格式
- bench: 随机图基准测试
- oracle: 暴力求 σ
"""

import argparse
import json
import logging
import sys
from dataclasses import asdict
from typing import Any, Dict, Optional

from bench_runner import BenchRunner, format_bench
from codec import (adjacent_labels, decode, parse_gamma, parse_incidence, serialize_gamma,
                   serialize_incidence, unwrap_container, wrap_container)
from config_loader import ConfigLoader
from graph_core import (Graph, VertexOrdering, degeneracy_ordering, read_graph_file,
                        serialize_edge_list)
from labeller import SumLabeller, SumLabelling, is_exclusive
from labelling_store import (format_encoding_text, format_labelling, labelling_to_dict,
                             load_labelling_or_encoding, read_labelling_file, read_ordering_file,
                             write_labelling_file)
from metrics import build_report, format_report, report_to_dict
from oracle import brute_force_sum_number
from schemes import SchemeError, build_scheme, path_optimal_ordering
from utils import read_binary_file, write_binary_file, write_text_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1


class CommandHandler:
    def __init__(self, config_loader: ConfigLoader):
        """初始化命令处理器

        Args:
            config_loader: 配置加载器实例
        """
        self.config_loader = config_loader
        self.output_config = config_loader.get_output_config()
        self.oracle_config = config_loader.get_oracle_config()
        self.labeller = SumLabeller(config_loader)

    def handle(self, args: argparse.Namespace) -> int:
        """分发子命令，领域错误和文件错误统一返回退出码 1"""
        handler = getattr(self, f"handle_{args.command}")
        try:
            return handler(args)
        except (ValueError, OSError) as e:
            logger.error(f"命令 {args.command} 执行失败: {str(e)}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_ERROR

    def _use_json(self, args: argparse.Namespace) -> bool:
        return bool(getattr(args, 'json', False) or self.output_config['json'])

    @staticmethod
    def _print_json(data: Dict[str, Any]) -> None:
        print(json.dumps(data, ensure_ascii=False, indent=2))

    @staticmethod
    def _with_graph(labelling: SumLabelling, graph_path: Optional[str]) -> SumLabelling:
        """用指定图替换标注文件里的底图"""
        if not graph_path:
            return labelling
        g = read_graph_file(graph_path)
        if set(labelling.vertex_labels) != set(g.vertices()):
            raise ValueError(f"标注中的顶点与图的顶点 1..{g.n} 不一致")
        return SumLabelling(vertex_labels=labelling.vertex_labels, isolate_labels=labelling.isolate_labels,
                            base_graph=g, unique_isolates=False)

    def _resolve_ordering(self, spec: str, g: Graph):
        """解析 --order，返回 (排序, 退化度或 None)"""
        if spec == 'given':
            return VertexOrdering.identity(g.n), None
        if spec == 'degeneracy':
            result = degeneracy_ordering(g)
            return result.ordering, result.d
        if spec.startswith('file:'):
            return read_ordering_file(spec[len('file:'):], g.n), None
        raise ValueError(f"未知的排序方式: {spec}（可选 given、degeneracy、file:<path>）")

    def handle_label(self, args: argparse.Namespace) -> int:
        logger.info(f"=== label: {args.graph} ===")
        g = read_graph_file(args.graph)
        ordering, d = self._resolve_ordering(args.order, g)
        labelling = self.labeller.label(g, ordering, True if args.unique_isolates else None)
        report = build_report(labelling, d)

        if args.out:
            write_labelling_file(args.out, labelling, self._use_json(args))
        if self._use_json(args):
            data = {'isolates': labelling.isolate_count, 'd': d, 'report': report_to_dict(report)}
            if not args.out:
                data['labelling'] = labelling_to_dict(labelling)
            self._print_json(data)
            return EXIT_OK

        if not args.out:
            print(format_labelling(labelling), end='')
        print(f"isolates: {labelling.isolate_count}")
        if d is not None:
            print(f"d: {d}")
        print(format_report(report), end='')
        return EXIT_OK

    def handle_verify(self, args: argparse.Namespace) -> int:
        labelling = self._with_graph(read_labelling_file(args.labelling), args.graph)
        report = self.labeller.verify(labelling)
        exclusive = report.ok and is_exclusive(labelling)
        if self._use_json(args):
            self._print_json({
                'valid': report.ok,
                'exclusive': exclusive,
                'violations': [{'kind': v.kind, 'labels': list(v.labels), 'vertices': list(v.vertices)}
                               for v in report.violations],
            })
        else:
            print(f"valid: {'yes' if report.ok else 'no'}")
            print(f"exclusive: {'yes' if exclusive else 'no'}")
            for violation in report.violations:
                print(f"violation {violation.describe()}")
        return EXIT_OK if report.ok else EXIT_ERROR

    def handle_decode(self, args: argparse.Namespace) -> int:
        _, enc = load_labelling_or_encoding(args.source)
        decoded = decode(enc)
        text = serialize_edge_list(decoded.graph)
        if args.edges_out:
            write_text_file(args.edges_out, text)
        print(text, end='')
        print(f"# labels: {' '.join(str(label) for label in decoded.labels)}")
        print(f"# isolates: {' '.join(str(label) for label in decoded.isolate_labels())}")
        return EXIT_OK

    def handle_query(self, args: argparse.Namespace) -> int:
        _, enc = load_labelling_or_encoding(args.encoding)
        print("edge" if adjacent_labels(enc, args.label_u, args.label_w) else "non-edge")
        return EXIT_OK

    def handle_metrics(self, args: argparse.Namespace) -> int:
        labelling = self._with_graph(read_labelling_file(args.labelling), args.graph)
        report = build_report(labelling, args.d)
        if self._use_json(args):
            self._print_json(report_to_dict(report))
        else:
            print(format_report(report), end='')
        return EXIT_OK

    def handle_scheme(self, args: argparse.Namespace) -> int:
        name, param = args.name, args.param
        if name == 'path-order':
            ordering = path_optimal_ordering(self._int_param(param))
            text = " ".join(str(v) for v in ordering) + "\n"
            if args.out:
                write_text_file(args.out, text)
            print(text, end='')
            return EXIT_OK

        if name == 'incidence':
            labelling = build_scheme(name, graph=read_graph_file(param))
        elif name == 'matching-block':
            labelling = build_scheme(name, d=self._int_param(param))
        else:
            labelling = build_scheme(name, n=self._int_param(param))
        logger.info(f"方案 {name} 生成完成: {len(labelling.vertex_labels)} 个顶点, {labelling.isolate_count} 个孤立点")
        if args.out:
            write_labelling_file(args.out, labelling, self._use_json(args))
        else:
            print(format_labelling(labelling, self._use_json(args)), end='')
        return EXIT_OK

    @staticmethod
    def _int_param(param: str) -> int:
        try:
            return int(param)
        except ValueError:
            raise SchemeError(f"参数必须为整数: {param}")

    def handle_serialize(self, args: argparse.Namespace) -> int:
        _, enc = load_labelling_or_encoding(args.encoding)
        if args.format == 'gamma':
            payload = serialize_gamma(enc)
        else:
            payload = serialize_incidence(decode(enc).graph)
        data = wrap_container(args.format, payload)
        write_binary_file(args.out, data)
        print(f"{args.format}: {len(data)} bytes")
        return EXIT_OK

    def handle_deserialize(self, args: argparse.Namespace) -> int:
        fmt, payload = unwrap_container(read_binary_file(args.binary))
        if fmt == 'gamma':
            print(format_encoding_text(parse_gamma(payload)), end='')
        else:
            print(serialize_edge_list(parse_incidence(payload)), end='')
        return EXIT_OK

    def handle_bench(self, args: argparse.Namespace) -> int:
        runner = BenchRunner(self.config_loader)
        rows = runner.run_sync(args.n, args.m, args.seeds, args.order)
        if self._use_json(args):
            self._print_json({'rows': [asdict(row) for row in rows]})
        else:
            print(format_bench(rows), end='')
        return EXIT_OK

    def handle_oracle(self, args: argparse.Namespace) -> int:
        g = read_graph_file(args.graph)
        max_label = args.max_label or self.oracle_config['default_max_label']
        max_isolates = args.max_isolates
        if max_isolates is None:
            # 默认值不能让 n + s 超过限制
            max_isolates = max(0, min(self.oracle_config['default_max_isolates'],
                                      self.oracle_config['max_total_vertices'] - g.n))
        result = brute_force_sum_number(
            g, max_isolates, max_label,
            max_total_vertices=self.oracle_config['max_total_vertices'],
            max_label_limit=self.oracle_config['max_label_limit'])
        if result.exhausted:
            print("sigma: exhausted")
            return EXIT_OK
        print(f"sigma: {result.sigma}")
        print(format_labelling(result.witness), end='')
        return EXIT_OK
