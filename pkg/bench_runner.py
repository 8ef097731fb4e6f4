import asyncio
import logging
from dataclasses import dataclass
from typing import List, Sequence

from codec import encode, serialize_gamma
from config_loader import ConfigLoader
from graph_core import Graph, degeneracy_ordering
from labeller import SumLabeller
from metrics import baseline_costs, stirling_lower_bound, storage_bits
from oracle import random_graph
from utils import format_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchRow:
    seed: int
    isolates: int
    max_label: int
    storage_bits: int
    gamma_bits: int
    adjacency_matrix_bits: int
    adjacency_list_bits: int
    stirling_bits: int


BENCH_HEADERS = ('seed', 'isolates', 'max_label', 'storage_bits', 'gamma_bits',
                 'matrix_bits', 'list_bits', 'stirling_bits')


class BenchRunner:
    def __init__(self, config_loader: ConfigLoader):
        self.config_loader = config_loader
        bench_config = config_loader.get_bench_config()
        self.batch_size = bench_config['batch_size']
        self.default_seeds = bench_config['default_seeds']
        self.labeller = SumLabeller(config_loader)

    def _run_seed(self, n: int, m: int, seed: int, order: str) -> BenchRow:
        """单个种子：生成随机图、标注并统计位数"""
        g: Graph = random_graph(n, m, seed)
        ordering = degeneracy_ordering(g).ordering if order == 'degeneracy' else None
        labelling = self.labeller.label(g, ordering)
        labels = labelling.all_labels()
        baselines = baseline_costs(g.n, g.m)
        return BenchRow(
            seed=seed,
            isolates=labelling.isolate_count,
            max_label=labelling.max_label(),
            storage_bits=storage_bits(labels),
            gamma_bits=8 * len(serialize_gamma(encode(labelling))),
            adjacency_matrix_bits=baselines['adjacency_matrix_bits'],
            adjacency_list_bits=baselines['adjacency_list_bits'],
            stirling_bits=stirling_lower_bound(len(labels)),
        )

    async def run(self, n: int, m: int, seeds: Sequence[int], order: str = 'degeneracy') -> List[BenchRow]:
        logger.info(f"开始基准测试: n={n}, m={m}, 种子数 {len(seeds)}")
        rows: List[BenchRow] = []
        # 批量执行，每批最多 batch_size 个种子；gather 保持提交顺序
        for i in range(0, len(seeds), self.batch_size):
            batch = seeds[i:i + self.batch_size]
            tasks = [asyncio.to_thread(self._run_seed, n, m, seed, order) for seed in batch]
            rows.extend(await asyncio.gather(*tasks))
        logger.info("基准测试完成")
        return rows

    def run_sync(self, n: int, m: int, seed_count: int = None, order: str = 'degeneracy') -> List[BenchRow]:
        count = self.default_seeds if seed_count is None else seed_count
        if count < 1:
            raise ValueError(f"种子数必须 ≥ 1，当前为 {count}")
        return asyncio.run(self.run(n, m, list(range(1, count + 1)), order))


def format_bench(rows: Sequence[BenchRow]) -> str:
    table_rows = [(row.seed, row.isolates, row.max_label, row.storage_bits, row.gamma_bits,
                   row.adjacency_matrix_bits, row.adjacency_list_bits, row.stirling_bits)
                  for row in rows]
    if rows:
        columns = list(zip(*table_rows))[1:]
        table_rows.append(('mean',) + tuple(f"{sum(column) / len(column):.1f}" for column in columns))
    return format_table(BENCH_HEADERS, table_rows)
