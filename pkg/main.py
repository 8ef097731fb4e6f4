import argparse
import logging
import os
import sys
from logging.handlers import TimedRotatingFileHandler
from typing import Any, Dict, List, Optional

from command_handler import CommandHandler
from config_loader import DEFAULT_CONFIG_PATH, ConfigLoader
from schemes import SCHEME_NAMES

logger = logging.getLogger(__name__)


def setup_logger(logging_config: Dict[str, Any]) -> None:
    """配置日志系统

    控制台输出到 stderr，标准输出只留给命令结果。
    """
    root = logging.getLogger()
    root.setLevel(getattr(logging, str(logging_config['level']).upper(), logging.INFO))

    # 检查是否已经有处理器，避免重复添加
    if root.handlers:
        return
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    # 添加控制台处理器
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, str(logging_config['console_level']).upper(), logging.WARNING))
    console_handler.setFormatter(formatter)
    root.addHandler(console_handler)

    # 添加文件处理器
    if logging_config['file_enabled']:
        log_dir = logging_config['log_dir']
        if not os.path.isabs(log_dir):
            log_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), log_dir)
        os.makedirs(log_dir, exist_ok=True)
        file_handler = TimedRotatingFileHandler(
            os.path.join(log_dir, 'sumgraph.log'),
            when='midnight',
            interval=1,
            backupCount=logging_config['backup_count'],
            encoding='utf-8'
        )
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='sumgraph', description='和图标注与和数编码工具')
    parser.add_argument('--config', default=DEFAULT_CONFIG_PATH, help='配置文件路径')
    subparsers = parser.add_subparsers(dest='command', required=True)

    label = subparsers.add_parser('label', help='对图运行增量标注')
    label.add_argument('graph')
    label.add_argument('--order', default='given', help='given | degeneracy | file:<path>')
    label.add_argument('--unique-isolates', action='store_true')
    label.add_argument('--out')
    label.add_argument('--json', action='store_true')

    verify = subparsers.add_parser('verify', help='检查标注是否合法')
    verify.add_argument('labelling')
    verify.add_argument('--graph')
    verify.add_argument('--json', action='store_true')

    decode = subparsers.add_parser('decode', help='从标注或编码恢复图')
    decode.add_argument('source')
    decode.add_argument('--edges-out')

    query = subparsers.add_parser('query', help='按标签查询邻接')
    query.add_argument('encoding')
    query.add_argument('label_u', type=int)
    query.add_argument('label_w', type=int)

    metrics = subparsers.add_parser('metrics', help='存储位数与上界检查')
    metrics.add_argument('labelling')
    metrics.add_argument('--graph')
    metrics.add_argument('-d', type=int)
    metrics.add_argument('--json', action='store_true')

    scheme = subparsers.add_parser('scheme', help='显式标注方案')
    scheme.add_argument('name', choices=SCHEME_NAMES + ('path-order',))
    scheme.add_argument('param', help='n、d 或图文件')
    scheme.add_argument('--out')
    scheme.add_argument('--json', action='store_true')

    serialize = subparsers.add_parser('serialize', help='写出二进制格式')
    serialize.add_argument('encoding')
    serialize.add_argument('--format', choices=('gamma', 'incidence'), required=True)
    serialize.add_argument('--out', required=True)

    deserialize = subparsers.add_parser('deserialize', help='读取二进制格式')
    deserialize.add_argument('binary')

    bench = subparsers.add_parser('bench', help='随机图基准测试')
    bench.add_argument('--n', type=int, required=True)
    bench.add_argument('--m', type=int, required=True)
    bench.add_argument('--seeds', type=int)
    bench.add_argument('--order', choices=('given', 'degeneracy'), default='degeneracy')
    bench.add_argument('--json', action='store_true')

    oracle = subparsers.add_parser('oracle', help='暴力求 σ')
    oracle.add_argument('task', choices=('sigma',))
    oracle.add_argument('graph')
    oracle.add_argument('--max-label', type=int)
    oracle.add_argument('--max-isolates', type=int)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config_loader = ConfigLoader(args.config)
        setup_logger(config_loader.get_logging_config())
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    logger.info(f"执行命令: {args.command}")
    return CommandHandler(config_loader).handle(args)


if __name__ == "__main__":
    sys.exit(main())
