import logging
import os
from typing import Iterable, List, Sequence

logger = logging.getLogger(__name__)


def ceil_log2(x: int) -> int:
    """⌈log2 x⌉，x ≥ 1 时精确计算（不经过浮点数）"""
    if x < 1:
        raise ValueError(f"ceil_log2 需要正整数，收到: {x}")
    return (x - 1).bit_length()


def read_text_file(path: str) -> str:
    """读取UTF-8文本文件"""
    if not os.path.exists(path):
        raise FileNotFoundError(f"文件 {path} 不存在")
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def write_text_file(path: str, text: str) -> None:
    """写入UTF-8文本文件"""
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info(f"已写入文件: {path}")


def read_binary_file(path: str) -> bytes:
    if not os.path.exists(path):
        raise FileNotFoundError(f"文件 {path} 不存在")
    with open(path, 'rb') as f:
        return f.read()


def write_binary_file(path: str, data: bytes) -> None:
    with open(path, 'wb') as f:
        f.write(data)
    logger.info(f"已写入二进制文件: {path} ({len(data)} 字节)")


def iter_content_lines(text: str) -> Iterable[str]:
    """逐行返回去掉空白后的内容行，跳过空行和 # 注释"""
    for raw_line in text.splitlines():
        line = raw_line.strip()
        if not line or line.startswith('#'):
            continue
        yield line


def parse_int_tokens(text: str) -> List[int]:
    """把文本中的所有整数（空白分隔，忽略 # 注释）解析出来"""
    values = []
    for line in iter_content_lines(text):
        for token in line.split():
            try:
                values.append(int(token))
            except ValueError:
                raise ValueError(f"无法解析整数: '{token}'")
    return values


def format_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    """生成左对齐的文本表格

    Args:
        headers: 表头
        rows: 数据行，每个单元格会被转换成字符串

    Returns:
        多行文本，每行以换行符结尾
    """
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for index, row in enumerate(cells):
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        if index == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
