import os
import yaml
import logging
from typing import Dict, Any

# 配置日志
logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'config.yaml')


class ConfigLoader:
    def __init__(self, config_path: str = DEFAULT_CONFIG_PATH):
        """初始化配置加载器"""
        self.config_path = config_path
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """加载YAML配置文件"""
        if not os.path.exists(self.config_path):
            raise FileNotFoundError(f"配置文件 {self.config_path} 不存在")

        with open(self.config_path, 'r', encoding='utf-8') as file:
            config = yaml.safe_load(file)

        # 空文件时 safe_load 返回 None
        return config or {}

    def reload_config(self):
        """重新加载配置文件"""
        self.config = self._load_config()
        logger.info(f"配置已重新加载: {self.config_path}")

    def get_logging_config(self) -> Dict[str, Any]:
        """获取日志配置"""
        logging_config = self.config.get('logging', {}) or {}
        return {
            'level': logging_config.get('level', 'INFO'),
            'console_level': logging_config.get('console_level', 'WARNING'),
            'log_dir': logging_config.get('log_dir', 'logs'),
            'file_enabled': logging_config.get('file_enabled', True),
            'backup_count': logging_config.get('backup_count', 30)
        }

    def get_labeller_config(self) -> Dict[str, Any]:
        """获取标注算法配置

        Returns:
            increment_cap_factor: 每一步 +4 次数的保护上限系数（上限为 factor·i³）
            verify_on_finalize: 结束时是否做完整的合法性检查
            unique_isolates: 默认是否为每条边使用独立的孤立点
        """
        labeller_config = self.config.get('labeller', {}) or {}
        cap_factor = int(labeller_config.get('increment_cap_factor', 4))
        if cap_factor < 1:
            raise ValueError(f"increment_cap_factor 必须为正数，当前为 {cap_factor}")
        return {
            'increment_cap_factor': cap_factor,
            'verify_on_finalize': bool(labeller_config.get('verify_on_finalize', True)),
            'unique_isolates': bool(labeller_config.get('unique_isolates', False))
        }

    def get_oracle_config(self) -> Dict[str, int]:
        """获取暴力搜索的规模限制"""
        oracle_config = self.config.get('oracle', {}) or {}
        return {
            'max_total_vertices': int(oracle_config.get('max_total_vertices', 10)),
            'max_label_limit': int(oracle_config.get('max_label_limit', 64)),
            'default_max_label': int(oracle_config.get('default_max_label', 30)),
            'default_max_isolates': int(oracle_config.get('default_max_isolates', 6))
        }

    def get_bench_config(self) -> Dict[str, int]:
        """获取基准测试配置"""
        if 'bench' not in self.config:
            # 默认配置：每批8个种子
            return {
                'batch_size': 8,
                'default_seeds': 5
            }

        bench_config = self.config['bench'] or {}
        return {
            'batch_size': max(1, int(bench_config.get('batch_size', 8))),
            'default_seeds': int(bench_config.get('default_seeds', 5))
        }

    def get_output_config(self) -> Dict[str, Any]:
        """获取输出格式配置"""
        output_config = self.config.get('output', {}) or {}
        return {
            'json': bool(output_config.get('json', False))
        }
