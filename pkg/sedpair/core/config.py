"""
SED-pair 工具包 - 配置管理模块

负责加载和管理求解器、优化器与输出的配置
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

ENV_CONFIG = 'SEDPAIR_CONFIG'


def default_config() -> Dict[str, Any]:
    """内置默认配置"""
    return {
        'solver': {
            'max_n_guard': 7,
            'workers': 0,  # 0 = 自动检测
            'prefix_depth': 4,
            'symmetry': False,
            'incumbent_poll': 1024,
        },
        'optimize': {
            'grid_step': 1.0e-3,
            'refine_tol': 1.0e-9,
            'csv_decimals': 6,
            'workers': 1,
        },
        'extremal': {
            'brute_force_max_n': 7,
        },
        'output': {
            'quiet': False,
        },
    }


def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _deep_merge(base[key], value)
        else:
            base[key] = value
    return base


class Config:
    """配置管理器"""

    def __init__(self, config_path: Optional[str] = None, use_env: bool = True):
        """
        初始化配置

        Args:
            config_path: 配置文件路径（可选；未指定时读取 SEDPAIR_CONFIG 环境变量，
                         都没有时只使用内置默认值）
            use_env: 是否读取 SEDPAIR_CONFIG 环境变量
        """
        if config_path is None and use_env:
            config_path = os.environ.get(ENV_CONFIG) or None

        self.config_path = Path(config_path) if config_path else None
        self._config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """加载配置文件并合并到默认值之上"""
        config = default_config()
        if self.config_path is None:
            return config

        if not self.config_path.exists():
            raise FileNotFoundError(f"配置文件不存在: {self.config_path}")

        with open(self.config_path, 'r', encoding='utf-8') as f:
            loaded = yaml.safe_load(f) or {}

        if not isinstance(loaded, dict):
            raise ValueError(f"配置文件顶层必须是映射: {self.config_path}")

        return _deep_merge(config, loaded)

    def get(self, key: str, default: Any = None) -> Any:
        """
        获取配置项

        Args:
            key: 配置键，支持点分隔的路径 (如 'solver.max_n_guard')
            default: 默认值

        Returns:
            配置值
        """
        value = self._config
        for k in key.split('.'):
            if isinstance(value, dict):
                value = value.get(k)
            else:
                return default

        return value if value is not None else default

    def set(self, key: str, value: Any) -> None:
        """
        设置配置项

        Args:
            key: 配置键
            value: 配置值
        """
        keys = key.split('.')
        config = self._config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def as_dict(self) -> Dict[str, Any]:
        """配置的深拷贝"""
        return copy.deepcopy(self._config)

    def dump(self) -> str:
        """YAML 文本"""
        return yaml.dump(self._config, allow_unicode=True, default_flow_style=False, sort_keys=True)

    def save(self, path: Optional[str] = None) -> Path:
        """保存配置到文件"""
        target = Path(path) if path else self.config_path
        if target is None:
            raise ValueError("未指定配置文件路径")

        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, 'w', encoding='utf-8') as f:
            f.write(self.dump())
        return target

    # 便捷属性访问器
    @property
    def max_n_guard(self) -> int:
        """穷举搜索的阶数上限"""
        return int(self.get('solver.max_n_guard', 7))

    @property
    def solver_workers(self) -> int:
        """精确搜索的进程数（0 = 自动检测）"""
        return int(self.get('solver.workers', 0))

    @property
    def prefix_depth(self) -> int:
        """并行划分的前缀深度"""
        return int(self.get('solver.prefix_depth', 4))

    @property
    def symmetry(self) -> bool:
        """是否启用首顶点对称约简"""
        return bool(self.get('solver.symmetry', False))

    @property
    def incumbent_poll(self) -> int:
        """共享最优值的轮询间隔（节点数）"""
        return int(self.get('solver.incumbent_poll', 1024))

    @property
    def grid_step(self) -> float:
        """网格步长"""
        return float(self.get('optimize.grid_step', 1.0e-3))

    @property
    def refine_tol(self) -> float:
        """局部细化精度"""
        return float(self.get('optimize.refine_tol', 1.0e-9))

    @property
    def csv_decimals(self) -> int:
        """CSV 小数位数"""
        return int(self.get('optimize.csv_decimals', 6))

    @property
    def optimize_workers(self) -> int:
        """网格求值线程数"""
        return int(self.get('optimize.workers', 1))

    @property
    def brute_force_max_n(self) -> int:
        """F(n,e) 暴力枚举的阶数上限"""
        return int(self.get('extremal.brute_force_max_n', 7))

    @property
    def quiet(self) -> bool:
        """仅输出最终结果行"""
        return bool(self.get('output.quiet', False))

    def __repr__(self) -> str:
        return f"Config(path={self.config_path})"
