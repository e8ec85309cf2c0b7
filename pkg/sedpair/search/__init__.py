"""
SED-pair 工具包 - 精确搜索模块
"""

from .exact_solver import (
    SearchConfig,
    SearchMode,
    SearchResult,
    enumerate_sed_pairs,
    naive_g,
    solve_g,
    verify_lower_bounds,
)
from .parallel_search import ParallelSearch

__all__ = [
    'SearchConfig',
    'SearchMode',
    'SearchResult',
    'solve_g',
    'naive_g',
    'enumerate_sed_pairs',
    'verify_lower_bounds',
    'ParallelSearch',
]
