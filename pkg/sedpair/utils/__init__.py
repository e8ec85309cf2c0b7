"""
SED-pair 工具包 - Utils 模块

提供进度跟踪与阶段计时
"""

from .progress_tracker import ProgressTracker
from .stage_timer import StageMetrics, StageTimer

__all__ = [
    'ProgressTracker',
    'StageTimer',
    'StageMetrics',
]
