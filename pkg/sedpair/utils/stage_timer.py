"""
阶段计时器

记录 CLI 长时间命令（精确搜索、多系统证书）中每个阶段的耗时
"""

import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Optional

from rich.table import Table


@dataclass
class StageMetrics:
    """阶段指标"""

    stage_name: str
    start_time: float
    end_time: Optional[float] = None
    items_processed: int = 0

    @property
    def elapsed(self) -> float:
        """已用时间（秒）"""
        end = self.end_time if self.end_time else time.time()
        return end - self.start_time

    @property
    def speed(self) -> float:
        """处理速度（项/秒）"""
        if self.elapsed == 0:
            return 0.0
        return self.items_processed / self.elapsed


class StageTimer:
    """
    阶段计时器

    示例：
        timer = StageTimer()
        with timer.stage("search") as metrics:
            result = solve_g(config)
            metrics.items_processed = result.nodes_explored
        console.print(timer.summary_table())
    """

    def __init__(self):
        self._stages: Dict[str, StageMetrics] = {}

    def start_stage(self, stage_name: str) -> StageMetrics:
        metrics = StageMetrics(stage_name=stage_name, start_time=time.time())
        self._stages[stage_name] = metrics
        return metrics

    def end_stage(self, stage_name: str, items_processed: Optional[int] = None) -> None:
        if stage_name not in self._stages:
            return
        stage = self._stages[stage_name]
        stage.end_time = time.time()
        if items_processed is not None:
            stage.items_processed = items_processed

    @contextmanager
    def stage(self, stage_name: str) -> Iterator[StageMetrics]:
        """计时一个阶段；异常时同样记录结束时间"""
        metrics = self.start_stage(stage_name)
        try:
            yield metrics
        finally:
            self.end_stage(stage_name)

    def get_stage_metrics(self, stage_name: str) -> Optional[StageMetrics]:
        return self._stages.get(stage_name)

    def get_summary(self) -> Dict[str, Any]:
        """所有阶段的摘要"""
        stages = {
            name: {"elapsed": m.elapsed, "items_processed": m.items_processed, "speed": m.speed}
            for name, m in self._stages.items()
        }
        return {"stages": stages, "total_elapsed": sum(s["elapsed"] for s in stages.values())}

    def summary_table(self) -> Table:
        """rich 表格形式的摘要"""
        table = Table(title="阶段耗时")
        table.add_column("阶段", style="cyan")
        table.add_column("耗时 (s)", justify="right")
        table.add_column("处理量", justify="right")
        table.add_column("速度 (项/s)", justify="right")

        for name, metrics in self._stages.items():
            table.add_row(name, f"{metrics.elapsed:.2f}", str(metrics.items_processed), f"{metrics.speed:.1f}")

        table.add_row("[bold]合计[/bold]", f"{self.get_summary()['total_elapsed']:.2f}", "", "")
        return table
