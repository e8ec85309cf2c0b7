"""
并行搜索进度跟踪器

一条 rich 进度条记录已完成的前缀子树，描述中显示共享最优值与累计节点数。
"""

import time
from collections import Counter
from threading import Lock
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TaskID, TextColumn, TimeElapsedColumn


class ProgressTracker:
    """
    前缀子树进度跟踪器

    示例：
        tracker = ProgressTracker("g(6)", num_workers=4)
        tracker.start(total_items=120)
        tracker.task_done(0, {"status": "success", "nodes": 900}, incumbent=-1)
        stats = tracker.stop()
    """

    def __init__(self, stage_name: str, num_workers: int, console: Optional[Console] = None):
        self.stage_name = stage_name
        self.num_workers = num_workers
        self.console = console or Console()
        self.total_items = 0

        self._lock = Lock()
        self._completed_items = 0
        self._nodes = 0
        self._incumbent: Optional[int] = None
        self._per_slot: Counter = Counter()
        self._errors: List[Dict[str, Any]] = []

        self._progress = Progress(
            SpinnerColumn(),
            TextColumn("[bold blue]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=self.console,
        )
        self._task_id: Optional[TaskID] = None
        self._start_time = time.time()

    def start(self, total_items: int) -> None:
        self.total_items = total_items
        self._start_time = time.time()
        self._progress.start()
        self._task_id = self._progress.add_task(f"[bold cyan]{self.stage_name}[/bold cyan]", total=total_items)

    def task_done(self, worker_id: int, result: Dict[str, Any], incumbent: Optional[int] = None) -> None:
        """
        记录一个完成的子树

        Args:
            worker_id: 槽位编号（任务序号对进程数取模）
            result: worker 返回的字典
            incumbent: 当前共享最优值
        """
        with self._lock:
            self._completed_items += 1
            self._incumbent = incumbent
            self._per_slot[worker_id] += 1

            if result.get("status") == "success":
                self._nodes += result.get("nodes", 0)
            else:
                self._errors.append({
                    "task": result.get("task", -1),
                    "error": result.get("error", ""),
                    "error_type": result.get("error_type", "Exception"),
                })

            if self._task_id is not None:
                self._progress.update(
                    self._task_id,
                    completed=self._completed_items,
                    description=f"[bold cyan]{self.stage_name}[/bold cyan] 最优={incumbent} 节点={self._nodes:,}",
                )

    def get_speed_stats(self) -> Dict[str, float]:
        elapsed = time.time() - self._start_time
        return {
            "elapsed": elapsed,
            "nodes_per_sec": self._nodes / elapsed if elapsed > 0 else 0.0,
            "completed": self._completed_items,
            "total": self.total_items,
        }

    def stop(self) -> Dict[str, Any]:
        """停止进度条并返回最终统计"""
        self._progress.stop()
        stats: Dict[str, Any] = dict(self.get_speed_stats())
        stats["nodes"] = self._nodes
        stats["incumbent"] = self._incumbent
        stats["per_slot"] = dict(self._per_slot)
        stats["errors"] = list(self._errors)
        stats["error_count"] = len(self._errors)
        return stats
