"""
进度跟踪与阶段计时测试
"""

import io
import os
import sys

import pytest
from rich.console import Console

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sedpair.search.exact_solver import SearchConfig, solve_g
from sedpair.utils import ProgressTracker, StageTimer


def _quiet_console():
    return Console(file=io.StringIO(), force_terminal=False)


class TestProgressTracker:
    def test_counts_success_and_errors(self):
        tracker = ProgressTracker("g(5)", num_workers=2, console=_quiet_console())
        tracker.start(total_items=3)
        tracker.task_done(0, {"status": "success", "nodes": 10}, incumbent=0)
        tracker.task_done(1, {"status": "success", "nodes": 5}, incumbent=-1)
        tracker.task_done(0, {"task": 2, "status": "error", "error": "boom", "error_type": "RuntimeError"}, -1)
        stats = tracker.stop()

        assert stats["completed"] == 3
        assert stats["total"] == 3
        assert stats["nodes"] == 15
        assert stats["incumbent"] == -1
        assert stats["error_count"] == 1
        assert stats["per_slot"] == {0: 2, 1: 1}
        assert stats["errors"][0]["error_type"] == "RuntimeError"

    def test_drives_parallel_search(self):
        tracker = ProgressTracker("g(4)", num_workers=2, console=_quiet_console())
        result = solve_g(SearchConfig(4, parallel=2, prefix_depth=2), tracker)
        assert result.g_value == 0
        assert tracker.get_speed_stats()["completed"] == tracker.total_items


class TestStageTimer:
    def test_stage_context(self):
        timer = StageTimer()
        with timer.stage("search") as metrics:
            metrics.items_processed = 42
        stage = timer.get_stage_metrics("search")
        assert stage.end_time is not None
        assert stage.items_processed == 42
        assert timer.get_summary()["stages"]["search"]["items_processed"] == 42

    def test_records_end_on_error(self):
        timer = StageTimer()
        with pytest.raises(RuntimeError):
            with timer.stage("bounds"):
                raise RuntimeError("stop")
        assert timer.get_stage_metrics("bounds").end_time is not None

    def test_unknown_stage(self):
        timer = StageTimer()
        timer.end_stage("missing")
        assert timer.get_stage_metrics("missing") is None

    def test_summary_table(self):
        timer = StageTimer()
        timer.start_stage("a")
        timer.end_stage("a", items_processed=3)
        table = timer.summary_table()
        assert table.row_count == 2
