"""
g(n) 精确搜索的多进程实现

按固定深度的前缀把搜索树划分成互不相交的子树，交给进程池；
各 worker 通过共享的 multiprocessing.Value 交换当前最优值。
"""

import multiprocessing
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Dict, List, Optional, Tuple

from ..core.errors import SedPairError
from ..core.signed_graph import SignedGraph
from ..utils.progress_tracker import ProgressTracker
from .exact_solver import BranchAndBound, SearchConfig, SearchResult

# 由进程池 initializer 设置
_shared_incumbent = None


def _init_worker(shared) -> None:
    global _shared_incumbent
    _shared_incumbent = shared


def _search_prefix_worker(args: Tuple) -> Dict[str, Any]:
    """
    Worker 函数：搜索一个前缀下的子树（在独立进程中执行）

    Args:
        args: (task_index, n, mode, prune, symmetry, incumbent_poll, prefix)

    Returns:
        status / best / witness_edges / nodes
    """
    task_index, n, mode, prune, symmetry, incumbent_poll, prefix = args

    try:
        engine = BranchAndBound(n, mode, prune, symmetry, incumbent_poll, shared=_shared_incumbent)
        if _shared_incumbent is not None:
            engine.bound = min(engine.bound, _shared_incumbent.value)
        engine.replay(prefix)
        engine.search(len(prefix))

        return {
            "task": task_index,
            "status": "success",
            "best": engine.best,
            "witness_edges": list(engine.best_edges),
            "nodes": engine.nodes,
        }

    except Exception as e:
        return {
            "task": task_index,
            "status": "error",
            "error": str(e),
            "error_type": type(e).__name__,
        }


class ParallelSearch:
    """
    并行精确搜索

    特性：
    - 进程池并行处理前缀子树
    - 共享最优值，读取时机不影响正确性
    - 任务级错误隔离，任一任务失败时整体报错
    """

    def __init__(self, config: SearchConfig, tracker: Optional[ProgressTracker] = None):
        self.config = config
        self.num_workers = config.workers
        self.tracker = tracker

    def build_tasks(self) -> Tuple[List[Tuple], int]:
        """枚举前缀，返回 (任务列表, 规划器访问的节点数)"""
        config = self.config
        planner = BranchAndBound(config.n, config.mode, config.prune, config.symmetry)
        prefixes = list(planner.prefixes(config.prefix_depth))
        tasks = [
            (i, config.n, config.mode, config.prune, config.symmetry, config.incumbent_poll, prefix)
            for i, prefix in enumerate(prefixes)
        ]
        return tasks, planner.nodes

    def run(self) -> SearchResult:
        config = self.config
        tasks, planned_nodes = self.build_tasks()
        tracker = self.tracker

        if tracker is not None:
            tracker.start(len(tasks))

        shared = multiprocessing.Value('i', 0)
        results: List[Dict[str, Any]] = []
        failed: List[Dict[str, Any]] = []

        with ProcessPoolExecutor(max_workers=self.num_workers, initializer=_init_worker,
                                 initargs=(shared,)) as executor:
            future_to_task = {executor.submit(_search_prefix_worker, task): task[0] for task in tasks}

            for future in as_completed(future_to_task):
                task_index = future_to_task[future]
                try:
                    result = future.result()
                except Exception as e:
                    result = {"task": task_index, "status": "error", "error": str(e), "error_type": type(e).__name__}

                if result["status"] == "success":
                    results.append(result)
                else:
                    failed.append(result)

                if tracker is not None:
                    tracker.task_done(task_index % self.num_workers, result, shared.value)

        if tracker is not None:
            tracker.stop()

        if failed:
            first = failed[0]
            raise SedPairError(f"{len(failed)} 个子任务失败，例如任务 {first['task']}: "
                               f"{first['error_type']}: {first['error']}")

        # 精确的最小值归约；并列时取前缀序号最小者
        g_value, witness_edges = 0, []
        for result in sorted(results, key=lambda r: r["task"]):
            if result["best"] is not None and result["best"] < g_value:
                g_value, witness_edges = result["best"], result["witness_edges"]

        return SearchResult(
            n=config.n,
            g_value=g_value,
            witness=SignedGraph(config.n, tuple(map(tuple, witness_edges))) if config.report_witness else None,
            nodes_explored=planned_nodes + sum(r["nodes"] for r in results),
            mode=config.mode,
        )
