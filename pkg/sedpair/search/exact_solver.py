"""
g(n) 的精确计算

对全部 C(n,2) 个顶点对逐一赋值 {−1, +1, 无边}，按字典序深度优先搜索，
只接受实现出的图为 SED-pair 的赋值，求总权重的最小值。

剪枝（只影响节点数，不影响结果）：
- 界：未赋值的对最多再贡献 −(剩余对数)，当前和加上它仍 ≥ 已知最优时剪掉
- SED 可行性：对已赋值边 (a, b)，若 s_a + s_b − w + r_a + r_b < 1 则剪掉，
  r 为端点上尚未赋值的对数（r = 0 时即为精确的 SED 条件）
- 对称约简（可选）：顶点 0 的度最大，且顶点 0 的行按 +1、−1、无边 的顺序排列
"""

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from ..builders.blowup import restricted_class_check
from ..core.errors import BoundViolationError, ContractError, InvalidSpecError, SearchBoundError
from ..core.signed_graph import Edge, SignedGraph, check_adjacent_vertex_sum_lemma, verify_sed

DEFAULT_MAX_N_GUARD = 7
NAIVE_MAX_N = 5

BRANCH_ORDER = (-1, 1, 0)
# 对称约简中顶点 0 行的排列顺序
_ROW_RANK = {1: 0, -1: 1, 0: 2}


class SearchMode(str, Enum):
    """搜索范围"""

    ALL = 'all'
    RESTRICTED_CLASS = 'restricted'


@dataclass(frozen=True)
class SearchConfig:
    """
    精确搜索配置

    Args:
        n: 阶数
        mode: ALL 或 RESTRICTED_CLASS
        max_n_guard: 允许的最大阶数
        parallel: 进程数（1 = 串行，0 = 自动检测）
        report_witness: 是否返回达到最优值的图
        prune: 是否启用界与 SED 可行性剪枝
        symmetry: 是否启用顶点 0 对称约简
        prefix_depth: 并行划分时的前缀深度
        incumbent_poll: 读取共享最优值的节点间隔
    """

    n: int
    mode: SearchMode = SearchMode.ALL
    max_n_guard: int = DEFAULT_MAX_N_GUARD
    parallel: int = 1
    report_witness: bool = True
    prune: bool = True
    symmetry: bool = False
    prefix_depth: int = 4
    incumbent_poll: int = 1024

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpecError(f"阶数必须 ≥ 1: {self.n}")
        if self.parallel < 0:
            raise InvalidSpecError(f"进程数不能为负: {self.parallel}")
        if self.prefix_depth < 0:
            raise InvalidSpecError(f"前缀深度不能为负: {self.prefix_depth}")
        if self.incumbent_poll < 1:
            raise InvalidSpecError(f"轮询间隔必须 ≥ 1: {self.incumbent_poll}")
        object.__setattr__(self, 'mode', SearchMode(self.mode))

    @property
    def workers(self) -> int:
        return self.parallel or os.cpu_count() or 1


@dataclass(frozen=True)
class SearchResult:
    """精确搜索结果"""

    n: int
    g_value: int
    witness: Optional[SignedGraph]
    nodes_explored: int
    mode: SearchMode


class BranchAndBound:
    """
    字典序顶点对上的深度优先搜索

    串行求解与并行 worker 共用；shared 为 multiprocessing.Value 时会定期读取
    并发布共享最优值。
    """

    def __init__(self, n: int, mode: SearchMode = SearchMode.ALL, prune: bool = True,
                 symmetry: bool = False, incumbent_poll: int = 1024, shared=None):
        self.n = n
        self.mode = SearchMode(mode)
        self.prune = prune
        self.symmetry = symmetry
        self.incumbent_poll = incumbent_poll
        self.shared = shared

        self.pairs: List[Tuple[int, int]] = list(combinations(range(n), 2))
        self.assignment = [0] * len(self.pairs)
        self.sums = [0] * n
        self.free = [n - 1] * n
        self.degree = [0] * n
        self.incident: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        self.total = 0

        # 空图是 SED-pair，也属于受限类
        self.bound = 0
        self.best: Optional[int] = None
        self.best_edges: Tuple[Edge, ...] = ()
        self.nodes = 0

    # ------------------------------------------------------------------
    # 状态维护
    # ------------------------------------------------------------------

    def assign(self, p: int, x: int) -> None:
        u, v = self.pairs[p]
        self.assignment[p] = x
        self.free[u] -= 1
        self.free[v] -= 1
        if x:
            self.sums[u] += x
            self.sums[v] += x
            self.degree[u] += 1
            self.degree[v] += 1
            self.incident[u].append((v, x))
            self.incident[v].append((u, x))
            self.total += x

    def unassign(self, p: int, x: int) -> None:
        u, v = self.pairs[p]
        self.assignment[p] = 0
        self.free[u] += 1
        self.free[v] += 1
        if x:
            self.sums[u] -= x
            self.sums[v] -= x
            self.degree[u] -= 1
            self.degree[v] -= 1
            self.incident[u].pop()
            self.incident[v].pop()
            self.total -= x

    def _feasible(self, u: int, v: int) -> bool:
        sums, free = self.sums, self.free
        for a in (u, v):
            for b, w in self.incident[a]:
                if sums[a] + sums[b] - w + free[a] + free[b] < 1:
                    return False
        return True

    def _symmetry_ok(self, p: int, x: int) -> bool:
        u, v = self.pairs[p]
        if u == 0:
            return p == 0 or _ROW_RANK[x] >= _ROW_RANK[self.assignment[p - 1]]
        # 顶点 0 的行已全部赋值
        if x and max(self.degree[u], self.degree[v]) + 1 > self.degree[0]:
            return False
        return True

    def _allowed(self, p: int, x: int) -> bool:
        remaining = len(self.pairs) - p - 1
        if self.prune and self.total + x - remaining >= self.bound:
            return False
        if self.symmetry and not self._symmetry_ok(p, x):
            return False
        return True

    # ------------------------------------------------------------------
    # 叶子与共享最优值
    # ------------------------------------------------------------------

    def _current_edges(self) -> Tuple[Edge, ...]:
        return tuple((u, v, x) for (u, v), x in zip(self.pairs, self.assignment) if x)

    def _leaf_valid(self, edges: Sequence[Edge]) -> bool:
        sums = self.sums
        for u, v, w in edges:
            if sums[u] + sums[v] - w < 1:
                return False
        if self.mode == SearchMode.RESTRICTED_CLASS:
            for u, v, w in edges:
                u_plus, v_plus = sums[u] >= 0, sums[v] >= 0
                if w == -1 and u_plus == v_plus:
                    return False
                if w == 1 and not (u_plus and v_plus):
                    return False
        return True

    def _leaf(self) -> None:
        if self.total >= self.bound:
            return
        edges = self._current_edges()
        if not self._leaf_valid(edges):
            return
        self.bound = self.total
        self.best = self.total
        self.best_edges = edges
        if self.shared is not None:
            with self.shared.get_lock():
                if self.total < self.shared.value:
                    self.shared.value = self.total

    def _poll(self) -> None:
        if self.shared is not None and self.nodes % self.incumbent_poll == 0:
            value = self.shared.value
            if value < self.bound:
                self.bound = value

    # ------------------------------------------------------------------
    # 搜索
    # ------------------------------------------------------------------

    def search(self, start: int = 0) -> None:
        """从第 start 个顶点对开始搜索（之前的对已赋值）"""
        self.nodes += 1
        self._poll()
        if start == len(self.pairs):
            self._leaf()
            return

        u, v = self.pairs[start]
        for x in BRANCH_ORDER:
            if not self._allowed(start, x):
                continue
            self.assign(start, x)
            if not self.prune or self._feasible(u, v):
                self.search(start + 1)
            self.unassign(start, x)

    def prefixes(self, depth: int) -> Iterator[Tuple[int, ...]]:
        """枚举前 depth 个顶点对上通过剪枝的全部赋值；深度小于 depth 的节点计入 nodes"""
        depth = min(depth, len(self.pairs))

        def walk(p: int):
            if p == depth:
                yield tuple(self.assignment[:depth])
                return
            self.nodes += 1
            u, v = self.pairs[p]
            for x in BRANCH_ORDER:
                if not self._allowed(p, x):
                    continue
                self.assign(p, x)
                if not self.prune or self._feasible(u, v):
                    yield from walk(p + 1)
                self.unassign(p, x)

        yield from walk(0)

    def replay(self, prefix: Sequence[int]) -> None:
        for p, x in enumerate(prefix):
            self.assign(p, x)


def _check_result(result: SearchResult) -> SearchResult:
    witness = result.witness
    if witness is None:
        return result
    report = verify_sed(witness)
    if not report.is_sed or report.total_weight != result.g_value:
        raise ContractError(f"n={result.n}: 见证图不是总权重为 {result.g_value} 的 SED-pair")
    if not check_adjacent_vertex_sum_lemma(witness):
        raise ContractError(f"n={result.n}: 见证图不满足相邻顶点和引理")
    if result.mode == SearchMode.RESTRICTED_CLASS and not restricted_class_check(witness):
        raise ContractError(f"n={result.n}: 见证图不属于受限类")
    return result


def solve_g(config: SearchConfig, tracker=None) -> SearchResult:
    """
    精确计算 g(n)

    Raises:
        SearchBoundError: n 超过 max_n_guard
    """
    if config.n > config.max_n_guard:
        raise SearchBoundError(f"n={config.n} 超过穷举上限 {config.max_n_guard}")

    if config.workers > 1 and config.prefix_depth > 0 and config.n > 2:
        from .parallel_search import ParallelSearch

        result = ParallelSearch(config, tracker).run()
    else:
        engine = BranchAndBound(config.n, config.mode, config.prune, config.symmetry, config.incumbent_poll)
        engine.search()
        result = SearchResult(
            n=config.n,
            g_value=engine.bound,
            witness=SignedGraph(config.n, engine.best_edges) if config.report_witness else None,
            nodes_explored=engine.nodes,
            mode=config.mode,
        )
    return _check_result(result)


def naive_g(n: int, mode: SearchMode = SearchMode.ALL) -> int:
    """
    不剪枝的独立枚举：遍历全部 3^C(n,2) 个赋值，逐个调用 verify_sed

    Raises:
        SearchBoundError: n > 5
    """
    if n < 1:
        raise InvalidSpecError(f"阶数必须 ≥ 1: {n}")
    if n > NAIVE_MAX_N:
        raise SearchBoundError(f"朴素枚举仅支持 n ≤ {NAIVE_MAX_N}，当前 n={n}")

    mode = SearchMode(mode)
    pairs = list(combinations(range(n), 2))
    best = 0
    for values in product((0, 1, -1), repeat=len(pairs)):
        edges = tuple((u, v, x) for (u, v), x in zip(pairs, values) if x)
        total = sum(x for _, _, x in edges)
        if total >= best:
            continue
        g = SignedGraph(n, edges)
        if not verify_sed(g).is_sed:
            continue
        if mode == SearchMode.RESTRICTED_CLASS and not restricted_class_check(g):
            continue
        best = total
    return best


def enumerate_sed_pairs(n: int) -> Iterator[SignedGraph]:
    """按字典序枚举 n ≤ 5 阶的全部 SED-pair（含空图）"""
    if n > NAIVE_MAX_N:
        raise SearchBoundError(f"朴素枚举仅支持 n ≤ {NAIVE_MAX_N}，当前 n={n}")
    pairs = list(combinations(range(n), 2))
    for values in product((0, 1, -1), repeat=len(pairs)):
        g = SignedGraph(n, tuple((u, v, x) for (u, v), x in zip(pairs, values) if x))
        if verify_sed(g).is_sed:
            yield g


def verify_lower_bounds(results: Sequence[SearchResult]) -> bool:
    """
    检查 g(n) ≥ −n²/25（ALL）与 g(n) ≥ −n²/54（RESTRICTED_CLASS）

    Raises:
        BoundViolationError: 某个结果低于对应下界
    """
    for result in results:
        denominator = 25 if result.mode == SearchMode.ALL else 54
        if denominator * result.g_value < -result.n * result.n:
            raise BoundViolationError(
                f"n={result.n}, mode={result.mode.value}: g={result.g_value} 低于 −n²/{denominator}",
                result,
            )
    return True
