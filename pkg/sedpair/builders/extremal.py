"""
Σdeg² 的极值图：准完全图、准星图与 F(n, e)

以及 α ∈ [0, 1] 上的两条渐近曲线 G(α) = α^{3/2}、H(α) = (1 − √(1−α))(√(1−α) + α)。
"""

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, islice
from typing import Union

import networkx as nx
import numpy as np

from ..core.errors import ContractError, DomainError, InvalidSpecError, SearchBoundError
from ..core.signed_graph import SignedGraph

IDENTITY_TOL = 1.0e-12
BRUTE_FORCE_MAX_N = 7

_CHUNK = 4096


def _choose2(n: int) -> int:
    return n * (n - 1) // 2


def _decompose(e: int):
    """e = C(a,2) + b，0 ≤ b < a"""
    a = (1 + math.isqrt(1 + 8 * e)) // 2
    return a, e - _choose2(a)


@dataclass(frozen=True)
class ExtremalSpec:
    """(n, e) 及其两种唯一分解"""

    n: int
    e: int

    def __post_init__(self):
        if self.n < 0:
            raise InvalidSpecError(f"n 不能为负: {self.n}")
        if not 0 <= self.e <= _choose2(self.n):
            raise InvalidSpecError(f"边数越界: e={self.e}，应在 [0, {_choose2(self.n)}]")

    @cached_property
    def complete_decomposition(self):
        """(a, b)：e = C(a,2) + b"""
        return _decompose(self.e)

    @cached_property
    def star_decomposition(self):
        """(c, d)：C(n,2) − e = C(c,2) + d"""
        return _decompose(_choose2(self.n) - self.e)

    @property
    def a(self) -> int:
        return self.complete_decomposition[0]

    @property
    def b(self) -> int:
        return self.complete_decomposition[1]

    @property
    def c(self) -> int:
        return self.star_decomposition[0]

    @property
    def d(self) -> int:
        return self.star_decomposition[1]


def quasi_complete(n: int, e: int) -> SignedGraph:
    """
    准完全图 C_n^e：前 a 个顶点成团，第 a+1 个顶点连向前 b 个顶点

    Raises:
        InvalidSpecError: e 越界
    """
    spec = ExtremalSpec(n, e)
    a, b = spec.a, spec.b
    edges = [(u, v, 1) for u, v in combinations(range(min(a, n)), 2)]
    edges.extend((u, a, 1) for u in range(b))
    return SignedGraph(n, tuple(edges))


def quasi_star(n: int, e: int) -> SignedGraph:
    """准星图 S_n^e，取 C_n^{C(n,2)−e} 的补图"""
    spec = ExtremalSpec(n, e)
    base = quasi_complete(n, _choose2(n) - spec.e).to_networkx()
    complement = nx.complement(base)
    edges = sorted((min(u, v), max(u, v)) for u, v in complement.edges())
    return SignedGraph(n, tuple((u, v, 1) for u, v in edges))


def sum_deg_sq(g: SignedGraph) -> int:
    """Σ deg(v)²，忽略权重"""
    degrees = g.degrees()
    return int((degrees * degrees).sum())


def f_max(n: int, e: int) -> int:
    """F(n, e)：准完全图与准星图的 Σdeg² 较大者"""
    return max(sum_deg_sq(quasi_complete(n, e)), sum_deg_sq(quasi_star(n, e)))


def brute_force_f_max(n: int, e: int, max_n: int = BRUTE_FORCE_MAX_N) -> int:
    """
    穷举全部 n 顶点 e 边的标号图，求 Σdeg² 的精确最大值

    Args:
        n: 顶点数
        e: 边数
        max_n: 允许穷举的最大阶数

    Raises:
        SearchBoundError: n 超过 max_n
        InvalidSpecError: e 越界
    """
    if n > max_n:
        raise SearchBoundError(f"暴力枚举仅支持 n ≤ {max_n}，当前 n={n}")
    ExtremalSpec(n, e)
    if e == 0:
        return 0

    pairs = list(combinations(range(n), 2))
    incidence = np.zeros((len(pairs), n), dtype=np.int64)
    for index, (u, v) in enumerate(pairs):
        incidence[index, u] = 1
        incidence[index, v] = 1

    best = 0
    subsets = combinations(range(len(pairs)), e)
    while True:
        chunk = list(islice(subsets, _CHUNK))
        if not chunk:
            break
        degrees = incidence[np.asarray(chunk)].sum(axis=1)
        best = max(best, int((degrees * degrees).sum(axis=1).max()))
    return best


# =========================================================================
# 渐近曲线
# =========================================================================

def _unit_interval(alpha, name: str) -> np.ndarray:
    values = np.asarray(alpha, dtype=float)
    if np.any(np.isnan(values)) or np.any(values < 0.0) or np.any(values > 1.0):
        raise DomainError(f"{name} 的参数必须在 [0, 1] 内: {alpha}")
    return values


def _as_output(values: np.ndarray, alpha) -> Union[float, np.ndarray]:
    return float(values) if np.ndim(alpha) == 0 else values


def g_func(alpha):
    """G(α) = α^{3/2}，支持标量与数组"""
    values = _unit_interval(alpha, "G")
    return _as_output(values ** 1.5, alpha)


def h_func(alpha):
    """
    H(α) = (1 − t)(t + α)，t = √(1 − α)

    展开后等于 t³ − 2t² + 1。
    """
    values = _unit_interval(alpha, "H")
    t = np.sqrt(1.0 - values)
    return _as_output(t ** 3 - 2.0 * t ** 2 + 1.0, alpha)


def crossover_identity_check(alpha: float) -> float:
    """
    返回 H(α)² − G(α)²，并检查它等于 t²(1−t)²(2t²−1)

    符号在 (0, 1/2) 上为正、在 (1/2, 1) 上为负；α = 1/2 时只检查恒等式。

    Raises:
        DomainError: α 不在 (0, 1) 内
        ContractError: 恒等式或符号不成立
    """
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"α 必须在 (0, 1) 内: {alpha}")

    t = math.sqrt(1.0 - alpha)
    diff = h_func(alpha) ** 2 - g_func(alpha) ** 2
    identity = t * t * (1.0 - t) ** 2 * (2.0 * t * t - 1.0)
    if abs(diff - identity) > IDENTITY_TOL:
        raise ContractError(f"α={alpha}: H²−G²={diff} 与 t²(1−t)²(2t²−1)={identity} 不一致")

    if alpha < 0.5 and not diff > 0.0:
        raise ContractError(f"α={alpha} < 1/2 时 H²−G² 应为正: {diff}")
    if alpha > 0.5 and not diff < 0.0:
        raise ContractError(f"α={alpha} > 1/2 时 H²−G² 应为负: {diff}")
    return diff


def asymptotic_ratio(n: int, alpha: float) -> float:
    """F(n, e)/n³，其中 e = round(α n²/2) 截断到 [0, C(n,2)]"""
    _unit_interval(alpha, "F")
    e = min(int(round(alpha * n * n / 2.0)), _choose2(n))
    return f_max(n, e) / float(n ** 3)
