"""
k 倍膨胀与顶点增广

原图顶点 v 的第 c 个副本编号为 v·k + c；副本之间相邻当且仅当原顶点相邻，
同一顶点的副本之间不连边。
"""

from dataclasses import dataclass
from typing import List, Union

from ..core.errors import InvalidSpecError
from ..core.signed_graph import SignedGraph, verify_sed, vertex_sums


@dataclass(frozen=True)
class BlowupSpec:
    """膨胀倍数"""

    k: int

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise InvalidSpecError(f"膨胀倍数必须为 ≥ 1 的整数: {self.k}")


def _multiplicity(k: Union[int, BlowupSpec]) -> int:
    if isinstance(k, BlowupSpec):
        return k.k
    return BlowupSpec(k).k


def blow_up(g: SignedGraph, k: Union[int, BlowupSpec]) -> SignedGraph:
    """
    k 倍膨胀

    Args:
        g: 原图
        k: 倍数或 BlowupSpec

    Returns:
        n·k 个顶点、k²·m 条边的符号图；副本边沿用原边权重
    """
    k = _multiplicity(k)
    edges = []
    for u, v, w in g.edges:
        for c in range(k):
            for d in range(k):
                edges.append((u * k + c, v * k + d, w))
    return SignedGraph(g.n * k, tuple(edges))


def apex_augment(g: SignedGraph) -> SignedGraph:
    """新增顶点 n，并用 +1 边连接所有原顶点"""
    apex = g.n
    edges = g.edges + tuple((v, apex, 1) for v in range(g.n))
    return SignedGraph(g.n + 1, edges)


def stretch(g: SignedGraph, k: Union[int, BlowupSpec]) -> SignedGraph:
    """先膨胀再增广顶点；对 SED-pair 结果仍是 SED-pair"""
    return apex_augment(blow_up(g, k))


def restricted_class_check(g: SignedGraph) -> bool:
    """
    判断 g 是否属于受限类

    受限类要求：每条 −1 边连接 V₊ 与 V₋，每条 +1 边的两端都在 V₊。
    """
    sums = vertex_sums(g)
    for u, v, w in g.edges:
        u_plus, v_plus = sums[u] >= 0, sums[v] >= 0
        if w == -1 and u_plus == v_plus:
            return False
        if w == 1 and not (u_plus and v_plus):
            return False
    return True


@dataclass(frozen=True)
class BlowupRemarkReport:
    """膨胀图上闭边邻域和的检查结果"""

    k: int
    min_neighborhood_sum: int
    zero_sum_edges: List[int]
    holds: bool


def check_blowup_remark(g: SignedGraph, k: Union[int, BlowupSpec]) -> BlowupRemarkReport:
    """
    检查 SED-pair 的 k 倍膨胀：每个闭边邻域和 ≥ 0，
    且和为 0 的边权重为 +1、两端原顶点都在 V₊

    没有和为 0 的边时第二条自动成立。
    """
    k = _multiplicity(k)
    blown = blow_up(g, k)
    report = verify_sed(blown)
    original_sums = vertex_sums(g)

    zero_edges = [i for i, value in enumerate(report.edge_neighborhood_sums) if value == 0]
    holds = all(value >= 0 for value in report.edge_neighborhood_sums)
    for i in zero_edges:
        u, v, w = blown.edges[i]
        if w != 1 or original_sums[u // k] < 0 or original_sums[v // k] < 0:
            holds = False

    return BlowupRemarkReport(
        k=k,
        min_neighborhood_sum=min(report.edge_neighborhood_sums, default=0),
        zero_sum_edges=zero_edges,
        holds=holds,
    )
