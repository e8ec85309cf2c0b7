"""
SED-pair 工具包 - 符号图核心模块

负责符号图数据模型、SED 条件验证，以及全部论证所依赖的基本求和量：
- s_v：与顶点 v 关联的边权之和
- N[e] 闭边邻域和：利用恒等式 s_u + s_v − w(e) 计算
- s[(G,f)]：总权重
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from .errors import ContractError, InvalidGraphError

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class SignedGraph:
    """
    带 ±1 边权的简单无向图

    顶点为 0..n-1 的稠密整数下标；边为 (u, v, w) 三元组。
    构造时校验：无自环、无重边、下标越界、权重必须为 ±1。
    """

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"顶点数不能为负: {self.n}")

        normalized = []
        seen = set()
        for edge in self.edges:
            try:
                u, v, w = edge
            except (TypeError, ValueError):
                raise InvalidGraphError(f"边必须是 (u, v, w) 三元组: {edge!r}")
            u, v, w = int(u), int(v), int(w)

            if u == v:
                raise InvalidGraphError(f"不允许自环: ({u}, {v})")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraphError(f"顶点下标越界: ({u}, {v})，n={self.n}")
            if w not in (1, -1):
                raise InvalidGraphError(f"权重必须为 +1 或 -1: {w}")

            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidGraphError(f"重复的边: {key}")
            seen.add(key)
            normalized.append((u, v, w))

        object.__setattr__(self, 'edges', tuple(normalized))

    @property
    def m(self) -> int:
        """边数"""
        return len(self.edges)

    @property
    def positive_edges(self) -> List[Edge]:
        """E₊"""
        return [e for e in self.edges if e[2] == 1]

    @property
    def negative_edges(self) -> List[Edge]:
        """E₋"""
        return [e for e in self.edges if e[2] == -1]

    @cached_property
    def edge_array(self) -> np.ndarray:
        """(m, 3) 的 int64 数组，列依次为 u, v, w"""
        if not self.edges:
            return np.zeros((0, 3), dtype=np.int64)
        return np.asarray(self.edges, dtype=np.int64)

    @cached_property
    def _vertex_sums(self) -> np.ndarray:
        sums = np.zeros(self.n, dtype=np.int64)
        if self.edges:
            arr = self.edge_array
            np.add.at(sums, arr[:, 0], arr[:, 2])
            np.add.at(sums, arr[:, 1], arr[:, 2])
        sums.setflags(write=False)
        return sums

    def degrees(self) -> np.ndarray:
        """每个顶点的度（忽略权重）"""
        if not self.edges:
            return np.zeros(self.n, dtype=np.int64)
        arr = self.edge_array
        return np.bincount(arr[:, :2].ravel(), minlength=self.n).astype(np.int64)

    def complement(self) -> "SignedGraph":
        """补图，边权全部为 +1"""
        present = {(u, v) if u < v else (v, u) for u, v, _ in self.edges}
        return SignedGraph(self.n, tuple((u, v, 1) for u, v in combinations(range(self.n), 2) if (u, v) not in present))

    def to_networkx(self) -> nx.Graph:
        """转换为 networkx 图，边属性 weight 保存 ±1"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_weighted_edges_from(self.edges)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph, weight: str = 'weight', default: int = 1) -> "SignedGraph":
        """
        从 networkx 图构造

        Args:
            graph: 无向简单图；非整数标签按排序重新编号
            weight: 权重属性名
            default: 缺少权重属性时使用的值
        """
        if graph.is_directed() or graph.is_multigraph():
            raise InvalidGraphError("仅支持无向简单图")

        nodes = list(graph.nodes())
        if set(nodes) != set(range(len(nodes))):
            graph = nx.convert_node_labels_to_integers(graph, ordering='sorted')

        edges = [(u, v, data.get(weight, default)) for u, v, data in graph.edges(data=True)]
        return cls(graph.number_of_nodes(), tuple(edges))

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, m={self.m}, |E+|={len(self.positive_edges)}, |E-|={len(self.negative_edges)})"


@dataclass(frozen=True)
class SedReport:
    """SED 验证报告"""

    vertex_sums: Tuple[int, ...]
    edge_neighborhood_sums: Tuple[int, ...]
    total_weight: int
    is_sed: bool

    @property
    def failing_edges(self) -> List[int]:
        """闭邻域和小于 1 的边下标"""
        return [i for i, value in enumerate(self.edge_neighborhood_sums) if value < 1]


def vertex_sums(g: SignedGraph) -> np.ndarray:
    """
    计算每个顶点的 s_v

    Returns:
        长度为 n 的只读 int64 数组
    """
    return g._vertex_sums


def edge_neighborhood_sum(g: SignedGraph, e: int) -> int:
    """
    计算第 e 条边的闭边邻域权重和

    Raises:
        IndexError: 边下标越界
    """
    if not 0 <= e < g.m:
        raise IndexError(f"边下标越界: {e}，共 {g.m} 条边")
    u, v, w = g.edges[e]
    sums = vertex_sums(g)
    return int(sums[u] + sums[v] - w)


def verify_sed(g: SignedGraph) -> SedReport:
    """
    验证 (G, f) 是否为 SED-pair

    无边的图视为 SED-pair（空真），总权重为 0。
    """
    sums = vertex_sums(g)
    if g.m == 0:
        return SedReport(tuple(sums.tolist()), (), 0, True)

    arr = g.edge_array
    neighborhood = sums[arr[:, 0]] + sums[arr[:, 1]] - arr[:, 2]
    return SedReport(
        vertex_sums=tuple(sums.tolist()),
        edge_neighborhood_sums=tuple(neighborhood.tolist()),
        total_weight=int(arr[:, 2].sum()),
        is_sed=bool(np.all(neighborhood >= 1)),
    )


def check_adjacent_vertex_sum_lemma(g: SignedGraph) -> bool:
    """
    检查 SED-pair 上每条边 (u, v) 满足 s_u + s_v ≥ 0

    Raises:
        ContractError: g 不是 SED-pair
    """
    if not verify_sed(g).is_sed:
        raise ContractError("相邻顶点和引理只适用于 SED-pair")
    if g.m == 0:
        return True
    sums = vertex_sums(g)
    arr = g.edge_array
    return bool(np.all(sums[arr[:, 0]] + sums[arr[:, 1]] >= 0))


def sign_partition(g: SignedGraph) -> Tuple[List[int], List[int]]:
    """
    按 s_v 的符号划分顶点

    Returns:
        (V₊, V₋)，V₊ = {v : s_v ≥ 0}，V₋ = {v : s_v < 0}
    """
    sums = vertex_sums(g)
    v_plus = [v for v in range(g.n) if sums[v] >= 0]
    v_minus = [v for v in range(g.n) if sums[v] < 0]
    return v_plus, v_minus


def disjoint_union_edges(*edge_sets: Iterable[Edge], names: Optional[List[str]] = None) -> Tuple[Edge, ...]:
    """
    合并若干边集，并要求它们两两不相交（按无序顶点对判断）

    Raises:
        ContractError: 存在公共顶点对
    """
    owner: Dict[Tuple[int, int], int] = {}
    merged = []
    for index, edge_set in enumerate(edge_sets):
        for u, v, w in edge_set:
            key = (u, v) if u < v else (v, u)
            if key in owner:
                first = names[owner[key]] if names else owner[key]
                second = names[index] if names else index
                raise ContractError(f"边集 {first} 与 {second} 相交于 {key}")
            owner[key] = index
            merged.append((u, v, w))
    return tuple(merged)
