"""
构造器：循环带状图族、完全图、顶点星，以及极值 SED-pair

顶点布局固定为 A 块、B 块、C 块、最后是顶点 x；块内按 (块号, 块内下标) 排列，
保证输出的边表可以逐字节复现。
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple, Union

from ..core.errors import ContractError, InvalidSpecError, PellOverflowError
from ..core.signed_graph import Edge, SignedGraph, disjoint_union_edges, verify_sed, vertex_sums

# s/n² 在 Pell 解序列上的极限
THEOREM2_LIMIT = -1.0 / (8.0 * (1.0 + math.sqrt(2.0)) ** 2)


def _check_weight(weight: int) -> int:
    if weight not in (1, -1):
        raise InvalidSpecError(f"权重必须为 +1 或 -1: {weight}")
    return int(weight)


# =========================================================================
# Pell 方程 p² = 2q² + 1
# =========================================================================

@dataclass(frozen=True)
class PellPair:
    """满足 p² = 2q² + 1 的正整数对"""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise InvalidSpecError(f"p, q 必须为正整数: ({self.p}, {self.q})")
        if self.p * self.p != 2 * self.q * self.q + 1:
            raise InvalidSpecError(f"({self.p}, {self.q}) 不满足 p² = 2q² + 1")


def pell_solutions(count: int) -> List[PellPair]:
    """
    按递推 (p, q) ← (3p + 4q, 2p + 3q) 生成前 count 个正解

    Python 整数为任意精度，递推本身不会溢出。
    """
    if count < 1:
        raise InvalidSpecError(f"count 必须 ≥ 1: {count}")

    solutions = []
    p, q = 3, 2
    for _ in range(count):
        solutions.append(PellPair(p, q))
        p, q = 3 * p + 4 * q, 2 * p + 3 * q
    return solutions


def pell_solution(k: int) -> PellPair:
    """
    第 k 个正解，由 (3 + 2√2)^k = p + q√2 在 Z[√2] 中精确计算
    """
    if k < 1:
        raise InvalidSpecError(f"解序号必须 ≥ 1: {k}")

    # (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
    result = (1, 0)
    base = (3, 2)
    while k:
        if k & 1:
            result = (result[0] * base[0] + 2 * result[1] * base[1], result[0] * base[1] + result[1] * base[0])
        base = (base[0] * base[0] + 2 * base[1] * base[1], 2 * base[0] * base[1])
        k >>= 1
    return PellPair(*result)


# =========================================================================
# 循环带状图族
# =========================================================================

@dataclass(frozen=True)
class CirculantBipartiteSpec:
    """
    K_{X,Y,k/l} 的参数

    X 分为 a 块、Y 分为 b 块，每块 l 个顶点；块对之间按 (g − h) mod l 的带宽 k 连边。
    """

    a: int
    b: int
    k: int
    l: int

    def __post_init__(self):
        if min(self.a, self.b, self.k, self.l) < 1:
            raise InvalidSpecError(f"a, b, k, l 必须 ≥ 1: {self}")
        if self.k > self.l:
            raise InvalidSpecError(f"要求 k ≤ l: k={self.k}, l={self.l}")

    @property
    def x_size(self) -> int:
        return self.a * self.l

    @property
    def y_size(self) -> int:
        return self.b * self.l


@dataclass(frozen=True)
class CirculantSpec:
    """
    K_{X,k/l} 的参数

    X 分为 2l 块、每块 a 个顶点；块 i 与块 j 相邻当且仅当 (i − j) mod 2l 落在 ±{1..k}。
    """

    a: int
    k: int
    l: int

    def __post_init__(self):
        if min(self.a, self.k, self.l) < 1:
            raise InvalidSpecError(f"a, k, l 必须 ≥ 1: {self}")
        if self.k >= self.l:
            raise InvalidSpecError(f"要求 k < l: k={self.k}, l={self.l}")

    @property
    def size(self) -> int:
        return 2 * self.a * self.l


def _circulant_bipartite_edges(spec: CirculantBipartiteSpec, weight: int,
                               x_offset: int = 0, y_offset: int = None) -> Iterator[Edge]:
    """K_{X,Y,k/l} 的边；k = l 时余数集覆盖整个 Z_l"""
    if y_offset is None:
        y_offset = x_offset + spec.x_size

    l = spec.l
    residues = {r % l for r in range(1, spec.k + 1)}
    partners = [[h for h in range(l) if (g - h) % l in residues] for g in range(l)]

    for i in range(spec.a):
        x_base = x_offset + i * l
        for j in range(spec.b):
            y_base = y_offset + j * l
            for g in range(l):
                for h in partners[g]:
                    yield (x_base + g, y_base + h, weight)


def _circulant_edges(spec: CirculantSpec, weight: int, offset: int = 0) -> Iterator[Edge]:
    """K_{X,k/l} 的边"""
    blocks = 2 * spec.l
    band = set(range(1, spec.k + 1)) | set(range(blocks - spec.k, blocks))

    for i in range(blocks):
        for j in range(i + 1, blocks):
            if (i - j) % blocks not in band:
                continue
            for x in range(spec.a):
                for y in range(spec.a):
                    yield (offset + i * spec.a + x, offset + j * spec.a + y, weight)


def _complete_edges(vertices: Sequence[int], weight: int) -> Iterator[Edge]:
    for index, u in enumerate(vertices):
        for v in vertices[index + 1:]:
            yield (u, v, weight)


def circulant_bipartite(spec: CirculantBipartiteSpec, weight: int = 1) -> SignedGraph:
    """
    生成 K_{X,Y,k/l}

    X 在前（下标 0..al−1），Y 在后；X 中顶点度为 bk，Y 中顶点度为 ak。
    """
    weight = _check_weight(weight)
    return SignedGraph(spec.x_size + spec.y_size, tuple(_circulant_bipartite_edges(spec, weight)))


def circulant_unipartite(spec: CirculantSpec, weight: int = 1) -> SignedGraph:
    """生成 K_{X,k/l}，每个顶点度为 2ak"""
    weight = _check_weight(weight)
    return SignedGraph(spec.size, tuple(_circulant_edges(spec, weight)))


def complete_graph(n: int, weight: int = 1) -> SignedGraph:
    """带统一权重的完全图 K_n"""
    if n < 1:
        raise InvalidSpecError(f"n 必须 ≥ 1: {n}")
    weight = _check_weight(weight)
    return SignedGraph(n, tuple(_complete_edges(range(n), weight)))


def apex_star(n_targets: int, weight: int = 1) -> SignedGraph:
    """顶点 n_targets（最后一个）与 0..n_targets−1 全部相连的星"""
    if n_targets < 0:
        raise InvalidSpecError(f"叶子数不能为负: {n_targets}")
    weight = _check_weight(weight)
    return SignedGraph(n_targets + 1, tuple((v, n_targets, weight) for v in range(n_targets)))


# =========================================================================
# 极值 SED-pair
# =========================================================================

@dataclass(frozen=True)
class Theorem2Construction:
    """极值构造的结果：图、Pell 参数与命名顶点块"""

    graph: SignedGraph
    pell: PellPair
    parts: Dict[str, range]
    edge_set_sizes: Dict[str, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.graph.n

    def part_of(self, v: int) -> str:
        for name, block in self.parts.items():
            if v in block:
                return name
        raise IndexError(f"顶点越界: {v}")


def theorem2_order(pq: PellPair) -> int:
    """n = 4(p + q)p + 1"""
    return 4 * (pq.p + pq.q) * pq.p + 1


def theorem2_total_weight(pq: PellPair) -> int:
    """s = −2p²q² + 4p² + 5pq"""
    p, q = pq.p, pq.q
    return -2 * p * p * q * q + 4 * p * p + 5 * p * q


def theorem2_expected_sums(pq: PellPair) -> Dict[str, int]:
    """各顶点块上 s_v 的理论值"""
    p, q = pq.p, pq.q
    return {
        'A': 1,
        'B': 2 * p * p - 2 * q * q,
        'C': 1 - 2 * q * q,
        'x': 4 * p * (p + q),
    }


def theorem2_construction(pq: Union[PellPair, Tuple[int, int]]) -> Theorem2Construction:
    """
    构造阶为 4(p+q)p + 1 的极值 SED-pair

    E₊ = K_{A,B,1/1} ∪ K_B ∪ 以 x 为中心覆盖 A∪B∪C 的星
    E₋ = K_{A,q/p} ∪ K_{B,C,q/p}

    Raises:
        InvalidSpecError: (p, q) 不满足 Pell 方程
        ContractError: 构造后的断言不成立
    """
    if not isinstance(pq, PellPair):
        pq = PellPair(*pq)
    p, q = pq.p, pq.q

    size_a, size_b, size_c = 2 * p * p, 2 * p * q, 2 * (p + q) * p
    a_block = range(0, size_a)
    b_block = range(size_a, size_a + size_b)
    c_block = range(b_block.stop, b_block.stop + size_c)
    x = c_block.stop
    parts = {'A': a_block, 'B': b_block, 'C': c_block, 'x': range(x, x + 1)}

    edge_sets = {
        'A-B': list(_circulant_bipartite_edges(CirculantBipartiteSpec(a=size_a, b=size_b, k=1, l=1), 1,
                                               x_offset=a_block.start, y_offset=b_block.start)),
        'B': list(_complete_edges(b_block, 1)),
        'star': list(apex_star(x).edges),
        'A': list(_circulant_edges(CirculantSpec(a=p, k=q, l=p), -1, offset=a_block.start)),
        'B-C': list(_circulant_bipartite_edges(CirculantBipartiteSpec(a=2 * q, b=2 * (p + q), k=q, l=p), -1,
                                               x_offset=b_block.start, y_offset=c_block.start)),
    }
    edges = disjoint_union_edges(*edge_sets.values(), names=list(edge_sets))

    construction = Theorem2Construction(
        graph=SignedGraph(x + 1, edges),
        pell=pq,
        parts=parts,
        edge_set_sizes={name: len(es) for name, es in edge_sets.items()},
    )
    _check_theorem2_postconditions(construction)
    return construction


def _check_theorem2_postconditions(construction: Theorem2Construction) -> None:
    graph, pq, parts = construction.graph, construction.pell, construction.parts

    if graph.n != theorem2_order(pq):
        raise ContractError(f"阶数不符: {graph.n} != {theorem2_order(pq)}")

    a_block, c_block = parts['A'], parts['C']
    for u, v, _ in graph.edges:
        if (u in a_block and v in c_block) or (v in a_block and u in c_block):
            raise ContractError(f"存在 A–C 边: ({u}, {v})")

    sums = vertex_sums(graph)
    for name, expected in theorem2_expected_sums(pq).items():
        block = parts[name]
        actual = sums[block.start:block.stop]
        if not (actual == expected).all():
            raise ContractError(f"块 {name} 的 s_v 应为 {expected}，实际为 {sorted(set(actual.tolist()))}")

    report = verify_sed(graph)
    if not report.is_sed:
        raise ContractError(f"构造结果不是 SED-pair，失败边数 {len(report.failing_edges)}")
    if report.total_weight != theorem2_total_weight(pq):
        raise ContractError(f"总权重 {report.total_weight} 与公式值 {theorem2_total_weight(pq)} 不符")


@dataclass(frozen=True)
class Theorem2Bound:
    """极值构造的界：精确的 n、s 与比值 s/n²"""

    pell: PellPair
    n: int
    s: int
    ratio: float
    upper_chain: Fraction

    @property
    def limit(self) -> float:
        return THEOREM2_LIMIT


def theorem2_bound_check(pq: Union[PellPair, Tuple[int, int]]) -> Theorem2Bound:
    """
    不建图，直接由公式精确计算 n、s 与 s/n²

    同时校验 s < −n(n−2)q²/(8(p+q)²) + 2n。
    """
    if not isinstance(pq, PellPair):
        pq = PellPair(*pq)
    p, q = pq.p, pq.q

    n = theorem2_order(pq)
    s = theorem2_total_weight(pq)
    upper_chain = Fraction(-n * (n - 2) * q * q, 8 * (p + q) ** 2) + 2 * n
    if not s < upper_chain:
        raise ContractError(f"s={s} 未落在 {upper_chain} 之下")

    try:
        ratio = float(Fraction(s, n * n))
    except OverflowError as e:
        raise PellOverflowError(f"s/n² 无法转换为浮点数: {e}")

    return Theorem2Bound(pell=pq, n=n, s=s, ratio=ratio, upper_chain=upper_chain)
