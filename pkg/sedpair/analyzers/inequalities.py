"""
具体图上的下界不等式链

对给定的 SED-pair 逐项计算下界论证中出现的量，并检查每一步不等式。
全部使用整数或 Fraction 精确计算。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

from ..builders.blowup import restricted_class_check
from ..builders.extremal import f_max
from ..core.errors import ContractError
from ..core.signed_graph import SignedGraph, sign_partition, verify_sed, vertex_sums


@dataclass
class LowerBoundSystem:
    """一般 SED-pair 的 (y, k) 不等式链"""

    n: int
    total: int
    x: int
    v_plus: int
    y: Fraction
    k: Fraction
    bound_square: Fraction
    bound_product: Fraction
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> List[str]:
        return [name for name, ok in self.checks.items() if not ok]


def lower_bound_system(g: SignedGraph) -> LowerBoundSystem:
    """
    计算 x = −min_{V₋} s_v、y = x/n、k = |V₊|/n 以及两条下界

    两条下界分别为 (y² − k²/2)n² 与 −y(1 − k − y)n²/2。

    Raises:
        ContractError: g 不是 SED-pair
    """
    report = verify_sed(g)
    if not report.is_sed:
        raise ContractError("下界不等式链只适用于 SED-pair")

    n = g.n
    sums = vertex_sums(g)
    v_plus, v_minus = sign_partition(g)
    minus_set = set(v_minus)
    x = -int(min(sums[v] for v in v_minus)) if v_minus else 0
    total = report.total_weight

    if n == 0:
        y = k = Fraction(0)
    else:
        y, k = Fraction(x, n), Fraction(len(v_plus), n)
    bound_square = (y * y - k * k / 2) * n * n
    bound_product = -y * (1 - k - y) * n * n / 2

    negative_neighbours: Dict[int, List[int]] = {v: [] for v in range(n)}
    for u, v, w in g.edges:
        if w == -1:
            negative_neighbours[u].append(v)
            negative_neighbours[v].append(u)

    extreme_ok = True
    for v in v_minus:
        if sums[v] != -x:
            continue
        neighbours = negative_neighbours[v]
        if len(neighbours) < x or any(sums[u] < x for u in neighbours):
            extreme_ok = False

    checks = {
        'v_minus_independent': not any(u in minus_set and v in minus_set for u, v, _ in g.edges),
        'extreme_vertex_neighbours': extreme_ok,
        'v_plus_sum_at_least_x_squared': int(sum(sums[v] for v in v_plus)) >= x * x,
        'total_above_square_bound': total >= bound_square,
        'total_above_product_bound': total >= bound_product,
        'total_above_quarter_floor': 25 * total >= -n * n,
    }

    return LowerBoundSystem(
        n=n,
        total=total,
        x=x,
        v_plus=len(v_plus),
        y=y,
        k=k,
        bound_square=bound_square,
        bound_product=bound_product,
        checks=checks,
    )


@dataclass
class RestrictedSystem:
    """受限类 SED-pair 的度数不等式链"""

    n: int
    total: int
    v_plus: int
    a: Dict[int, int]
    b: Dict[int, int]
    c: Dict[int, int]
    positive_inside: int
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> List[str]:
        return [name for name, ok in self.checks.items() if not ok]


def restricted_system_check(g: SignedGraph) -> RestrictedSystem:
    """
    受限类上的度数链

    a_i: V₊ 中顶点 i 在 G[V₊] 中的度；b_i: i 到 V₋ 的度；c_j: V₋ 中顶点 j 的度。

    Raises:
        ContractError: g 不是受限类 SED-pair
    """
    if not verify_sed(g).is_sed or not restricted_class_check(g):
        raise ContractError("度数链只适用于受限类 SED-pair")

    n = g.n
    v_plus, v_minus = sign_partition(g)
    plus_set = set(v_plus)
    a = {i: 0 for i in v_plus}
    b = {i: 0 for i in v_plus}
    c = {j: 0 for j in v_minus}
    negative_edges = []

    for u, v, w in g.edges:
        if w == 1:
            a[u] += 1
            a[v] += 1
            continue
        i, j = (u, v) if u in plus_set else (v, u)
        b[i] += 1
        c[j] += 1
        negative_edges.append((i, j))

    sum_a_sq = sum(value * value for value in a.values())
    sum_b_sq = sum(value * value for value in b.values())
    sum_ab = sum(a[i] * b[i] for i in v_plus)
    mixed = sum((a[i] - b[i]) * b[i] for i in v_plus)
    sum_c_sq = sum(value * value for value in c.values())
    positive_inside = sum(a.values()) // 2
    total = int(sum(w for _, _, w in g.edges))

    checks = {
        'double_counting': sum(b.values()) == sum(c.values()),
        'negative_edge_gap': all(a[i] - b[i] >= c[j] for i, j in negative_edges),
        'mixed_sum_above_c_squares': mixed >= sum_c_sq,
        # Σa_i b_i ≤ √(Σa_i²·Σb_i²)，平方后整数比较
        'cauchy_schwarz': sum_ab * sum_ab <= sum_a_sq * sum_b_sq,
        'degree_squares_below_f_max': sum_a_sq <= f_max(len(v_plus), positive_inside),
        'total_above_restricted_floor': 54 * total >= -n * n,
    }

    return RestrictedSystem(
        n=n,
        total=total,
        v_plus=len(v_plus),
        a=a,
        b=b,
        c=c,
        positive_inside=positive_inside,
        checks=checks,
    )
