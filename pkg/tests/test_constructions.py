"""
构造器测试

覆盖：
- Pell 解（递推与 Z[√2] 闭式一致）
- 循环带状图的度分布
- 极值构造的阶、块和、总权重、SED 性质
- 不建图的比值计算与极限
"""

import math
import os
import sys

import networkx as nx
import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sedpair.builders.constructions import (
    THEOREM2_LIMIT,
    CirculantBipartiteSpec,
    CirculantSpec,
    PellPair,
    apex_star,
    circulant_bipartite,
    circulant_unipartite,
    complete_graph,
    pell_solution,
    pell_solutions,
    theorem2_bound_check,
    theorem2_construction,
)
from sedpair.core.edge_list import format_edge_list, parse_edge_list
from sedpair.core.errors import InvalidSpecError
from sedpair.core.signed_graph import check_adjacent_vertex_sum_lemma, verify_sed, vertex_sums


# =========================================================================
# Pell 方程
# =========================================================================

class TestPell:
    def test_first_four(self):
        pairs = [(s.p, s.q) for s in pell_solutions(4)]
        assert pairs == [(3, 2), (17, 12), (99, 70), (577, 408)]

    def test_closed_form_matches_recurrence(self):
        for k, pair in enumerate(pell_solutions(30), start=1):
            assert pell_solution(k) == pair

    def test_large_index_is_exact(self):
        pair = pell_solution(200)
        assert pair.p * pair.p - 2 * pair.q * pair.q == 1

    def test_rejects_non_solution(self):
        with pytest.raises(InvalidSpecError):
            PellPair(5, 3)

    def test_rejects_bad_count(self):
        with pytest.raises(InvalidSpecError):
            pell_solutions(0)
        with pytest.raises(InvalidSpecError):
            pell_solution(0)


# =========================================================================
# 循环带状图族
# =========================================================================

class TestCirculant:
    @pytest.mark.parametrize("a, b, k, l", [(1, 1, 1, 1), (2, 3, 1, 2), (2, 1, 2, 3), (3, 2, 3, 3), (1, 4, 2, 5)])
    def test_bipartite_degrees(self, a, b, k, l):
        spec = CirculantBipartiteSpec(a, b, k, l)
        g = circulant_bipartite(spec)
        degrees = g.degrees()
        assert g.n == a * l + b * l
        assert set(degrees[:spec.x_size].tolist()) == {b * k}
        assert set(degrees[spec.x_size:].tolist()) == {a * k}
        assert g.m == a * b * l * k

    def test_bipartite_small_case_is_six_cycle(self):
        g = circulant_bipartite(CirculantBipartiteSpec(1, 1, 2, 3))
        assert nx.is_isomorphic(g.to_networkx(), nx.cycle_graph(6))

    def test_bipartite_full_band_is_complete_bipartite(self):
        g = circulant_bipartite(CirculantBipartiteSpec(1, 1, 3, 3))
        assert nx.is_isomorphic(g.to_networkx(), nx.complete_bipartite_graph(3, 3))

    @pytest.mark.parametrize("a, k, l", [(1, 1, 2), (2, 1, 2), (2, 1, 3), (2, 2, 3), (3, 2, 5)])
    def test_unipartite_degrees(self, a, k, l):
        g = circulant_unipartite(CirculantSpec(a, k, l))
        assert g.n == 2 * a * l
        assert set(g.degrees().tolist()) == {2 * a * k}

    def test_unipartite_smallest_is_cycle(self):
        g = circulant_unipartite(CirculantSpec(1, 1, 3))
        assert nx.is_isomorphic(g.to_networkx(), nx.cycle_graph(6))

    def test_negative_weight(self):
        g = circulant_unipartite(CirculantSpec(1, 1, 2), weight=-1)
        assert all(w == -1 for _, _, w in g.edges)

    @pytest.mark.parametrize("args", [(0, 1, 1, 1), (1, 1, 3, 2)])
    def test_bipartite_rejects(self, args):
        with pytest.raises(InvalidSpecError):
            CirculantBipartiteSpec(*args)

    def test_unipartite_requires_k_below_l(self):
        with pytest.raises(InvalidSpecError):
            CirculantSpec(1, 2, 2)

    def test_rejects_zero_weight(self):
        with pytest.raises(InvalidSpecError):
            circulant_bipartite(CirculantBipartiteSpec(1, 1, 1, 1), weight=0)


class TestSmallFamilies:
    def test_complete_graph(self):
        g = complete_graph(5, weight=-1)
        assert g.m == 10
        assert set(vertex_sums(g).tolist()) == {-4}

    def test_single_vertex_complete_graph(self):
        g = complete_graph(1)
        assert g.n == 1 and g.m == 0

    def test_complete_graph_rejects_zero(self):
        with pytest.raises(InvalidSpecError):
            complete_graph(0)

    def test_apex_star(self):
        g = apex_star(4)
        assert g.n == 5
        assert vertex_sums(g).tolist() == [1, 1, 1, 1, 4]


# =========================================================================
# 极值构造
# =========================================================================

@pytest.fixture(scope="module")
def smallest():
    """(3, 2) 对应的 61 阶构造"""
    return theorem2_construction((3, 2))


class TestTheorem2Construction:
    def test_order_and_blocks(self, smallest):
        assert smallest.n == 61
        assert [len(smallest.parts[name]) for name in ('A', 'B', 'C', 'x')] == [18, 12, 30, 1]

    def test_block_sums(self, smallest):
        sums = vertex_sums(smallest.graph)
        expected = {'A': 1, 'B': 10, 'C': -7, 'x': 60}
        for name, value in expected.items():
            block = smallest.parts[name]
            assert np.all(sums[block.start:block.stop] == value)

    def test_sed_and_total(self, smallest):
        report = verify_sed(smallest.graph)
        assert report.is_sed
        assert report.total_weight == -6
        assert check_adjacent_vertex_sum_lemma(smallest.graph)

    def test_no_edges_between_a_and_c(self, smallest):
        for u, v, _ in smallest.graph.edges:
            assert {smallest.part_of(u), smallest.part_of(v)} != {'A', 'C'}

    def test_edge_set_sizes(self, smallest):
        sizes = smallest.edge_set_sizes
        assert sizes['A-B'] == 18 * 12
        assert sizes['B'] == 66
        assert sizes['star'] == 60
        x = smallest.parts['x'].start
        star = {(u, v, w) for u, v, w in smallest.graph.edges if x in (u, v)}
        assert star == set(apex_star(x).edges)
        assert sum(sizes.values()) == smallest.graph.m

    def test_edge_list_is_reproducible(self, smallest):
        text = format_edge_list(smallest.graph)
        assert format_edge_list(theorem2_construction((3, 2)).graph) == text
        assert parse_edge_list(text) == smallest.graph

    def test_second_solution(self):
        construction = theorem2_construction(PellPair(17, 12))
        report = verify_sed(construction.graph)
        assert construction.n == 1973
        assert report.is_sed
        assert report.total_weight == -81056

    def test_rejects_non_pell_pair(self):
        with pytest.raises(InvalidSpecError):
            theorem2_construction((4, 3))


class TestTheorem2Bound:
    def test_matches_built_graph(self):
        bound = theorem2_bound_check((3, 2))
        assert (bound.n, bound.s) == (61, -6)
        assert bound.ratio == pytest.approx(-6 / 3721)

    def test_known_ratios(self):
        assert theorem2_bound_check((3, 2)).ratio == pytest.approx(-0.001612, abs=1e-6)
        assert theorem2_bound_check((17, 12)).ratio == pytest.approx(-0.020822, abs=1e-6)

    def test_ratios_decrease_towards_limit(self):
        ratios = [theorem2_bound_check(pair).ratio for pair in pell_solutions(8)]
        assert all(later < earlier for earlier, later in zip(ratios, ratios[1:]))
        assert abs(ratios[2] - THEOREM2_LIMIT) < 3e-3
        assert abs(ratios[-1] - THEOREM2_LIMIT) < 1e-6
        assert all(r > THEOREM2_LIMIT for r in ratios)

    def test_limit_value(self):
        assert THEOREM2_LIMIT == pytest.approx(-1 / (8 * (1 + math.sqrt(2)) ** 2))
        assert THEOREM2_LIMIT == pytest.approx(-0.021447, abs=1e-6)

    def test_upper_chain(self):
        for pair in pell_solutions(5):
            bound = theorem2_bound_check(pair)
            assert bound.s < bound.upper_chain
