"""
膨胀与顶点增广测试
"""

import os
import sys

import networkx as nx
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sedpair.builders.blowup import (
    BlowupSpec,
    apex_augment,
    blow_up,
    check_blowup_remark,
    restricted_class_check,
    stretch,
)
from sedpair.core.errors import InvalidSpecError
from sedpair.core.signed_graph import SignedGraph, verify_sed, vertex_sums


# =========================================================================
# blow_up / apex_augment
# =========================================================================

class TestBlowUp:
    def test_k_one_is_identity(self, triangle_one_negative):
        assert blow_up(triangle_one_negative, 1) == triangle_one_negative

    def test_single_edge_becomes_four_cycle(self):
        g = blow_up(SignedGraph(2, ((0, 1, 1),)), 2)
        assert nx.is_isomorphic(g.to_networkx(), nx.complete_bipartite_graph(2, 2))

    def test_copy_labels(self):
        g = blow_up(SignedGraph(2, ((0, 1, -1),)), 3)
        assert {(u // 3, v // 3) for u, v, _ in g.edges} == {(0, 1)}
        assert all(w == -1 for _, _, w in g.edges)

    def test_triangle_one_negative(self, triangle_one_negative):
        g = blow_up(triangle_one_negative, 2)
        assert g.n == 6
        assert g.m == 12
        assert verify_sed(g).total_weight == 4

    @pytest.mark.parametrize("k", [0, -2, 1.5])
    def test_rejects_bad_multiplicity(self, triangle, k):
        with pytest.raises(InvalidSpecError):
            blow_up(triangle, k)

    def test_accepts_spec(self, triangle):
        assert blow_up(triangle, BlowupSpec(3)).n == 9

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_scaling_on_small_sed_pairs(self, small_sed_pairs, k):
        for g in small_sed_pairs:
            blown = blow_up(g, k)
            original_sums = vertex_sums(g)
            blown_sums = vertex_sums(blown)
            for v in range(g.n):
                for c in range(k):
                    assert blown_sums[v * k + c] == k * original_sums[v]
            assert blown.m == k * k * g.m
            assert verify_sed(blown).total_weight == k * k * verify_sed(g).total_weight


class TestApex:
    def test_empty_graph_becomes_star(self):
        g = apex_augment(SignedGraph(3))
        assert nx.is_isomorphic(g.to_networkx(), nx.star_graph(3))
        assert verify_sed(g).total_weight == 3

    def test_stretch_of_sed_pairs(self, small_sed_pairs):
        for g in small_sed_pairs:
            s = verify_sed(g).total_weight
            for k in (1, 2, 3, 4):
                report = verify_sed(stretch(g, k))
                assert report.is_sed
                assert report.total_weight == k * k * s + g.n * k


# =========================================================================
# 膨胀图的邻域和
# =========================================================================

class TestBlowupRemark:
    def test_holds_on_small_sed_pairs(self, small_sed_pairs):
        for g in small_sed_pairs:
            if g.m == 0:
                continue
            report = check_blowup_remark(g, 2)
            assert report.holds
            assert report.min_neighborhood_sum >= 0

    def test_triangle_one_negative(self, triangle_one_negative):
        report = check_blowup_remark(triangle_one_negative, 3)
        assert report.k == 3
        assert report.holds
        assert report.zero_sum_edges == []


# =========================================================================
# 受限类
# =========================================================================

class TestRestrictedClass:
    def test_all_positive_triangle(self, triangle):
        assert restricted_class_check(triangle)

    def test_triangle_one_negative(self, triangle_one_negative):
        assert not restricted_class_check(triangle_one_negative)

    def test_star_with_one_negative_leaf(self):
        # 中心 s=2，负叶子 s=−1，其余叶子 s=1
        g = SignedGraph(5, ((0, 1, -1), (0, 2, 1), (0, 3, 1), (0, 4, 1)))
        assert restricted_class_check(g)

    def test_positive_edge_into_negative_side(self):
        # s = (−1, 1, 0, 1, 2, 1)：−1 边都跨越 V₋/V₊，但 +1 边 (0, 3) 触及 V₋
        g = SignedGraph(6, ((0, 1, -1), (0, 2, -1), (0, 3, 1), (1, 4, 1), (1, 5, 1), (2, 4, 1)))
        assert not restricted_class_check(g)
