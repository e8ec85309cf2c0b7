"""
Σdeg² 极值模块测试

暴力枚举作为 F(n, e) 的预言机。
"""

import math
import os
import sys

import networkx as nx
import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sedpair.builders.extremal import (
    ExtremalSpec,
    asymptotic_ratio,
    brute_force_f_max,
    crossover_identity_check,
    f_max,
    g_func,
    h_func,
    quasi_complete,
    quasi_star,
    sum_deg_sq,
)
from sedpair.core.errors import DomainError, InvalidSpecError, SearchBoundError
from sedpair.core.signed_graph import SignedGraph


def _plain(graph: nx.Graph) -> SignedGraph:
    return SignedGraph.from_networkx(graph)


# =========================================================================
# 分解与极值图
# =========================================================================

class TestDecomposition:
    @pytest.mark.parametrize("n, e, a, b", [(4, 0, 1, 0), (4, 3, 3, 0), (4, 4, 3, 1), (6, 14, 5, 4), (6, 15, 6, 0)])
    def test_complete_decomposition(self, n, e, a, b):
        spec = ExtremalSpec(n, e)
        assert (spec.a, spec.b) == (a, b)
        assert e == a * (a - 1) // 2 + spec.b
        assert 0 <= spec.b < spec.a

    def test_star_decomposition(self):
        spec = ExtremalSpec(5, 4)
        assert (spec.c, spec.d) == (4, 0)

    @pytest.mark.parametrize("n, e", [(4, 7), (4, -1), (-1, 0)])
    def test_rejects_out_of_range(self, n, e):
        with pytest.raises(InvalidSpecError):
            ExtremalSpec(n, e)


class TestQuasiGraphs:
    def test_quasi_complete_triangle(self):
        g = quasi_complete(4, 3)
        assert nx.is_isomorphic(g.to_networkx(), nx.disjoint_union(nx.complete_graph(3), nx.empty_graph(1)))
        assert sum_deg_sq(g) == 12

    def test_quasi_complete_pendant(self):
        g = quasi_complete(4, 4)
        assert sorted(g.degrees().tolist(), reverse=True) == [3, 2, 2, 1]
        assert sum_deg_sq(g) == 18

    def test_quasi_complete_empty(self):
        assert quasi_complete(5, 0).m == 0

    def test_quasi_star_is_star(self):
        g = quasi_star(4, 3)
        assert nx.is_isomorphic(g.to_networkx(), nx.star_graph(3))
        assert sum_deg_sq(g) == 12

    def test_quasi_star_full(self):
        assert nx.is_isomorphic(quasi_star(4, 6).to_networkx(), nx.complete_graph(4))

    def test_quasi_star_five(self):
        g = quasi_star(5, 4)
        assert nx.is_isomorphic(g.to_networkx(), nx.star_graph(4))
        assert sum_deg_sq(g) == 20

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_edge_counts(self, n):
        for e in range(n * (n - 1) // 2 + 1):
            assert quasi_complete(n, e).m == e
            assert quasi_star(n, e).m == e


class TestSumDegSq:
    def test_known_graphs(self):
        assert sum_deg_sq(_plain(nx.complete_graph(3))) == 12
        assert sum_deg_sq(_plain(nx.star_graph(3))) == 12
        assert sum_deg_sq(_plain(nx.path_graph(4))) == 10

    def test_ignores_weights(self, triangle_one_negative):
        assert sum_deg_sq(triangle_one_negative) == 12


# =========================================================================
# F(n, e) 与暴力预言机
# =========================================================================

class TestFMax:
    def test_examples(self):
        assert f_max(4, 3) == 12
        assert f_max(4, 4) == 18

    @pytest.mark.parametrize("n", [2, 5, 9])
    def test_complete(self, n):
        assert f_max(n, n * (n - 1) // 2) == n * (n - 1) ** 2

    def test_brute_force_examples(self):
        assert brute_force_f_max(4, 3) == 12
        assert brute_force_f_max(5, 5) == f_max(5, 5)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_matches_brute_force(self, n):
        for e in range(n * (n - 1) // 2 + 1):
            assert f_max(n, e) == brute_force_f_max(n, e), f"n={n}, e={e}"

    @pytest.mark.slow
    def test_matches_brute_force_seven(self):
        for e in range(22):
            assert f_max(7, e) == brute_force_f_max(7, e), f"e={e}"

    def test_brute_force_refuses_large_n(self):
        with pytest.raises(SearchBoundError):
            brute_force_f_max(8, 3)

    def test_brute_force_custom_bound(self):
        with pytest.raises(SearchBoundError):
            brute_force_f_max(5, 3, max_n=4)


# =========================================================================
# 渐近曲线
# =========================================================================

class TestCurves:
    def test_g_values(self):
        assert g_func(0.25) == pytest.approx(0.125)
        assert g_func(1.0) == pytest.approx(1.0)

    def test_h_values(self):
        assert h_func(0.75) == pytest.approx(0.625)
        assert h_func(0.0) == pytest.approx(0.0)
        assert h_func(1.0) == pytest.approx(1.0)

    def test_h_matches_factored_form(self):
        alpha = np.linspace(0.0, 1.0, 101)
        t = np.sqrt(1.0 - alpha)
        np.testing.assert_allclose(h_func(alpha), (1.0 - t) * (t + alpha), atol=1e-14)

    def test_scalar_returns_float(self):
        assert isinstance(g_func(0.5), float)
        assert isinstance(h_func(np.array([0.5])), np.ndarray)

    @pytest.mark.parametrize("alpha", [-0.1, 1.5, float('nan')])
    def test_domain(self, alpha):
        with pytest.raises(DomainError):
            g_func(alpha)
        with pytest.raises(DomainError):
            h_func(alpha)


class TestCrossover:
    def test_signs(self):
        assert crossover_identity_check(0.25) > 0
        assert crossover_identity_check(0.75) < 0
        assert abs(crossover_identity_check(0.5)) < 1e-12

    @pytest.mark.parametrize("alpha", np.round(np.concatenate([np.arange(0.1, 0.46, 0.05), np.arange(0.55, 0.91, 0.05)]), 2))
    def test_identity_across_range(self, alpha):
        diff = crossover_identity_check(alpha)
        assert (diff > 0) == (alpha < 0.5)

    @pytest.mark.parametrize("alpha", [0.0, 1.0])
    def test_open_interval(self, alpha):
        with pytest.raises(DomainError):
            crossover_identity_check(alpha)


class TestAsymptotics:
    @pytest.mark.parametrize("alpha", [0.2, 0.5, 0.8])
    def test_relative_deviation_shrinks(self, alpha):
        target = max(g_func(alpha), h_func(alpha))
        deviations = [abs(asymptotic_ratio(n, alpha) - target) / target for n in (20, 40, 80)]
        assert deviations[0] > deviations[1] > deviations[2]
        assert deviations[2] < 0.05

    def test_crossover_point(self):
        assert math.isclose(g_func(0.5), h_func(0.5), abs_tol=1e-12)
