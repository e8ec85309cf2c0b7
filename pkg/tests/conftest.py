"""
共享测试夹具
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from sedpair.core.signed_graph import SignedGraph
from sedpair.search.exact_solver import enumerate_sed_pairs


@pytest.fixture
def triangle():
    """全 +1 三角形"""
    return SignedGraph(3, ((0, 1, 1), (1, 2, 1), (0, 2, 1)))


@pytest.fixture
def triangle_one_negative():
    """{0,1} 上为 −1 的三角形，s = (0, 0, 2)"""
    return SignedGraph(3, ((0, 1, -1), (1, 2, 1), (0, 2, 1)))


@pytest.fixture
def two_edge_path():
    """权重为 (−1, +1) 的两边路径，不是 SED-pair"""
    return SignedGraph(3, ((0, 1, -1), (1, 2, 1)))


@pytest.fixture(scope="session")
def small_sed_pairs():
    """n ≤ 4 的全部 SED-pair（朴素枚举）"""
    graphs = []
    for n in range(1, 5):
        graphs.extend(enumerate_sed_pairs(n))
    return graphs
