"""
SED-pair 工具包 - 分析器模块
"""

from .inequalities import LowerBoundSystem, RestrictedSystem, lower_bound_system, restricted_system_check
from .optimization import (
    FLOOR_25,
    FLOOR_54,
    MinimaxCertificate,
    MinimaxSystem,
    WeightBranch,
    appendix_a_minimax,
    appendix_a_t,
    appendix_a_t_prime,
    certify_floor,
    figure_curves,
    k0,
    q_case1,
    q_case2,
    q_case2_at_k0,
    stationary_roots_case1,
    write_curves_csv,
)

__all__ = [
    'LowerBoundSystem',
    'RestrictedSystem',
    'lower_bound_system',
    'restricted_system_check',
    'FLOOR_25',
    'FLOOR_54',
    'MinimaxCertificate',
    'MinimaxSystem',
    'WeightBranch',
    'appendix_a_t',
    'appendix_a_t_prime',
    'appendix_a_minimax',
    'q_case1',
    'q_case2',
    'k0',
    'q_case2_at_k0',
    'stationary_roots_case1',
    'certify_floor',
    'figure_curves',
    'write_curves_csv',
]
