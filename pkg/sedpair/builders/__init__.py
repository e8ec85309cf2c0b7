"""
SED-pair 工具包 - 构造器模块
"""

from .blowup import BlowupSpec, apex_augment, blow_up, check_blowup_remark, restricted_class_check, stretch
from .constructions import (
    THEOREM2_LIMIT,
    CirculantBipartiteSpec,
    CirculantSpec,
    PellPair,
    Theorem2Construction,
    apex_star,
    circulant_bipartite,
    circulant_unipartite,
    complete_graph,
    pell_solution,
    pell_solutions,
    theorem2_bound_check,
    theorem2_construction,
)
from .extremal import (
    ExtremalSpec,
    brute_force_f_max,
    crossover_identity_check,
    f_max,
    g_func,
    h_func,
    quasi_complete,
    quasi_star,
    sum_deg_sq,
)

__all__ = [
    'PellPair',
    'CirculantBipartiteSpec',
    'CirculantSpec',
    'Theorem2Construction',
    'THEOREM2_LIMIT',
    'pell_solutions',
    'pell_solution',
    'circulant_bipartite',
    'circulant_unipartite',
    'complete_graph',
    'apex_star',
    'theorem2_construction',
    'theorem2_bound_check',
    'BlowupSpec',
    'blow_up',
    'apex_augment',
    'stretch',
    'restricted_class_check',
    'check_blowup_remark',
    'ExtremalSpec',
    'quasi_complete',
    'quasi_star',
    'sum_deg_sq',
    'f_max',
    'brute_force_f_max',
    'g_func',
    'h_func',
    'crossover_identity_check',
]
