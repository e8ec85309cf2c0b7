"""
SED-pair 工具包 - 核心模块
"""

from .config import Config, default_config
from .edge_list import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .errors import (
    BoundViolationError,
    ContractError,
    DomainError,
    EdgeListParseError,
    InvalidGraphError,
    InvalidSpecError,
    PellOverflowError,
    SearchBoundError,
    SedPairError,
    SingularityError,
)
from .signed_graph import (
    SedReport,
    SignedGraph,
    check_adjacent_vertex_sum_lemma,
    edge_neighborhood_sum,
    sign_partition,
    verify_sed,
    vertex_sums,
)

__all__ = [
    'Config',
    'default_config',
    'SignedGraph',
    'SedReport',
    'vertex_sums',
    'edge_neighborhood_sum',
    'verify_sed',
    'check_adjacent_vertex_sum_lemma',
    'sign_partition',
    'format_edge_list',
    'parse_edge_list',
    'read_edge_list',
    'write_edge_list',
    'SedPairError',
    'InvalidGraphError',
    'InvalidSpecError',
    'DomainError',
    'SingularityError',
    'ContractError',
    'SearchBoundError',
    'BoundViolationError',
    'PellOverflowError',
    'EdgeListParseError',
]
