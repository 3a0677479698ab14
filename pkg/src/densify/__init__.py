"""Locally-dense graph decomposition: exact, greedy and k-core chains."""

from .core import CoreResult, core_decomposition
from .exact import AlphaQuery, build_cut_network, compact_graph, exact_ld
from .graph import (
    Chain,
    DomainError,
    Graph,
    LoadStats,
    ParseError,
    cross_edge_count,
    density,
    edge_count,
    load_edge_list,
    marginal_edge_count,
    outer_density,
)
from .greedy import PeelOrder, greedy_ld, maximal_average_intervals, peel
from .metrics import chain_tau_b, kendall_tau_b, profile, profile_ratio, profile_value
from .mincut import FlowNetwork, max_flow, min_cut

__version__ = "0.1.0"

__all__ = [
    "AlphaQuery",
    "Chain",
    "CoreResult",
    "DomainError",
    "FlowNetwork",
    "Graph",
    "LoadStats",
    "ParseError",
    "PeelOrder",
    "build_cut_network",
    "chain_tau_b",
    "compact_graph",
    "core_decomposition",
    "cross_edge_count",
    "density",
    "edge_count",
    "exact_ld",
    "greedy_ld",
    "kendall_tau_b",
    "load_edge_list",
    "marginal_edge_count",
    "max_flow",
    "maximal_average_intervals",
    "min_cut",
    "outer_density",
    "peel",
    "profile",
    "profile_ratio",
    "profile_value",
]
