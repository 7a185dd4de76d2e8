"""Exact minimum-weight dominating induced matching solver for P8-free graphs."""

from .dimcheck import (
    DominationReport,
    OracleResult,
    check_dim,
    enumerate_dims,
    is_induced_matching,
    matching_weight,
    oracle_min_dim,
)
from .graph import (
    INF,
    WeightedGraph,
    build_graph,
    connected_components,
    edge_neighborhood,
    induced_subgraph,
    neighbors,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .patterns import (
    butterfly_peripheral_edges,
    c4_edges,
    diamond_mid_edges,
    find_induced_p8,
    find_k4,
    p3_witness,
)
from .solver import SolveOptions, SolveOutcome, solve_dim, solve_dim_checked

__version__ = "0.1.0"

__all__ = [
    "INF",
    "KERNEL_BACKEND",
    "DominationReport",
    "OracleResult",
    "SolveOptions",
    "SolveOutcome",
    "WeightedGraph",
    "build_graph",
    "butterfly_peripheral_edges",
    "c4_edges",
    "check_dim",
    "connected_components",
    "diamond_mid_edges",
    "edge_neighborhood",
    "enumerate_dims",
    "find_induced_p8",
    "find_k4",
    "induced_subgraph",
    "is_induced_matching",
    "matching_weight",
    "neighbors",
    "oracle_min_dim",
    "p3_witness",
    "solve_dim",
    "solve_dim_checked",
]
