"""Ground truth for dominating induced matchings, and the brute-force oracle.

An edge set M is a d.i.m. when every edge of the graph shares a vertex with
exactly one member of M (members count themselves). The oracle enumerates all
candidates by backtracking and is the independent reference the solver is
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .graph import (
    Edge,
    EdgeNotPresentError,
    GraphError,
    INF,
    Weight,
    WeightedGraph,
    canon_edge,
    is_finite,
    weight_sum,
)

DEFAULT_ORACLE_LIMIT = 26


class GraphTooLargeError(GraphError):
    pass


@dataclass(frozen=True)
class DominationReport:
    counts: dict[Edge, int]
    is_induced_matching: bool
    is_dim: bool


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the exhaustive search: found == False means no d.i.m. at all."""

    found: bool
    matching: tuple[Edge, ...] | None = None
    weight: Weight | None = None


def _canon_matching(g: WeightedGraph, matching: Iterable[Edge]) -> tuple[Edge, ...]:
    out = []
    for e in matching:
        ce = canon_edge(*e)
        if ce not in g.eid:
            raise EdgeNotPresentError(f"matching edge {ce} not in graph")
        out.append(ce)
    return tuple(sorted(set(out)))


def is_induced_matching(g: WeightedGraph, matching: Iterable[Edge]) -> bool:
    """True iff no two members share a vertex or are joined by an edge."""
    edges = _canon_matching(g, matching)
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if len({a, b, c, d}) < 4:
                return False
            if (g.adj[a] | g.adj[b]) & ((1 << c) | (1 << d)):
                return False
    return True


def check_dim(g: WeightedGraph, matching: Iterable[Edge]) -> DominationReport:
    """Per-edge domination counts plus the induced-matching / d.i.m. verdicts."""
    edges = _canon_matching(g, matching)
    counts: dict[Edge, int] = {}
    masks = [(1 << a) | (1 << b) for a, b in edges]
    for e in g.edges:
        em = (1 << e[0]) | (1 << e[1])
        counts[e] = sum(1 for mm in masks if mm & em)
    return DominationReport(
        counts=counts,
        is_induced_matching=is_induced_matching(g, edges),
        is_dim=bool(g.edges == () or all(c == 1 for c in counts.values())),
    )


def matching_weight(g: WeightedGraph, matching: Iterable[Edge]) -> Weight:
    edges = _canon_matching(g, matching)
    return weight_sum(g.edge_weights[g.eid[e]] for e in edges)


def domination_masks(g: WeightedGraph) -> list[int]:
    """dom[i] = mask of edge ids sharing a vertex with edge i (including i)."""
    m = g.m
    at_vertex = [0] * g.n
    for i, (u, v) in enumerate(g.edges):
        at_vertex[u] |= 1 << i
        at_vertex[v] |= 1 << i
    return [at_vertex[u] | at_vertex[v] for u, v in g.edges]


def oracle_min_dim(
    g: WeightedGraph,
    limit: int = DEFAULT_ORACLE_LIMIT,
    backend: str | None = None,
) -> OracleResult:
    """Exhaustive minimum-weight d.i.m. (lexicographically smallest among ties).

    Found with weight INF means d.i.m.s exist but none has finite weight.
    """
    if g.m > limit:
        raise GraphTooLargeError(f"{g.m} edges exceeds oracle limit {limit}")
    if g.m == 0:
        return OracleResult(found=True, matching=(), weight=0)
    dom = domination_masks(g)
    found, mask, weight = kernels.search_min_dim(g.m, dom, list(g.edge_weights), backend)
    if not found:
        return OracleResult(found=False)
    matching = tuple(g.edges[i] for i in range(g.m) if (mask >> i) & 1)
    if not is_finite(weight):
        weight = INF
    return OracleResult(found=True, matching=matching, weight=weight)


def enumerate_dims(g: WeightedGraph, limit: int = DEFAULT_ORACLE_LIMIT) -> list[tuple[Edge, ...]]:
    """All d.i.m.s of g, each as a sorted edge tuple (test helper)."""
    if g.m > limit:
        raise GraphTooLargeError(f"{g.m} edges exceeds oracle limit {limit}")
    if g.m == 0:
        return [()]
    dom = domination_masks(g)
    out = []
    for mask in kernels.enumerate_dims(g.m, dom):
        out.append(tuple(g.edges[i] for i in range(g.m) if (mask >> i) & 1))
    return sorted(out)
