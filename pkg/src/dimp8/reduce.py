"""Mutable solver overlay over an immutable graph.

A SolverState tracks which vertices are still alive, which edges have been
overridden to infinite weight, and the matching accumulated so far. The
reduction step commits an edge to the matching: it checks compatibility,
deletes the endpoints, and marks every surviving edge at distance 1 from the
committed edge as infinite (such edges can never join a finite matching that
contains it).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dimcheck import check_dim, is_induced_matching, matching_weight
from .graph import (
    Edge,
    GraphError,
    INF,
    Weight,
    WeightedGraph,
    canon_edge,
    build_graph,
    is_finite,
    iter_bits,
)
from .patterns import butterfly_peripheral_edges, c4_edges, diamond_mid_edges


class BranchDead(Exception):
    """Internal control flow: this branch admits no d.i.m. extension."""

    def __init__(self, reason: str = ""):
        super().__init__(reason)
        self.reason = reason


class NotP8Free(Exception):
    """A vertex at distance >= 6 from the anchor edge: impossible on P8-free input."""


class EdgeNotAliveError(GraphError):
    pass


class InfeasibleStateError(GraphError):
    pass


@dataclass(frozen=True)
class ForcedSeed:
    mid_edges: tuple[Edge, ...]
    peripheral_edges: tuple[Edge, ...]

    @property
    def all_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(set(self.mid_edges) | set(self.peripheral_edges)))


class SolverState:
    __slots__ = ("g", "alive", "inf_eids", "m_acc", "feasible", "reason")

    def __init__(self, g: WeightedGraph, alive: int | None = None):
        self.g = g
        self.alive = g.full_mask if alive is None else alive
        self.inf_eids: set[int] = set()
        self.m_acc: list[Edge] = []
        self.feasible = True
        self.reason = ""

    def clone(self) -> "SolverState":
        s = SolverState.__new__(SolverState)
        s.g = self.g
        s.alive = self.alive
        s.inf_eids = set(self.inf_eids)
        s.m_acc = list(self.m_acc)
        s.feasible = self.feasible
        s.reason = self.reason
        return s

    # -- queries ----------------------------------------------------------

    def is_alive(self, v: int) -> bool:
        return bool((self.alive >> v) & 1)

    def edge_alive(self, e: Edge) -> bool:
        u, v = e
        return bool((self.alive >> u) & 1 and (self.alive >> v) & 1)

    def effective_weight(self, e: Edge) -> Weight:
        i = self.g.eid[canon_edge(*e)]
        return INF if i in self.inf_eids else self.g.edge_weights[i]

    def alive_edges(self) -> list[Edge]:
        a = self.alive
        return [e for e in self.g.edges if (a >> e[0]) & 1 and (a >> e[1]) & 1]

    def alive_adj(self, v: int) -> int:
        return self.g.adj[v] & self.alive

    def has_alive_edges(self) -> bool:
        a = self.alive
        return any((a >> u) & 1 and (a >> v) & 1 for u, v in self.g.edges)

    # -- mutation ---------------------------------------------------------

    def _compatible(self, e: Edge) -> bool:
        """Would m_acc + e still be an induced matching in the base graph?"""
        u, v = e
        em = (1 << u) | (1 << v)
        reach = em | self.g.adj[u] | self.g.adj[v]
        for a, b in self.m_acc:
            if reach & ((1 << a) | (1 << b)):
                return False
        return True

    def reduce_edge(self, e: Edge) -> bool:
        """Commit e to the matching; False when the branch dies.

        Idempotent: committing an edge already in m_acc succeeds unchanged.
        """
        e = canon_edge(*e)
        if e in self.m_acc:
            return True
        if not self.edge_alive(e):
            self.feasible = False
            self.reason = f"edge {e} not alive"
            return False
        if not self._compatible(e):
            self.feasible = False
            self.reason = f"edge {e} conflicts with accumulated matching"
            return False
        u, v = e
        self.m_acc.append(e)
        remaining = self.alive & ~((1 << u) | (1 << v))
        # edges at distance 1: an endpoint adjacent to u or v, both ends surviving
        fringe = (self.g.adj[u] | self.g.adj[v]) & remaining
        for z in iter_bits(fringe):
            for t in iter_bits(self.g.adj[z] & remaining):
                self.inf_eids.add(self.g.eid[canon_edge(z, t)])
        self.alive = remaining
        return True


# -- spec-surface wrappers -------------------------------------------------


def apply_reduction_step(s: SolverState, e: Edge) -> SolverState:
    """Non-mutating reduction step; the returned state may be infeasible."""
    out = s.clone()
    out.reduce_edge(e)
    return out


def residual_graph(s: SolverState) -> tuple[WeightedGraph, dict[int, int]]:
    """Alive induced subgraph with effective weights, plus the old->new id map."""
    if not s.feasible:
        raise InfeasibleStateError(s.reason)
    return residual_subgraph(s, s.alive)


def residual_subgraph(s: SolverState, mask: int) -> tuple[WeightedGraph, dict[int, int]]:
    verts = sorted(iter_bits(mask & s.alive))
    idmap = {v: i for i, v in enumerate(verts)}
    es = []
    keep = mask & s.alive
    for i, (u, v) in enumerate(s.g.edges):
        if (keep >> u) & 1 and (keep >> v) & 1:
            w = INF if i in s.inf_eids else s.g.edge_weights[i]
            es.append((idmap[u], idmap[v], w))
    return build_graph(len(verts), es), idmap


def mark_c4_edges_infinite(s: SolverState) -> SolverState:
    """Give every alive edge on an induced C4 of the residual graph infinite weight."""
    if not s.feasible:
        raise InfeasibleStateError(s.reason)
    out = s.clone()
    for e in c4_edges(out.g, out.alive):
        out.inf_eids.add(out.g.eid[e])
    return out


def seed_forced_edges(g: WeightedGraph):
    """Global forced-edge seeding from diamond mid-edges and butterfly peripherals.

    Returns ("no_dim", None) when the forced set is not an induced matching,
    ("done", (matching, weight)) when it already dominates everything exactly
    once, else ("state", SolverState) with every forced edge reduced.
    """
    seed = ForcedSeed(
        mid_edges=tuple(sorted(diamond_mid_edges(g))),
        peripheral_edges=tuple(sorted(butterfly_peripheral_edges(g))),
    )
    forced = seed.all_edges
    s = SolverState(g)
    if not forced:
        return "state", s
    if not is_induced_matching(g, forced):
        return "no_dim", None
    report = check_dim(g, forced)
    if report.is_dim:
        return "done", (forced, matching_weight(g, forced))
    for e in forced:
        if not s.reduce_edge(e):
            return "no_dim", None
    return "state", s


def candidate_is_valid(g: WeightedGraph, matching) -> bool:
    return check_dim(g, matching).is_dim


def candidate_weight(g: WeightedGraph, matching) -> Weight:
    return matching_weight(g, matching)
