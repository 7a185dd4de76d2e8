"""Immutable weighted graph with bitmask adjacency.

Vertices are dense ints 0..n-1. Edges are canonical (u, v) pairs with u < v.
Weights are nonnegative ints, or INF (an absorbing infinity); arithmetic on
weights is exact for the finite case.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

INF = math.inf

Edge = tuple[int, int]
Weight = int | float  # float only ever holds INF


class GraphError(ValueError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexOutOfRangeError(GraphError):
    pass


class EdgeNotPresentError(GraphError):
    pass


def canon_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def is_finite(w: Weight) -> bool:
    return w is not INF and w != INF


def weight_sum(ws: Iterable[Weight]) -> Weight:
    total: Weight = 0
    for w in ws:
        if not is_finite(w):
            return INF
        total += w
    return total


def format_weight(w: Weight) -> str:
    return "inf" if not is_finite(w) else str(int(w))


def parse_weight(tok: str) -> Weight:
    if tok == "inf":
        return INF
    value = int(tok)
    if value < 0:
        raise ValueError("negative weight")
    return value


class WeightedGraph:
    """Simple undirected graph, immutable after construction."""

    __slots__ = ("n", "edges", "edge_weights", "adj", "nbrs", "eid", "full_mask")

    def __init__(self, n: int, edges: Sequence[Edge], edge_weights: Sequence[Weight]):
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.edge_weights: tuple[Weight, ...] = tuple(edge_weights)
        adj = [0] * n
        nbrs: list[list[int]] = [[] for _ in range(n)]
        eid: dict[Edge, int] = {}
        for i, (u, v) in enumerate(self.edges):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            nbrs[u].append(v)
            nbrs[v].append(u)
            eid[(u, v)] = i
        self.adj: tuple[int, ...] = tuple(adj)
        self.nbrs: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(b)) for b in nbrs)
        self.eid: dict[Edge, int] = eid
        self.full_mask = (1 << n) - 1

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canon_edge(u, v) in self.eid

    def weight(self, u: int, v: int) -> Weight:
        e = canon_edge(u, v)
        if e not in self.eid:
            raise EdgeNotPresentError(f"edge {e} not in graph")
        return self.edge_weights[self.eid[e]]

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRangeError(f"vertex {v} out of range [0, {self.n})")

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])


def iter_bits(mask: int):
    """Yield set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_set(mask: int) -> set[int]:
    return set(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def build_graph(n: int, edges: Iterable[tuple[int, int, Weight]]) -> WeightedGraph:
    """Build a canonical graph; rejects loops, duplicates and bad vertex ids."""
    if n < 0:
        raise VertexOutOfRangeError("negative vertex count")
    seen: set[Edge] = set()
    es: list[Edge] = []
    ws: list[Weight] = []
    for u, v, w in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"loop at vertex {u}")
        e = canon_edge(u, v)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        if is_finite(w) and w < 0:
            raise GraphError(f"negative weight on {e}")
        seen.add(e)
        es.append(e)
        ws.append(w)
    order = sorted(range(len(es)), key=lambda i: es[i])
    return WeightedGraph(n, [es[i] for i in order], [ws[i] for i in order])


def neighbors(g: WeightedGraph, v: int) -> set[int]:
    g.check_vertex(v)
    return set(g.nbrs[v])


def edge_neighborhood(g: WeightedGraph, e: Edge) -> tuple[set[int], set[int]]:
    """Open and closed neighborhood of an edge (open excludes the endpoints)."""
    u, v = canon_edge(*e)
    if (u, v) not in g.eid:
        raise EdgeNotPresentError(f"edge {(u, v)} not in graph")
    open_nb = (set(g.nbrs[u]) | set(g.nbrs[v])) - {u, v}
    return open_nb, open_nb | {u, v}


def induced_subgraph(g: WeightedGraph, keep: Iterable[int]) -> tuple[WeightedGraph, dict[int, int]]:
    """Subgraph induced by `keep`, plus the old->new id map."""
    ks = sorted(set(keep))
    for v in ks:
        g.check_vertex(v)
    idmap = {v: i for i, v in enumerate(ks)}
    kmask = mask_of(ks)
    es = []
    for i, (u, v) in enumerate(g.edges):
        if (kmask >> u) & 1 and (kmask >> v) & 1:
            es.append((idmap[u], idmap[v], g.edge_weights[i]))
    return build_graph(len(ks), es), idmap


def connected_components(g: WeightedGraph) -> list[set[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(vertex_set(comp))
    return comps


def components_of_mask(g: WeightedGraph, alive: int) -> list[int]:
    """Connected components (as masks) of the subgraph induced by `alive`."""
    seen = 0
    out = []
    rest = alive
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= g.adj[w] & alive
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
        rest = alive & ~seen
    return out
