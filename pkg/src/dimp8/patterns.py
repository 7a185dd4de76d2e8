"""Detection of the small subgraphs the solver reasons about.

Diamonds are found in the subgraph sense (an edge whose endpoints have two
common neighbors); on K4-free graphs this coincides with induced diamonds,
and the mid-edge forcing argument holds either way. Butterflies, C4s and P8s
are detected as induced subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Edge,
    EdgeNotPresentError,
    WeightedGraph,
    canon_edge,
    iter_bits,
)


@dataclass(frozen=True)
class PatternWitness:
    kind: str  # "K4" | "Diamond" | "Butterfly" | "C4" | "P8" | "P3"
    vertices: tuple[int, ...]


def diamond_mid_edges(g: WeightedGraph, alive: int | None = None) -> set[Edge]:
    """Edges bc such that b and c have two common neighbors (mid-edge of a diamond)."""
    if alive is None:
        alive = g.full_mask
    out: set[Edge] = set()
    for b, c in g.edges:
        if not ((alive >> b) & 1 and (alive >> c) & 1):
            continue
        common = g.adj[b] & g.adj[c] & alive
        if common and common.bit_count() >= 2:
            out.add((b, c))
    return out


def butterfly_peripheral_edges(g: WeightedGraph, alive: int | None = None) -> set[Edge]:
    """Peripheral edges over all induced butterflies (two triangles sharing a center)."""
    if alive is None:
        alive = g.full_mask
    out: set[Edge] = set()
    for c in range(g.n):
        if not (alive >> c) & 1:
            continue
        nb = g.adj[c] & alive
        wing: list[Edge] = []
        for a in iter_bits(nb):
            inner = g.adj[a] & nb
            for b in iter_bits(inner):
                if b > a:
                    wing.append((a, b))
        for (a, b), (d, e) in combinations(wing, 2):
            if a in (d, e) or b in (d, e):
                continue
            cross = (g.adj[a] | g.adj[b]) & ((1 << d) | (1 << e))
            if cross == 0:
                out.add((a, b))
                out.add((d, e))
    return out


def c4_edges(g: WeightedGraph, alive: int | None = None) -> set[Edge]:
    """All edges lying on at least one induced 4-cycle."""
    if alive is None:
        alive = g.full_mask
    out: set[Edge] = set()
    for u, v in g.edges:
        if not ((alive >> u) & 1 and (alive >> v) & 1):
            continue
        a_side = g.adj[u] & ~g.adj[v] & ~(1 << v) & alive
        b_side = g.adj[v] & ~g.adj[u] & ~(1 << u) & alive
        if not a_side or not b_side:
            continue
        for a in iter_bits(a_side):
            if g.adj[a] & b_side:
                out.add((u, v))
                break
    return out


def find_k4(g: WeightedGraph, alive: int | None = None) -> PatternWitness | None:
    if alive is None:
        alive = g.full_mask
    for u, v in g.edges:
        if not ((alive >> u) & 1 and (alive >> v) & 1):
            continue
        common = g.adj[u] & g.adj[v] & alive
        for a in iter_bits(common):
            rest = g.adj[a] & common
            for b in iter_bits(rest):
                if b > a:
                    return PatternWitness("K4", tuple(sorted((u, v, a, b))))
    return None


def find_induced_p8(g: WeightedGraph) -> PatternWitness | None:
    """Depth-8 DFS over growing chordless paths; None when no induced P8 exists."""
    n = g.n
    if n < 8:
        return None
    adj = g.adj

    def extend(path: list[int], used: int) -> tuple[int, ...] | None:
        if len(path) == 8:
            return tuple(path)
        tail = path[-1]
        # candidates: neighbors of tail that miss every earlier path vertex
        cand = adj[tail] & ~used
        for w in iter_bits(cand):
            if adj[w] & (used & ~(1 << tail)):
                continue
            path.append(w)
            res = extend(path, used | (1 << w))
            if res:
                return res
            path.pop()
        return None

    for start in range(n):
        res = extend([start], 1 << start)
        if res:
            return PatternWitness("P8", res)
    return None


def p3_witness(g: WeightedGraph, e: Edge) -> int | None:
    """A vertex adjacent to exactly one endpoint of e, if any."""
    x, y = canon_edge(*e)
    if (x, y) not in g.eid:
        raise EdgeNotPresentError(f"edge {(x, y)} not in graph")
    onesided = (g.adj[x] ^ g.adj[y]) & ~(1 << x) & ~(1 << y)
    if onesided:
        return (onesided & -onesided).bit_length() - 1
    return None
