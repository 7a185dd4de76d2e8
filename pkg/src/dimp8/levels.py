"""Distance levels of an anchored matching edge, and the early forcing rules.

Levels are recomputed from scratch (BFS from the anchor endpoints over alive
vertices) after every state change; all derived sets (N2 split, private
neighbor classes, shared-contact class) refer to the current residual graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Edge, WeightedGraph, canon_edge, iter_bits, mask_of, vertex_set
from .reduce import BranchDead, EdgeNotAliveError, NotP8Free, SolverState


@dataclass
class LevelDecomposition:
    xy: Edge
    r: int
    levels: tuple[int, ...]  # masks for N1..N5 at indices 1..5 (index 0 unused)
    m2: tuple[Edge, ...]  # alive edges inside N2
    s2: tuple[int, ...]  # isolated N2 vertices, ascending
    owner: dict[int, int]  # T_one member -> its unique S2 neighbor
    t_of: dict[int, tuple[int, ...]]  # S2 vertex -> its private N3 neighbors
    s3: frozenset[int]  # N3 vertices that are nobody's private neighbor
    stranded: int  # alive vertices unreachable from the anchor (mask)
    stranded_edges: tuple[Edge, ...] = field(default_factory=tuple)

    @property
    def n1(self) -> int:
        return self.levels[1]

    @property
    def n2(self) -> int:
        return self.levels[2]

    @property
    def n3(self) -> int:
        return self.levels[3]

    @property
    def n4(self) -> int:
        return self.levels[4]

    @property
    def n5(self) -> int:
        return self.levels[5]

    @property
    def t_one(self) -> frozenset[int]:
        return frozenset(self.owner)

    def level_sets(self) -> list[set[int]]:
        return [vertex_set(m) for m in self.levels]


def decompose(s: SolverState, xy: Edge, r: int) -> LevelDecomposition:
    """BFS levels from the (already reduced) anchor edge xy.

    Raises BranchDead when N1 is not independent or some N2 vertex has two
    N2-neighbors; raises NotP8Free when a vertex at distance >= 6 survives.
    """
    g = s.g
    x, y = canon_edge(*xy)
    if (x, y) not in g.eid:
        raise EdgeNotAliveError(f"anchor {xy} is not an edge")
    alive = s.alive
    levels = [0] * 6
    n1 = (g.adj[x] | g.adj[y]) & alive
    levels[1] = n1
    seen = n1
    frontier = n1
    for depth in range(2, 6):
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & alive & ~seen
        levels[depth] = frontier
        seen |= frontier
        if not frontier:
            break
    else:
        # anything adjacent to N5 but unseen sits at distance >= 6
        beyond = 0
        for v in iter_bits(levels[5]):
            beyond |= g.adj[v]
        if beyond & alive & ~seen:
            raise NotP8Free(f"vertex at distance >= 6 from {xy}")

    for v in iter_bits(n1):
        if g.adj[v] & n1:
            raise BranchDead("N1 not independent")
    n2 = levels[2]
    m2 = []
    s2 = []
    for v in iter_bits(n2):
        inside = g.adj[v] & n2
        deg2 = inside.bit_count()
        if deg2 >= 2:
            raise BranchDead("N2 vertex with two N2-neighbors")
        if deg2 == 0:
            s2.append(v)
        else:
            w = (inside & -inside).bit_length() - 1
            if w > v:
                m2.append((v, w))
    s2_mask = mask_of(s2)
    owner: dict[int, int] = {}
    t_of: dict[int, list[int]] = {u: [] for u in s2}
    s3 = set()
    for t in iter_bits(levels[3]):
        us = g.adj[t] & s2_mask
        if us.bit_count() == 1:
            u = (us & -us).bit_length() - 1
            owner[t] = u
            t_of[u].append(t)
        else:
            s3.add(t)
    stranded = alive & ~seen
    stranded_edges = tuple(
        e for e in s.alive_edges() if (stranded >> e[0]) & 1 and (stranded >> e[1]) & 1
    )
    return LevelDecomposition(
        xy=(x, y),
        r=r,
        levels=tuple(levels),
        m2=tuple(m2),
        s2=tuple(s2),
        owner=owner,
        t_of={u: tuple(ts) for u, ts in t_of.items()},
        s3=frozenset(s3),
        stranded=stranded,
        stranded_edges=stranded_edges,
    )


def _force_all(s: SolverState, edges) -> bool:
    """Reduce each edge (deduped, deterministic order); True if any applied."""
    acted = False
    for e in sorted(set(canon_edge(*e) for e in edges)):
        if e in s.m_acc:
            continue
        if not s.edge_alive(e):
            # an earlier forcing in this batch consumed an endpoint
            raise BranchDead(f"forced edge {e} no longer alive")
        if not s.reduce_edge(e):
            raise BranchDead(s.reason)
        acted = True
    return acted


def force_m2(s: SolverState, d: LevelDecomposition) -> bool:
    """Every edge inside N2 belongs to the matching; commit them all."""
    return _force_all(s, d.m2)


def force_n3n4_triangles(s: SolverState, d: LevelDecomposition) -> bool:
    """Triangle with one vertex in N3 and an edge in N4: the N4 edge is forced."""
    targets = []
    n3, n4 = d.n3, d.n4
    for u, v in s.alive_edges():
        if (n4 >> u) & 1 and (n4 >> v) & 1:
            if s.g.adj[u] & s.g.adj[v] & n3 & s.alive:
                targets.append((u, v))
    return _force_all(s, targets)


def force_double_tj_contact(s: SolverState, d: LevelDecomposition) -> bool:
    """A private neighbor of u_i seeing two members of another class is u_i's mate."""
    targets = []
    for t, u in d.owner.items():
        if not s.is_alive(t):
            continue
        for uj, tj in d.t_of.items():
            if uj == u:
                continue
            if (s.g.adj[t] & mask_of(tj) & s.alive).bit_count() >= 2:
                targets.append((u, t))
                break
    return _force_all(s, targets)


def force_s3_contacts(s: SolverState, d: LevelDecomposition) -> bool:
    """Shared-contact vertices stay unmatched, so their T-neighbors are mates.

    An edge between two shared-contact vertices is undominatable: branch dies.
    """
    targets = []
    s3_alive = mask_of(d.s3) & s.alive
    for v in iter_bits(s3_alive):
        nb = s.g.adj[v] & s.alive
        if nb & s3_alive:
            raise BranchDead("edge inside shared-contact class")
        for t in iter_bits(nb):
            if t in d.owner:
                targets.append((d.owner[t], t))
    return _force_all(s, targets)
