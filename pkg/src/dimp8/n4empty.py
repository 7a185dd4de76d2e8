"""Endgame once N4 is empty: pick each isolated N2 vertex's matching partner.

Works over the structure graph on S2 and the private-neighbor classes T_i.
Black vertices are chosen partners, white vertices stay unmatched; the
propagation engine pushes both constraints until the region is colored or a
contradiction proves the seed choice impossible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dimcheck import check_dim, matching_weight
from .graph import Edge, GraphError, Weight, canon_edge, iter_bits, mask_of
from .levels import LevelDecomposition
from .reduce import BranchDead, SolverState


class WNotInTOneError(GraphError):
    pass


@dataclass(frozen=True)
class ExtendResult:
    ok: bool
    black: frozenset[int]
    white: frozenset[int]
    uncolored: frozenset[int]
    s2_colored: frozenset[int]


@dataclass(frozen=True)
class ZComponent:
    kind: str  # "singleton" | "edge" | "star"
    members: tuple[int, ...]  # S2 vertices, center first for stars
    center: int | None = None


@dataclass(frozen=True)
class ZGraph:
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[ZComponent, ...]


def _structure_adj(
    s: SolverState, d: LevelDecomposition, domain: frozenset[int] | set[int] | None = None
) -> dict[int, set[int]]:
    """Adjacency of the graph on S2 + T_one: partner edges plus N3-internal edges."""
    t_one = set(d.owner)
    verts = set(d.s2) | t_one
    if domain is not None:
        verts &= set(domain)
    adj: dict[int, set[int]] = {v: set() for v in verts}
    t_mask = mask_of(t for t in t_one if t in verts)
    for t in t_one:
        if t not in verts:
            continue
        u = d.owner[t]
        if u in verts:
            adj[t].add(u)
            adj[u].add(t)
        for t2 in iter_bits(s.g.adj[t] & t_mask):
            if t2 != t:
                adj[t].add(t2)
                adj[t2].add(t)
    return adj


def _component_of(adj: dict[int, set[int]], seeds) -> set[int]:
    comp = set(seeds)
    frontier = list(seeds)
    while frontier:
        v = frontier.pop()
        for w in adj.get(v, ()):
            if w not in comp:
                comp.add(w)
                frontier.append(w)
    return comp


def _components(adj: dict[int, set[int]]) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for v in sorted(adj):
        if v in seen:
            continue
        comp = _component_of(adj, [v])
        seen |= comp
        out.append(comp)
    return out


def extend_w_in_m(
    s: SolverState,
    d: LevelDecomposition,
    w_set,
    domain=None,
    order=None,
) -> ExtendResult:
    """Propagate the consequences of choosing every vertex of w_set as a partner.

    Black vertices whiten their T_one neighbors and the rest of their own
    class; white vertices blacken their T_one neighbors. A recolor conflict
    means no matching extension contains all of w_set.
    """
    t_one = set(d.owner)
    w_set = set(w_set)
    if not w_set or not w_set <= t_one:
        raise WNotInTOneError(f"seed {sorted(w_set)} must be nonempty private neighbors")
    adj = _structure_adj(s, d, domain)
    wprime = _component_of(adj, [v for v in w_set if v in adj])
    wp_t = wprime & t_one

    colors: dict[int, str] = {}
    failed = False

    def paint(v: int, c: str) -> None:
        nonlocal failed
        old = colors.get(v)
        if old is None:
            colors[v] = c
        elif old != c:
            failed = True

    for v in w_set:
        paint(v, "b")
    done: set[int] = set()
    while not failed:
        avail = sorted(v for v in colors if v in wp_t and v not in done)
        if order is not None:
            avail = list(order(avail))
        if not avail:
            break
        v = avail[0]
        done.add(v)
        if colors[v] == "b":
            for t in sorted(adj[v] & wp_t):
                paint(t, "w")
            for t in d.t_of[d.owner[v]]:
                if t != v and t in wprime:
                    paint(t, "w")
        else:
            for t in sorted(adj[v] & wp_t):
                paint(t, "b")
        if failed:
            break
    if failed:
        return ExtendResult(False, frozenset(), frozenset(), frozenset(), frozenset())
    black = frozenset(v for v, c in colors.items() if c == "b")
    white = frozenset(v for v, c in colors.items() if c == "w")
    return ExtendResult(
        ok=True,
        black=black,
        white=white,
        uncolored=frozenset(wp_t - black - white),
        s2_colored=frozenset(d.owner[t] for t in black),
    )


def _mate_edges(d: LevelDecomposition, blacks) -> list[Edge]:
    return sorted(canon_edge(d.owner[t], t) for t in blacks)


def _assemble(s: SolverState, extra: list[Edge]):
    total = tuple(sorted(set(map(lambda e: canon_edge(*e), list(s.m_acc) + list(extra)))))
    if not check_dim(s.g, total).is_dim:
        return None
    return total, matching_weight(s.g, total)


def solve_disjoint_ts(s: SolverState, d: LevelDecomposition):
    """No edges between distinct classes: minimize each partner independently."""
    chosen: list[Edge] = []
    for u in d.s2:
        best = None
        for t in d.t_of[u]:
            res = extend_w_in_m(s, d, {t})
            if not res.ok:
                continue
            e = canon_edge(u, t)
            key = (s.effective_weight(e), e)
            if best is None or key < best:
                best = key
        if best is None:
            return None
        chosen.append(best[1])
    return _assemble(s, chosen)


def build_z_graph(s: SolverState, d: LevelDecomposition, t1: int, t2: int) -> ZGraph:
    """Class-contact graph over the non-neighborhood of the anchor pair.

    Components must be singletons, edges, or stars; anything else proves the
    branch admits no extension.
    """
    g = s.g
    banned = (1 << t1) | (1 << t2) | g.adj[t1] | g.adj[t2]
    dom = s.alive & ~banned
    u1, u2 = d.owner[t1], d.owner[t2]
    nodes = [u for u in d.s2 if u not in (u1, u2)]
    parts = {u: [t for t in d.t_of[u] if (dom >> t) & 1] for u in nodes}
    zadj: dict[int, set[int]] = {u: set() for u in nodes}
    zedges = []
    for i, u in enumerate(nodes):
        for v in nodes[i + 1 :]:
            pm = mask_of(parts[v])
            if any(g.adj[t] & pm for t in parts[u]):
                zadj[u].add(v)
                zadj[v].add(u)
                zedges.append((u, v))
    comps = []
    for comp in _components(zadj):
        members = tuple(sorted(comp))
        if len(members) == 1:
            comps.append(ZComponent("singleton", members))
        elif len(members) == 2:
            comps.append(ZComponent("edge", members))
        else:
            centers = [u for u in members if len(zadj[u]) == len(members) - 1]
            leaves_ok = all(len(zadj[u]) == 1 for u in members if u not in centers)
            if len(centers) != 1 or not leaves_ok:
                raise BranchDead("class-contact component is not a star")
            comps.append(
                ZComponent("star", (centers[0],) + tuple(u for u in members if u != centers[0]), centers[0])
            )
    return ZGraph(tuple(nodes), tuple(zedges), tuple(comps))


def _complete_component(s: SolverState, d: LevelDecomposition, comp: set[int], res: ExtendResult):
    """Finish a partially colored component: per class, black the one vertex
    that covers the internal edge if there is one, else the cheapest; then
    check the component is dominated exactly once everywhere."""
    g = s.g
    blacks = set(res.black)
    unc = sorted(res.uncolored)
    by_u: dict[int, list[int]] = {}
    for t in unc:
        by_u.setdefault(d.owner[t], []).append(t)
    for u in sorted(by_u):
        part = by_u[u]
        pmask = mask_of(part)
        internal = [
            (a, b) for a in part for b in part if a < b and (g.adj[a] >> b) & 1
        ]
        if len(internal) > 1:
            return None
        if internal:
            a, b = internal[0]
            ka = (s.effective_weight(canon_edge(u, a)), a)
            kb = (s.effective_weight(canon_edge(u, b)), b)
            blacks.add(a if ka <= kb else b)
        else:
            pick = min(part, key=lambda t: (s.effective_weight(canon_edge(u, t)), t))
            blacks.add(pick)
    comp_blacks = blacks & comp
    mates = [canon_edge(d.owner[t], t) for t in comp_blacks]
    # local exact-domination check over the component's structure edges
    adj = _structure_adj(s, d, comp)
    for x in sorted(adj):
        for y in sorted(adj[x]):
            if y < x:
                continue
            cnt = sum(1 for m in mates if x in m or y in m)
            if cnt != 1:
                return None
    return comp_blacks, sum(s.effective_weight(m) for m in mates)


def solve_star_component(s: SolverState, d: LevelDecomposition, comp, q: int):
    """Best partner assignment for one uncolored component with q forced black."""
    comp = set(comp)
    res = extend_w_in_m(s, d, {q}, domain=comp)
    if not res.ok:
        return None
    done = _complete_component(s, d, comp, res)
    if done is None:
        return None
    blacks, weight = done
    return _mate_edges(d, blacks), weight


def solve_with_t1t2_edge(s: SolverState, d: LevelDecomposition):
    """Some edge joins two classes: anchor it and sweep both black alternatives."""
    g = s.g
    t_one = set(d.owner)
    cross = []
    for t in sorted(t_one):
        for t2 in iter_bits(g.adj[t] & mask_of(t_one)):
            if t2 > t and d.owner[t2] != d.owner[t]:
                cross.append((t, t2))
    t1, t2 = min(cross)
    try:
        build_z_graph(s, d, t1, t2)
    except BranchDead:
        return None

    best = None
    for anchor, far_u in ((t1, d.owner[t2]), (t2, d.owner[t1])):
        partners = [
            t for t in d.t_of[far_u] if t != anchor and not (g.adj[anchor] >> t) & 1
        ]
        seeds = [{anchor, p} for p in partners] + [{anchor}]
        for w_set in seeds:
            res = extend_w_in_m(s, d, w_set)
            if not res.ok:
                continue
            blacks = set(res.black)
            # everything not colored needs a partner too, including whole
            # components the propagation never reached
            colored = set(res.black) | set(res.white)
            region = (t_one - colored) | {u for u in d.s2 if u not in res.s2_colored}
            adj = _structure_adj(s, d, region)
            feasible = True
            for comp in _components(adj):
                comp_t = sorted(comp & t_one)
                if not comp_t:
                    feasible = False  # a class owner with no usable partners
                    break
                best_comp = None
                for q in comp_t:
                    got = solve_star_component(s, d, comp, q)
                    if got is None:
                        continue
                    mates, wq = got
                    key = (wq, tuple(mates))
                    if best_comp is None or key < best_comp[0]:
                        best_comp = (key, mates)
                if best_comp is None:
                    feasible = False
                    break
                for u, t in best_comp[1]:
                    blacks.add(t if t in t_one else u)
            if not feasible:
                continue
            cand = _assemble(s, _mate_edges(d, blacks))
            if cand is None:
                continue
            key = (cand[1], cand[0])
            if best is None or key < (best[1], best[0]):
                best = cand
    return best


def solve_n4_empty(s: SolverState, d: LevelDecomposition):
    """Dispatch on whether any edge joins two distinct classes."""
    t_mask = mask_of(d.owner)
    for t in d.owner:
        for t2 in iter_bits(s.g.adj[t] & t_mask):
            if d.owner[t2] != d.owner[t]:
                return solve_with_t1t2_edge(s, d)
    return solve_disjoint_ts(s, d)
