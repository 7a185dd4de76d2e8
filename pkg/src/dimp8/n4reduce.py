"""Branch-and-reduce over the N4/N5 region until every branch has N4 empty.

Each stage either commits forced edges (and the driver re-derives the level
decomposition) or fans the state out into a bounded set of exhaustive
alternatives. Branches die when a forced commitment is incompatible or a
structural fact that must hold on P8-free inputs fails; dead branches are
simply dropped. A global cap bounds the total number of states created.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .graph import Edge, canon_edge, components_of_mask, iter_bits, mask_of
from .levels import (
    LevelDecomposition,
    decompose,
    force_double_tj_contact,
    force_m2,
    force_n3n4_triangles,
    force_s3_contacts,
)
from .reduce import BranchDead, NotP8Free, SolverState


class BranchCapExceeded(Exception):
    pass


@dataclass
class SolveContext:
    branch_cap: int
    threads: int = 1
    states_created: int = 0
    cap_exceeded: bool = False
    not_p8_free: bool = False
    xy_tried: int = 0
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def note_states(self, k: int = 1) -> None:
        with self._lock:
            self.states_created += k
            if self.states_created > self.branch_cap:
                self.cap_exceeded = True
                raise BranchCapExceeded(f"branch cap {self.branch_cap} exceeded")

    def note_xy(self) -> None:
        with self._lock:
            self.xy_tried += 1

    def flag_not_p8_free(self) -> None:
        with self._lock:
            self.not_p8_free = True


@dataclass(frozen=True)
class N4Component:
    kind: str  # "triangle" | "edge" | "singleton"
    verts: tuple[int, ...]


def classify_n4(s: SolverState, d: LevelDecomposition) -> list[N4Component]:
    """Components of the alive N4 region; anything beyond triangle/edge/vertex kills the branch."""
    out = []
    for mask in components_of_mask(s.g, d.n4 & s.alive):
        vs = tuple(sorted(iter_bits(mask)))
        k = len(vs)
        if k == 1:
            out.append(N4Component("singleton", vs))
        elif k == 2:
            out.append(N4Component("edge", vs))
        elif k == 3:
            edges = sum(1 for i in range(3) for j in range(i + 1, 3) if (s.g.adj[vs[i]] >> vs[j]) & 1)
            if edges != 3:
                raise BranchDead("chordless path inside N4")
            out.append(N4Component("triangle", vs))
        else:
            raise BranchDead("N4 component larger than a triangle")
    return out


def _n3_nbrs(s: SolverState, d: LevelDecomposition, v: int) -> list[int]:
    return sorted(iter_bits(s.g.adj[v] & d.n3 & s.alive))


def _matchable_owner(d: LevelDecomposition, t: int) -> int | None:
    """The S2 vertex t can be mated to, or None when t cannot be anybody's mate."""
    return d.owner.get(t)


def branch_n4_triangles(
    ctx: SolveContext, s: SolverState, d: LevelDecomposition, comps: list[N4Component]
) -> list[SolverState]:
    """Three alternatives for the first triangle's matched edge, consequences pushed to all."""
    tris = [c for c in comps if c.kind == "triangle"]
    g = s.g
    all_nbrs: dict[int, list[int]] = {}
    owners: set[int] = set()
    for tri in tris:
        for v in tri.verts:
            if g.adj[v] & d.n5 & s.alive:
                raise BranchDead("N4 triangle adjacent to N5")
            nbrs = _n3_nbrs(s, d, v)
            all_nbrs[v] = nbrs
            for t in nbrs:
                if t in d.s3:
                    raise BranchDead("N4 triangle neighbor in shared-contact class")
                owners.add(d.owner[t])
    if len(owners) != 1:
        raise BranchDead("N4 triangles without a common private-neighbor class")

    first = tris[0]
    branches: list[SolverState] = []
    a0, b0, c0 = first.verts
    choices = [((b0, c0), a0), ((a0, c0), b0), ((a0, b0), c0)]
    for m_edge, ivert in choices:
        b = s.clone()
        if not b.reduce_edge(m_edge):
            continue
        mates = [t for t in all_nbrs[ivert] if b.is_alive(t)]
        if len(mates) != 1:
            continue
        mate = mates[0]
        if not b.reduce_edge(canon_edge(d.owner[mate], mate)):
            continue
        dead = False
        for tri in tris[1:]:
            cand = [v for v in tri.verts if (g.adj[v] >> mate) & 1]
            if len(cand) != 1:
                dead = True
                break
            v = cand[0]
            if g.adj[v] & d.n3 & b.alive:
                # a surviving private neighbor of the idle vertex cannot be dominated
                dead = True
                break
            opp = tuple(w for w in tri.verts if w != v)
            if not b.reduce_edge(opp):
                dead = True
                break
        if not dead:
            branches.append(b)
    ctx.note_states(len(branches))
    return branches


def resolve_n4_edges(
    ctx: SolveContext, s: SolverState, d: LevelDecomposition, comps: list[N4Component]
) -> tuple[list[SolverState], bool]:
    """Edge components of N4: unconditional forcings, then the mate enumeration."""
    edge_comps = [c for c in comps if c.kind == "edge"]
    if not edge_comps:
        return [], False
    g = s.g

    # pass 1: forced commitments that need no branching
    b = s.clone()
    acted = False
    for comp in edge_comps:
        av, bv = comp.verts
        if not (b.is_alive(av) and b.is_alive(bv)):
            continue
        n5nb = (g.adj[av] | g.adj[bv]) & d.n5 & b.alive
        if n5nb == 0:
            if not b.reduce_edge((av, bv)):
                raise BranchDead(b.reason)
            acted = True
            continue
        for apex in iter_bits(n5nb):
            if not ((g.adj[apex] >> av) & 1 and (g.adj[apex] >> bv) & 1):
                raise BranchDead("N5 apex sees only one end of an N4 edge")
        if n5nb.bit_count() > 1:
            raise BranchDead("two common N5 apexes would form a K4")
        # both ends having an unmatchable N3 neighbor pins the edge itself
        a_stuck = any(t in d.s3 for t in _n3_nbrs(b, d, av))
        b_stuck = any(t in d.s3 for t in _n3_nbrs(b, d, bv))
        if a_stuck and b_stuck:
            if not b.reduce_edge((av, bv)):
                raise BranchDead(b.reason)
            acted = True
    if acted:
        ctx.note_states(1)
        return [b], True

    # pass 2: all components apexed, every boundary neighbor matchable with one
    # common owner -> enumerate that owner's possible mates (plus "none")
    infos = []
    regular = True
    owners: set[int] = set()
    for comp in edge_comps:
        av, bv = comp.verts
        apex_mask = (g.adj[av] | g.adj[bv]) & d.n5 & s.alive
        apex = (apex_mask & -apex_mask).bit_length() - 1
        aset = _n3_nbrs(s, d, av)
        bset = _n3_nbrs(s, d, bv)
        if any(t in d.s3 for t in aset + bset):
            regular = False
        for t in aset + bset:
            if t in d.owner:
                owners.add(d.owner[t])
        infos.append((av, bv, apex, set(aset), set(bset)))
    if regular and len(owners) > 1:
        raise BranchDead("N4 edge components without a common private-neighbor class")
    if regular and len(owners) == 1:
        u_star = owners.pop()
        candidates = sorted(set().union(*(a | bb for _, _, _, a, bb in infos)))
        branches = []
        for t in candidates + [None]:
            br = s.clone()
            ok = True
            if t is not None and not br.reduce_edge(canon_edge(u_star, t)):
                continue
            for av, bv, apex, aset, bset in infos:
                if t is not None and t in aset:
                    ok = br.reduce_edge(canon_edge(bv, apex))
                elif t is not None and t in bset:
                    ok = br.reduce_edge(canon_edge(av, apex))
                else:
                    ok = br.reduce_edge((av, bv))
                if not ok:
                    break
            if ok:
                branches.append(br)
        ctx.note_states(len(branches))
        return branches, True

    # pass 3 fallback: exhaust the first component's three possible matched edges
    av, bv, apex, aset, bset = infos[0]
    a_stuck = any(t in d.s3 for t in aset)
    b_stuck = any(t in d.s3 for t in bset)
    options: list[Edge] = [(av, bv)]
    if not b_stuck:
        options.append(canon_edge(av, apex))  # bv idle
    if not a_stuck:
        options.append(canon_edge(bv, apex))  # av idle
    branches = []
    for e in options:
        br = s.clone()
        if br.reduce_edge(e):
            branches.append(br)
    ctx.note_states(len(branches))
    return branches, True


def _cheaper_edge(s: SolverState, e1: Edge, e2: Edge) -> Edge:
    e1, e2 = canon_edge(*e1), canon_edge(*e2)
    k1 = (s.effective_weight(e1), e1)
    k2 = (s.effective_weight(e2), e2)
    return e1 if k1 <= k2 else e2


def _force_or_die(s: SolverState, e: Edge) -> None:
    if not s.reduce_edge(e):
        raise BranchDead(s.reason)


def resolve_n5(
    ctx: SolveContext, s: SolverState, d: LevelDecomposition
) -> tuple[list[SolverState], bool]:
    """Resolve the N5 region stage by stage, then clear the remaining N4 vertices.

    Performs one action per invocation (a batch of forced edges or one fan-out);
    the caller re-derives the decomposition between invocations.
    """
    g = s.g
    n5_alive = d.n5 & s.alive
    if n5_alive:
        comps5 = [tuple(sorted(iter_bits(m))) for m in components_of_mask(g, n5_alive)]
        # every N4 neighbor of a component must see all of it, and components
        # can only be vertices or edges
        for vs in comps5:
            if len(vs) > 2:
                raise BranchDead("N5 component larger than an edge")
            cmask = mask_of(vs)
            n4nb = 0
            for v in vs:
                n4nb |= g.adj[v] & d.n4 & s.alive
            for u in iter_bits(n4nb):
                if (g.adj[u] & cmask) != cmask:
                    raise BranchDead("N4 vertex sees only part of an N5 component")

        edge_comps = [vs for vs in comps5 if len(vs) == 2]
        apex_of: dict[tuple[int, int], int] = {}
        for h1, h2 in edge_comps:
            apexes = g.adj[h1] & g.adj[h2] & d.n4 & s.alive
            if apexes.bit_count() != 1:
                raise BranchDead("N5 edge without a unique N4 apex")
            apex_of[(h1, h2)] = (apexes & -apexes).bit_length() - 1

        # apex with further N5 neighbors: the matched edge sits on the apex side
        for h1, h2 in edge_comps:
            a = apex_of[(h1, h2)]
            extra = g.adj[a] & d.n5 & s.alive & ~mask_of((h1, h2))
            if extra:
                b = s.clone()
                _force_or_die(b, _cheaper_edge(s, (h1, a), (h2, a)))
                ctx.note_states(1)
                return [b], True

        # apex whose N3 boundary pins it into the matching
        for h1, h2 in edge_comps:
            a = apex_of[(h1, h2)]
            dset = _n3_nbrs(s, d, a)
            owners = [d.owner[t] for t in dset if t in d.owner]
            if any(t in d.s3 for t in dset) or len(owners) != len(set(owners)):
                b = s.clone()
                _force_or_die(b, _cheaper_edge(s, (h1, a), (h2, a)))
                ctx.note_states(1)
                return [b], True

        # remaining apex triangles: synchronized pairs (linked through 4-cycles
        # in the N3/N4 boundary) branch together, the rest enumerate one
        # owner's mates
        if edge_comps:
            tris = []
            for h1, h2 in edge_comps:
                a = apex_of[(h1, h2)]
                cheap, costly = (h1, h2)
                k1 = (s.effective_weight(canon_edge(a, h1)), h1)
                k2 = (s.effective_weight(canon_edge(a, h2)), h2)
                if k2 < k1:
                    cheap, costly = (h2, h1)
                tris.append((a, cheap, costly, tuple(_n3_nbrs(s, d, a))))
            parent = list(range(len(tris)))

            def find(i: int) -> int:
                while parent[i] != i:
                    parent[i] = parent[parent[i]]
                    i = parent[i]
                return i

            sync_alone = set()
            for i, (_, _, _, ai) in enumerate(tris):
                if len({d.owner[t] for t in ai}) > 1:
                    sync_alone.add(i)
            for i in range(len(tris)):
                for j in range(i + 1, len(tris)):
                    ai, aj = tris[i][3], tris[j][3]
                    linked = False
                    for di in ai:
                        for dj in aj:
                            if d.owner[di] == d.owner[dj]:
                                continue
                            linked = True
                            # the linking quadruple must close into a 4-cycle
                            if (g.adj[di] >> dj) & 1:
                                raise BranchDead("adjacent private neighbors across classes")
                            if not ((g.adj[di] >> tris[j][0]) & 1 and (g.adj[dj] >> tris[i][0]) & 1):
                                raise BranchDead("apex triangles fail to close a 4-cycle")
                    if linked:
                        parent[find(i)] = find(j)
            groups: dict[int, list[int]] = {}
            for i in range(len(tris)):
                groups.setdefault(find(i), []).append(i)
            sync_groups = [
                sorted(ix)
                for ix in groups.values()
                if len(ix) > 1 or any(i in sync_alone for i in ix)
            ]
            if sync_groups:
                group = min(sync_groups)
                up = s.clone()
                down = s.clone()
                branches = []
                ok_up = ok_down = True
                for i in group:
                    a, cheap, costly, ai = tris[i]
                    if ok_up:
                        ok_up = up.reduce_edge(canon_edge(a, cheap))
                    if ok_down:
                        ok_down = down.reduce_edge(canon_edge(cheap, costly))
                if ok_down:
                    mates = sorted({canon_edge(d.owner[t], t) for i in group for t in tris[i][3]})
                    for e in mates:
                        if e in down.m_acc:
                            continue
                        if not down.edge_alive(e) or not down.reduce_edge(e):
                            ok_down = False
                            break
                if ok_up:
                    branches.append(up)
                if ok_down:
                    branches.append(down)
                ctx.note_states(len(branches))
                return branches, True

            owners = sorted({d.owner[t] for _, _, _, ai in tris for t in ai})
            if len(owners) != 1:
                raise BranchDead("unlinked apex triangles without a common class")
            u_star = owners[0]
            candidates = sorted({t for _, _, _, ai in tris for t in ai})
            branches = []
            for t in candidates + [None]:
                br = s.clone()
                ok = True
                if t is not None and not br.reduce_edge(canon_edge(u_star, t)):
                    continue
                for a, cheap, costly, ai in tris:
                    if t is not None and t in ai:
                        ok = br.reduce_edge(canon_edge(cheap, costly))
                    else:
                        ok = br.reduce_edge(canon_edge(a, cheap))
                    if not ok:
                        break
                if ok:
                    branches.append(br)
            ctx.note_states(len(branches))
            return branches, True

        # singleton N5 vertices hanging off a single N4 vertex: enumerate the
        # N4 vertex's possible mates among its single-parent N5 neighbors
        for h in iter_bits(n5_alive):
            nb4 = g.adj[h] & d.n4 & s.alive
            if nb4.bit_count() == 1:
                v4 = (nb4 & -nb4).bit_length() - 1
                eligible = [
                    v5
                    for v5 in iter_bits(g.adj[v4] & d.n5 & s.alive)
                    if (g.adj[v5] & d.n4 & s.alive).bit_count() == 1
                ]
                branches = []
                for v5 in eligible:
                    br = s.clone()
                    if br.reduce_edge(canon_edge(v4, v5)):
                        branches.append(br)
                ctx.note_states(len(branches))
                return branches, True

        # only multi-parent N5 vertices remain: their edges all sit on 4-cycles
        # and can never be dominated
        raise BranchDead("undominatable N5 vertices remain")

    # N5 empty: every N3 neighbor of a remaining N4 vertex must be a mate
    n4_alive = d.n4 & s.alive
    if n4_alive == 0:
        return [], False
    b = s.clone()
    targets = []
    for w in iter_bits(n4_alive):
        for w2 in _n3_nbrs(s, d, w):
            if w2 in d.s3:
                raise BranchDead("N4 vertex with an unmatchable N3 neighbor")
            targets.append(canon_edge(d.owner[w2], w2))
    acted = False
    for e in sorted(set(targets)):
        if e in b.m_acc:
            continue
        if not b.edge_alive(e) or not b.reduce_edge(e):
            raise BranchDead("conflicting mate forcings while clearing N4")
        acted = True
    if not acted:
        raise BranchDead("N4 vertices with no resolvable boundary")
    ctx.note_states(1)
    return [b], True


def run_forcing_fixpoint(
    s: SolverState, xy: Edge, r: int
) -> tuple[SolverState, LevelDecomposition]:
    """Recompute levels and apply the deterministic forcing rules to a fixpoint."""
    while True:
        d = decompose(s, xy, r)
        if force_m2(s, d):
            continue
        if force_n3n4_triangles(s, d):
            continue
        if force_double_tj_contact(s, d):
            continue
        if force_s3_contacts(s, d):
            continue
        return s, d


def reduce_until_n4_empty(
    ctx: SolveContext, s0: SolverState, xy: Edge, r: int
) -> list[tuple[SolverState, LevelDecomposition]]:
    """Fan the state out until every surviving branch has an empty N4 level."""
    out: list[tuple[SolverState, LevelDecomposition]] = []
    stack = [s0]
    while stack:
        st = stack.pop()
        try:
            st, d = run_forcing_fixpoint(st, xy, r)
            if d.n4 & st.alive == 0:
                out.append((st, d))
                continue
            comps = classify_n4(st, d)
            if any(c.kind == "triangle" for c in comps):
                stack.extend(branch_n4_triangles(ctx, st, d, comps))
                continue
            children, acted = resolve_n4_edges(ctx, st, d, comps)
            if not acted:
                children, acted = resolve_n5(ctx, st, d)
            if not acted:
                raise BranchDead("no applicable N4/N5 stage")
            stack.extend(children)
        except BranchDead:
            continue
        except NotP8Free:
            ctx.flag_not_p8_free()
            continue
    return out
