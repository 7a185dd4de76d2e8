"""Top-level solve: global forced-edge seeding, per-component single-edge
shortcut, then the anchored-edge sweep over every finite edge in a P3.

Soundness is unconditional: every candidate is re-validated against the full
input graph before it can be reported. Completeness holds on connected
P8-free inputs; when structural assumptions are observed to fail (a vertex at
distance >= 6, or the branch cap), the outcome carries an incompleteness flag.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .dimcheck import check_dim, matching_weight
from .graph import (
    Edge,
    INF,
    Weight,
    WeightedGraph,
    canon_edge,
    components_of_mask,
    is_finite,
)
from .n4empty import solve_n4_empty
from .n4reduce import BranchCapExceeded, SolveContext, reduce_until_n4_empty
from .patterns import find_induced_p8, find_k4, p3_witness
from .reduce import (
    BranchDead,
    SolverState,
    mark_c4_edges_infinite,
    residual_subgraph,
    seed_forced_edges,
)

STATUS_FOUND = "dim_found"
STATUS_NO_DIM = "no_dim"
STATUS_NO_FINITE = "no_finite_dim"


@dataclass(frozen=True)
class SolveOptions:
    branch_cap: int | None = None  # default 10 * n**3
    threads: int = 1
    p8_check: bool = False


@dataclass
class Diagnostics:
    branches: int = 0
    xy_tried: int = 0
    millis: float = 0.0
    incomplete: bool = False
    p8_witness: tuple[int, ...] | None = None


@dataclass
class SolveOutcome:
    status: str
    matching: tuple[Edge, ...] | None
    weight: Weight | None
    diagnostics: Diagnostics = field(default_factory=Diagnostics)


Candidate = tuple[tuple[Edge, ...], Weight]


def dim_with_xy(ctx: SolveContext, pg: WeightedGraph, xy: Edge) -> Candidate | None:
    """Minimum finite-weight d.i.m. of the connected graph pg containing xy."""
    xy = canon_edge(*xy)
    r = p3_witness(pg, xy)
    if r is None:
        return None
    s0 = SolverState(pg)
    if not s0.reduce_edge(xy):
        return None
    best: Candidate | None = None
    work = [s0]
    while work:
        st = work.pop()
        for branch, d in reduce_until_n4_empty(ctx, st, xy, r):
            if d.stranded_edges:
                resumed = _absorb_stranded(ctx, branch, d.stranded)
                if resumed is not None:
                    work.append(resumed)
                continue
            try:
                cand = solve_n4_empty(branch, d)
            except BranchDead:
                continue
            if cand is None:
                continue
            edges, weight = cand
            if not is_finite(weight):
                continue
            if best is None or (weight, edges) < (best[1], best[0]):
                best = (edges, weight)
    return best


def _absorb_stranded(ctx: SolveContext, s: SolverState, stranded: int) -> SolverState | None:
    """Solve the unreachable alive region independently and fold its edges in."""
    extra = _solve_residual_parts(ctx, s, stranded)
    if extra is None:
        return None
    out = s.clone()
    for e in extra:
        if not out.reduce_edge(e):
            return None
    return out


def _solve_residual_parts(ctx: SolveContext, s: SolverState, mask: int) -> list[Edge] | None:
    """Solve each connected alive part under `mask`; None when any part fails."""
    chosen: list[Edge] = []
    for part in components_of_mask(s.g, mask & s.alive):
        pg, idmap = residual_subgraph(s, part)
        if pg.m == 0:
            continue
        got = solve_connected(ctx, pg)
        if got is None:
            return None
        back = {new: old for old, new in idmap.items()}
        chosen.extend(canon_edge(back[u], back[v]) for u, v in got[0])
    return chosen


def solve_connected(ctx: SolveContext, pg: WeightedGraph) -> Candidate | None:
    """Best d.i.m. of one connected graph: single-edge shortcut, then xy sweep."""
    best_single: tuple[Weight, Edge] | None = None
    for i, (u, v) in enumerate(pg.edges):
        w = pg.edge_weights[i]
        if not is_finite(w):
            continue
        if pg.degree(u) + pg.degree(v) - 1 == pg.m:
            key = (w, (u, v))
            if best_single is None or key < best_single:
                best_single = key
    if best_single is not None:
        return ((best_single[1],), best_single[0])

    anchors = []
    for i, e in enumerate(pg.edges):
        if is_finite(pg.edge_weights[i]) and p3_witness(pg, e) is not None:
            anchors.append(e)

    def run(xy: Edge) -> Candidate | None:
        ctx.note_xy()
        try:
            return dim_with_xy(ctx, pg, xy)
        except BranchCapExceeded:
            return None

    if ctx.threads > 1 and len(anchors) > 1:
        with ThreadPoolExecutor(max_workers=ctx.threads) as pool:
            results = list(pool.map(run, anchors))
    else:
        results = [run(xy) for xy in anchors]

    best: Candidate | None = None
    for cand in results:
        if cand is None:
            continue
        if best is None or (cand[1], cand[0]) < (best[1], best[0]):
            best = cand
    return best


def _outcome(status, matching, weight, ctx: SolveContext | None, t0: float, witness=None) -> SolveOutcome:
    diag = Diagnostics(millis=(time.perf_counter() - t0) * 1000.0)
    if ctx is not None:
        diag.branches = ctx.states_created
        diag.xy_tried = ctx.xy_tried
        diag.incomplete = ctx.not_p8_free or ctx.cap_exceeded
    if witness is not None:
        diag.incomplete = True
        diag.p8_witness = witness
    return SolveOutcome(status, matching, weight, diag)


def solve_dim(g: WeightedGraph, opts: SolveOptions | None = None) -> SolveOutcome:
    opts = opts or SolveOptions()
    t0 = time.perf_counter()
    cap = opts.branch_cap if opts.branch_cap is not None else 10 * max(g.n, 2) ** 3
    ctx = SolveContext(branch_cap=cap)
    ctx.threads = opts.threads

    if g.m == 0:
        return _outcome(STATUS_FOUND, (), 0, ctx, t0)
    if find_k4(g) is not None:
        return _outcome(STATUS_NO_DIM, None, None, ctx, t0)

    kind, payload = seed_forced_edges(g)
    if kind == "no_dim":
        return _outcome(STATUS_NO_DIM, None, None, ctx, t0)
    if kind == "done":
        matching, weight = payload
        status = STATUS_FOUND if is_finite(weight) else STATUS_NO_FINITE
        return _outcome(status, matching, weight, ctx, t0)

    state = mark_c4_edges_infinite(payload)
    chosen = _solve_residual_parts(ctx, state, state.alive)
    if chosen is None:
        return _outcome(STATUS_NO_DIM, None, None, ctx, t0)
    total = tuple(sorted(set(state.m_acc) | set(chosen)))
    if not check_dim(g, total).is_dim:
        # candidates are validated per part; reaching here means a structural
        # assumption failed silently, so fail closed
        out = _outcome(STATUS_NO_DIM, None, None, ctx, t0)
        out.diagnostics.incomplete = True
        return out
    weight = matching_weight(g, total)
    status = STATUS_FOUND if is_finite(weight) else STATUS_NO_FINITE
    return _outcome(status, total, weight, ctx, t0)


def solve_dim_checked(g: WeightedGraph, opts: SolveOptions | None = None) -> SolveOutcome:
    """solve_dim plus an upfront induced-P8 scan feeding the diagnostics."""
    opts = opts or SolveOptions()
    t0 = time.perf_counter()
    witness = find_induced_p8(g)
    out = solve_dim(g, opts)
    if witness is not None:
        out.diagnostics.incomplete = True
        out.diagnostics.p8_witness = witness.vertices
    out.diagnostics.millis = (time.perf_counter() - t0) * 1000.0
    return out
