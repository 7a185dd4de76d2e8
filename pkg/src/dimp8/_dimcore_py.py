"""Pure-Python twin of the compiled search kernel.

Exhaustive minimum-weight dominating-induced-matching search over an edge
conflict structure. Works on arbitrarily many edges (big-int masks) and on
infinite weights; the compiled twin mirrors the exact same decision order and
tie-breaking so results are bit-identical where both apply.
"""

from __future__ import annotations

import math

INF = math.inf


def lex_less(a: int, b: int) -> bool:
    """True if mask a's ascending index list is lexicographically smaller than b's."""
    x = a ^ b
    if x == 0:
        return False
    low = x & -x
    return (a & low) != 0


def search_min_dim(m: int, dom: list[int], weights: list[int | float]):
    """Minimum-weight edge set dominating every edge exactly once.

    dom[i] is the mask of edges sharing a vertex with edge i (including i).
    Edges are expected in canonical sorted order; ties on weight break toward
    the lexicographically smaller edge-index list.

    Returns (found, best_mask, best_weight).
    """
    full = (1 << m) - 1
    best_mask = 0
    best_w: int | float | None = None

    def rec(i: int, inc: int, dm: int, cur_w) -> None:
        nonlocal best_mask, best_w
        if best_w is not None and cur_w > best_w:
            return
        if i == m:
            if dm == full:
                if (
                    best_w is None
                    or cur_w < best_w
                    or (cur_w == best_w and lex_less(inc, best_mask))
                ):
                    best_w = cur_w
                    best_mask = inc
            return
        bit = 1 << i
        if dom[i] & dm == 0:
            rec(i + 1, inc | bit, dm | dom[i], cur_w + weights[i])
        # exclude i: every undominated decided edge must keep a live dominator
        undecided = full & ~((bit << 1) - 1)
        pending = dom[i] & ~dm & ((bit << 1) - 1)
        while pending:
            eb = pending & -pending
            e = eb.bit_length() - 1
            if dom[e] & undecided == 0:
                return
            pending ^= eb
        rec(i + 1, inc, dm, cur_w)

    rec(0, 0, 0, 0)
    if best_w is None:
        return False, 0, 0
    return True, best_mask, best_w


def enumerate_dims(m: int, dom: list[int]):
    """Yield every mask dominating all edges exactly once (test helper)."""
    full = (1 << m) - 1
    out: list[int] = []

    def rec(i: int, inc: int, dm: int) -> None:
        if i == m:
            if dm == full:
                out.append(inc)
            return
        bit = 1 << i
        if dom[i] & dm == 0:
            rec(i + 1, inc | bit, dm | dom[i])
        undecided = full & ~((bit << 1) - 1)
        pending = dom[i] & ~dm & ((bit << 1) - 1)
        while pending:
            eb = pending & -pending
            e = eb.bit_length() - 1
            if dom[e] & undecided == 0:
                return
            pending ^= eb
        rec(i + 1, inc, dm)

    rec(0, 0, 0)
    return out
