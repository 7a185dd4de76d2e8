# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel: exhaustive min-weight exact edge domination.

Mirrors dimp8._dimcore_py.search_min_dim bit for bit, restricted to m <= 64
edges and finite weights < 2**32 (infinite weights use a saturating sentinel).
"""

from libc.stdint cimport uint64_t, int64_t

cdef uint64_t INF_W = (<uint64_t> 1) << 62


cdef struct Best:
    bint found
    uint64_t mask
    uint64_t weight


cdef inline bint lex_less(uint64_t a, uint64_t b) nogil:
    cdef uint64_t x = a ^ b
    if x == 0:
        return False
    return (a & (x & (~x + 1))) != 0


cdef void rec(int i, int m, uint64_t inc, uint64_t dm, uint64_t cur_w,
              uint64_t full, uint64_t* dom, uint64_t* w, Best* best) nogil:
    cdef uint64_t bit, undecided, pending, eb, nw
    cdef int e
    if best.found and cur_w > best.weight:
        return
    if i == m:
        if dm == full:
            if (not best.found or cur_w < best.weight
                    or (cur_w == best.weight and lex_less(inc, best.mask))):
                best.found = True
                best.weight = cur_w
                best.mask = inc
        return
    bit = (<uint64_t> 1) << i
    if (dom[i] & dm) == 0:
        nw = cur_w + w[i]
        if nw > INF_W:
            nw = INF_W
        rec(i + 1, m, inc | bit, dm | dom[i], nw, full, dom, w, best)
    undecided = full & ~((bit << 1) - 1)
    pending = dom[i] & ~dm & ((bit << 1) - 1)
    while pending:
        eb = pending & (~pending + 1)
        e = 0
        while (eb >> e) != 1:
            e += 1
        if (dom[e] & undecided) == 0:
            return
        pending ^= eb
    rec(i + 1, m, inc, dm, cur_w, full, dom, w, best)


def search_min_dim(int m, dom_list, weights_list):
    """(found, best_mask, best_weight); weight is the INF sentinel-free value
    or float('inf') when only infinite-weight solutions exist."""
    cdef uint64_t dom[64]
    cdef uint64_t w[64]
    cdef Best best
    cdef int i
    if m > 64:
        raise ValueError("compiled kernel supports at most 64 edges")
    for i in range(m):
        dom[i] = <uint64_t> dom_list[i]
        wi = weights_list[i]
        if wi == float("inf"):
            w[i] = INF_W
        else:
            w[i] = <uint64_t> wi
    best.found = False
    best.mask = 0
    best.weight = 0
    cdef uint64_t full = 0
    if m == 64:
        full = <uint64_t> 0xFFFFFFFFFFFFFFFF
    else:
        full = ((<uint64_t> 1) << m) - 1
    with nogil:
        rec(0, m, 0, 0, 0, full, dom, w, &best)
    if not best.found:
        return False, 0, 0
    if best.weight >= INF_W:
        return True, int(best.mask), float("inf")
    return True, int(best.mask), int(best.weight)
