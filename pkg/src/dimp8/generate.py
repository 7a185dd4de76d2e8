"""Deterministic, seedable instance generators.

All randomness flows through random.Random (Mersenne Twister) seeded from a
64-bit affine derivation of (seed, attempt), so identical GenSpecs always
reproduce identical graphs, and rejection retries are independent streams.
"""

from __future__ import annotations

from dataclasses import dataclass
import random

from .graph import GraphError, Weight, WeightedGraph, build_graph, canon_edge, connected_components
from .patterns import find_induced_p8

MASK64 = (1 << 64) - 1
_MULT = 6364136223846793005
_INC = 1442695040888963407

REJECTION_BUDGET = 10_000


class RejectionBudgetExceeded(GraphError):
    pass


class BadParameterError(GraphError):
    pass


@dataclass(frozen=True)
class GenSpec:
    kind: str  # "random_p8_free" | "planted" | "named"
    n: int
    p: float = 0.3
    seed: int = 0
    w_lo: int = 1
    w_hi: int = 1
    k: int | None = None  # planted matching size
    family: str | None = None
    connected: bool = True


def _sub_rng(seed: int, attempt: int) -> random.Random:
    return random.Random((seed * _MULT + attempt * _INC) & MASK64)


def _weights(rng: random.Random, count: int, lo: int, hi: int) -> list[int]:
    return [rng.randint(lo, hi) for _ in range(count)]


def gen_random_p8_free(spec: GenSpec) -> WeightedGraph:
    """Edge-probability sampling, rejecting induced-P8 (and optionally disconnected) draws."""
    if spec.n < 0:
        raise BadParameterError("n must be nonnegative")
    pairs = [(u, v) for u in range(spec.n) for v in range(u + 1, spec.n)]
    for attempt in range(REJECTION_BUDGET):
        rng = _sub_rng(spec.seed, attempt)
        chosen = [e for e in pairs if rng.random() < spec.p]
        ws = _weights(rng, len(chosen), spec.w_lo, spec.w_hi)
        g = build_graph(spec.n, [(u, v, w) for (u, v), w in zip(chosen, ws)])
        if spec.connected and len(connected_components(g)) != 1:
            continue
        if find_induced_p8(g) is not None:
            continue
        return g
    raise RejectionBudgetExceeded(f"no acceptable sample in {REJECTION_BUDGET} attempts")


def gen_planted_yes(spec: GenSpec) -> tuple[WeightedGraph, tuple[tuple[int, int], ...]]:
    """Graph built around a planted solution: k matched pairs plus an
    independent set attached only to matched vertices.

    Every edge is either a planted pair (dominating itself) or runs from the
    independent side to exactly one matched vertex, so the planted set is a
    valid solution by construction. Samples containing an induced P8 or more
    than one component are rejected.
    """
    k = spec.k if spec.k is not None else max(1, spec.n // 3)
    if k < 1 or spec.n < 2 * k:
        raise BadParameterError(f"need n >= 2k >= 2, got n={spec.n}, k={k}")
    if k > 1 and spec.n == 2 * k:
        # without independent vertices, distinct pairs can never connect
        raise BadParameterError("planted instances with k > 1 need n > 2k")
    n = spec.n
    for attempt in range(REJECTION_BUDGET):
        rng = _sub_rng(spec.seed, attempt)
        perm = list(range(n))
        rng.shuffle(perm)
        matched = [(perm[2 * i], perm[2 * i + 1]) for i in range(k)]
        free = perm[2 * k :]
        pairs: set[tuple[int, int]] = set()
        for u, v in matched:
            pairs.add(canon_edge(u, v))
        targets = [v for pair in matched for v in pair]
        # Nested attachment neighborhoods keep induced paths short: on any
        # induced path, two independent-side vertices with comparable
        # neighborhoods force a chord, so only a couple of random "extra"
        # attachments per vertex can contribute to a long path, and the
        # rejection loop rarely triggers.
        chain = list(targets)
        extra_rate = min(1.0, 24.0 / max(1, len(free)))
        for x in free:
            for t in chain:
                pairs.add(canon_edge(x, t))
            if rng.random() < extra_rate:
                for t in rng.sample(targets, min(len(targets), rng.randint(1, 2))):
                    pairs.add(canon_edge(x, t))
            if len(chain) > 1:
                chain = rng.sample(chain, rng.randint(1, len(chain)))
        edges: list[tuple[int, int, Weight]] = [
            (u, v, rng.randint(spec.w_lo, spec.w_hi)) for u, v in sorted(pairs)
        ]
        g = build_graph(n, edges)
        if len(connected_components(g)) != 1:
            continue
        if find_induced_p8(g) is not None:
            continue
        planted = tuple(sorted(canon_edge(u, v) for u, v in matched))
        return g, planted
    raise RejectionBudgetExceeded(f"no acceptable sample in {REJECTION_BUDGET} attempts")


def gen_named(family: str, n: int = 0) -> WeightedGraph:
    """Canonical unit-weight regression graphs."""
    fam = family.lower()
    unit = lambda es, nn: build_graph(nn, [(u, v, 1) for u, v in es])
    if fam == "path":
        if n < 1:
            raise BadParameterError("path needs n >= 1")
        return unit([(i, i + 1) for i in range(n - 1)], n)
    if fam == "cycle":
        if n < 3:
            raise BadParameterError("cycle needs n >= 3")
        return unit([(i, (i + 1) % n) for i in range(n)], n)
    if fam == "complete":
        if n < 1:
            raise BadParameterError("complete needs n >= 1")
        return unit([(i, j) for i in range(n) for j in range(i + 1, n)], n)
    if fam == "k4":
        return gen_named("complete", 4)
    if fam == "triangle":
        return gen_named("cycle", 3)
    if fam == "diamond":
        return unit([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], 4)
    if fam == "butterfly":
        return unit([(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)], 5)
    if fam == "gem":
        return unit([(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)], 5)
    if fam == "claw":
        return unit([(0, 1), (0, 2), (0, 3)], 4)
    if fam == "star":
        if n < 2:
            raise BadParameterError("star needs n >= 2")
        return unit([(0, i) for i in range(1, n)], n)
    raise BadParameterError(f"unknown family {family!r}")


def generate(spec: GenSpec):
    if spec.kind == "random_p8_free":
        return gen_random_p8_free(spec)
    if spec.kind == "planted":
        return gen_planted_yes(spec)
    if spec.kind == "named":
        if not spec.family:
            raise BadParameterError("named generation needs a family")
        return gen_named(spec.family, spec.n)
    raise BadParameterError(f"unknown kind {spec.kind!r}")
