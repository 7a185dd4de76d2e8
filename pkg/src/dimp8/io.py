"""Graph file format and result records.

Graph files are DIMACS-style: a header "p dim <n> <m>", optional comment
lines "c ...", and exactly m edge lines "e <u> <v> <w>" with 1-based ids,
u < v, and w a nonnegative integer or the literal "inf". Vertex ids are
translated to 0-based internally; this module is the only place that
translation happens.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import (
    Edge,
    WeightedGraph,
    build_graph,
    format_weight,
    is_finite,
    parse_weight,
)
from .solver import STATUS_FOUND, SolveOutcome


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


def parse_graph_file(text: str) -> WeightedGraph:
    n = m = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] != "dim":
                raise ParseError(lineno, "expected header 'p dim <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, "non-integer header fields") from None
            if n < 0 or m < 0:
                raise ParseError(lineno, "negative header fields")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(lineno, "edge line before header")
            if len(parts) != 4:
                raise ParseError(lineno, "expected 'e <u> <v> <w>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "non-integer vertex id") from None
            try:
                w = parse_weight(parts[3])
            except ValueError:
                raise ParseError(lineno, f"bad weight token {parts[3]!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex id out of range [1, {n}]")
            if u >= v:
                raise ParseError(lineno, "edge ids must satisfy u < v")
            if (u, v) in seen:
                raise ParseError(lineno, f"duplicate edge {u} {v}")
            seen.add((u, v))
            edges.append((u - 1, v - 1, w))
        else:
            raise ParseError(lineno, f"unrecognized line {parts[0]!r}")
    if n is None:
        raise ParseError(1, "missing header")
    if m != len(edges):
        raise ParseError(1, f"header declares {m} edges, file has {len(edges)}")
    return build_graph(n, edges)


def emit_graph_file(g: WeightedGraph, comments: list[str] | None = None) -> str:
    lines = [f"p dim {g.n} {g.m}"]
    for c in comments or []:
        lines.insert(0, f"c {c}")
    for i, (u, v) in enumerate(g.edges):
        lines.append(f"e {u + 1} {v + 1} {format_weight(g.edge_weights[i])}")
    return "\n".join(lines) + "\n"


def parse_matching_file(text: str) -> list[Edge]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("p"):
            continue
        parts = line.split()
        if parts[0] != "e" or len(parts) < 3:
            raise ParseError(lineno, "expected 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(lineno, "non-integer vertex id") from None
        if u == v or u < 1 or v < 1:
            raise ParseError(lineno, f"bad edge {u} {v}")
        out.append((min(u, v) - 1, max(u, v) - 1))
    return out


@dataclass
class ResultRecord:
    status: str
    edges: list[list[int]] | None
    weight: int | str | None
    diagnostics: dict

    @classmethod
    def from_outcome(cls, outcome: SolveOutcome) -> "ResultRecord":
        edges = None
        weight: int | str | None = None
        if outcome.matching is not None:
            weight = int(outcome.weight) if is_finite(outcome.weight) else "inf"
        if outcome.status == STATUS_FOUND:
            edges = [[u + 1, v + 1] for u, v in outcome.matching]
        d = outcome.diagnostics
        diagnostics = {
            "branches": d.branches,
            "xy_tried": d.xy_tried,
            "millis": round(d.millis, 3),
            "incomplete": d.incomplete,
        }
        if d.p8_witness is not None:
            diagnostics["p8_witness"] = [v + 1 for v in d.p8_witness]
        return cls(outcome.status, edges, weight, diagnostics)

    def to_json(self, include_timing: bool = True) -> str:
        obj: dict = {"status": self.status}
        if self.edges is not None:
            obj["edges"] = self.edges
        if self.weight is not None:
            obj["weight"] = self.weight
        diag = dict(self.diagnostics)
        if not include_timing:
            diag.pop("millis", None)
        obj["diagnostics"] = diag
        return json.dumps(obj, separators=(", ", ": "))

    def human(self) -> str:
        lines = [f"status: {self.status}"]
        if self.edges is not None:
            lines.append("edges: " + " ".join(f"({u},{v})" for u, v in self.edges))
        if self.weight is not None:
            lines.append(f"weight: {self.weight}")
        d = self.diagnostics
        lines.append(
            f"branches: {d['branches']}  xy_tried: {d['xy_tried']}  "
            f"millis: {d['millis']}  incomplete: {str(d['incomplete']).lower()}"
        )
        if "p8_witness" in d:
            lines.append("p8_witness: " + " ".join(map(str, d["p8_witness"])))
        return "\n".join(lines) + "\n"
