"""Witness objects and their verifiers.

Verifiers only scan the graph's edge list; they share no code with the
solvers that produce the certificates.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from ..qgraph import Graph


class ColoringKind(enum.Enum):
    PROPER = "PROPER"
    COMPLETE = "COMPLETE"


@dataclass(frozen=True)
class ColoringCertificate:
    colors: tuple[int, ...]
    kind: ColoringKind = ColoringKind.PROPER
    producer: str = ""
    seed: int | None = None

    @property
    def color_count(self) -> int:
        return len(set(self.colors))

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "color_count": self.color_count,
            "colors": list(self.colors),
            "producer": self.producer,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class CliqueCertificate:
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"size": self.size, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class IndependentSetCertificate:
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"size": self.size, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class EdgeColoringCertificate:
    edge_colors: tuple[tuple[int, int, int], ...]  # (u, v, colour) with u < v

    @property
    def color_count(self) -> int:
        return len({c for _, _, c in self.edge_colors})

    def to_json(self) -> dict:
        return {"color_count": self.color_count, "edges": [list(e) for e in self.edge_colors]}


@dataclass(frozen=True)
class Verification:
    ok: bool
    counterexample: tuple | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_coloring(g: Graph, cert: ColoringCertificate) -> Verification:
    colors = cert.colors
    if len(colors) != g.order:
        return Verification(False, None, "assignment is not total")
    seen_pairs = set()
    for u, v in g.edges():
        if colors[u] == colors[v]:
            return Verification(False, (u, v), "monochromatic edge")
        seen_pairs.add((min(colors[u], colors[v]), max(colors[u], colors[v])))
    if cert.kind is ColoringKind.COMPLETE:
        for pair in itertools.combinations(sorted(set(colors)), 2):
            if pair not in seen_pairs:
                return Verification(False, pair, "colour pair without an edge")
    return Verification(True)


def verify_clique(g: Graph, cert: CliqueCertificate) -> Verification:
    vs = cert.vertices
    if len(set(vs)) != len(vs):
        return Verification(False, None, "repeated vertex")
    for u, v in itertools.combinations(vs, 2):
        if not g.rows[u] >> v & 1:
            return Verification(False, (u, v), "non-adjacent pair")
    return Verification(True)


def verify_independent_set(g: Graph, cert: IndependentSetCertificate) -> Verification:
    vs = cert.vertices
    if len(set(vs)) != len(vs):
        return Verification(False, None, "repeated vertex")
    members = set(vs)
    for u, v in g.edges():
        if u in members and v in members:
            return Verification(False, (u, v), "adjacent pair")
    return Verification(True)


def verify_edge_coloring(g: Graph, cert: EdgeColoringCertificate) -> Verification:
    wanted = set(g.edges())
    got = {(min(u, v), max(u, v)) for u, v, _ in cert.edge_colors}
    if got != wanted or len(cert.edge_colors) != len(wanted):
        return Verification(False, None, "certificate does not cover the edge set exactly")
    at_vertex: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v, c in cert.edge_colors:
        for w in (u, v):
            if (w, c) in at_vertex:
                return Verification(False, (at_vertex[(w, c)], (u, v)), "incident edges share a colour")
            at_vertex[(w, c)] = (u, v)
    return Verification(True)

