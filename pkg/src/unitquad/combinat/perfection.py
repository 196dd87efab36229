"""Perfection verdicts with explicit evidence.

Routes, in order:

* q = 3: an explicit isomorphism onto the line graph of K_{3,3}; line graphs
  of bipartite graphs are perfect.
* omega < chi on the whole graph (exact clique number against a certified
  chromatic lower bound).
* an induced odd cycle of length >= 5; that subgraph alone has clique
  number 2 and chromatic number 3.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from ..qgraph import Graph, iter_bits
from .search import DEFAULT_BUDGET, BudgetExceeded, _Counter, exact_chromatic, max_clique


class Perfection(enum.Enum):
    PERFECT = "PERFECT"
    NOT_PERFECT = "NOT_PERFECT"
    UNDECIDED = "UNDECIDED"


@dataclass(frozen=True)
class PerfectionVerdict:
    status: Perfection
    route: str
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"status": self.status.value, "route": self.route, "evidence": self.evidence}


def line_graph(edges: list[tuple[int, int]]) -> Graph:
    pairs = [
        (a, b)
        for a, b in itertools.combinations(range(len(edges)), 2)
        if set(edges[a]) & set(edges[b])
    ]
    return Graph.from_edges(len(edges), pairs)


def complete_bipartite_edges(m: int, n: int) -> list[tuple[int, int]]:
    return [(a, m + b) for a in range(m) for b in range(n)]


def _triangles_at(g: Graph) -> list[int]:
    rows = g.rows
    out = []
    for v in range(g.order):
        count = sum((rows[v] & rows[u]).bit_count() for u in iter_bits(rows[v]))
        out.append(count // 2)
    return out


def find_isomorphism(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """A bijection phi with g-adjacency(u, v) == h-adjacency(phi u, phi v), or None.

    Backtracking with degree and per-vertex triangle-count pruning.
    """
    n = g.order
    if n != h.order or g.edge_count() != h.edge_count():
        return None
    sig_g = list(zip(g.degrees(), _triangles_at(g)))
    sig_h = list(zip(h.degrees(), _triangles_at(h)))
    if sorted(sig_g) != sorted(sig_h):
        return None
    mapping = [-1] * n
    used = [False] * n
    counter = _Counter(budget)

    def extend(u: int) -> bool:
        counter.tick()
        if u == n:
            return True
        for x in range(n):
            if used[x] or sig_h[x] != sig_g[u]:
                continue
            if all(g.adjacent(u, w) == h.adjacent(x, mapping[w]) for w in range(u)):
                mapping[u] = x
                used[x] = True
                if extend(u + 1):
                    return True
                used[x] = False
                mapping[u] = -1
        return False

    try:
        return tuple(mapping) if extend(0) else None
    except BudgetExceeded:
        return None


def verify_isomorphism(g: Graph, h: Graph, mapping: tuple[int, ...]) -> bool:
    n = g.order
    if h.order != n or sorted(mapping) != list(range(n)):
        return False
    return all(
        g.adjacent(u, v) == h.adjacent(mapping[u], mapping[v])
        for u in range(n)
        for v in range(u + 1, n)
    )


def find_induced_odd_cycle(g: Graph, length: int, budget: int = DEFAULT_BUDGET, start: int = 0) -> tuple[int, ...] | None:
    """An induced (chordless) cycle of the given length through ``start``."""
    rows = g.rows
    path = [start]
    counter = _Counter(budget)

    def extend(u: int, used: int, interior: int) -> bool:
        # interior: path vertices other than u and start
        counter.tick()
        if len(path) == length:
            return bool(rows[u] >> start & 1)
        for v in iter_bits(rows[u] & ~used):
            if rows[v] & interior:
                continue
            closes = rows[v] >> start & 1
            if 1 < len(path) < length - 1 and closes:
                continue
            if len(path) == length - 1 and not closes:
                continue
            path.append(v)
            if extend(v, used | 1 << v, interior | (1 << u if u != start else 0)):
                return True
            path.pop()
        return False

    try:
        return tuple(path) if extend(start, 1 << start, 0) else None
    except BudgetExceeded:
        return None


def verify_induced_odd_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    """Chordless cycle of odd length >= 5: every vertex has exactly its two cycle neighbours."""
    k = len(cycle)
    if k < 5 or k % 2 == 0 or len(set(cycle)) != k:
        return False
    for i, v in enumerate(cycle):
        inside = {w for w in cycle if w != v and g.adjacent(v, w)}
        if inside != {cycle[i - 1], cycle[(i + 1) % k]}:
            return False
    return True


def perfection_verdict(
    g: Graph,
    q: int | None = None,
    budget: int = DEFAULT_BUDGET,
    vertex_transitive: bool = False,
    clique=None,
    chromatic=None,
    max_hole: int = 11,
) -> PerfectionVerdict:
    """Decide perfection of ``g`` (a D_q when ``q`` is given) with evidence.

    ``clique`` and ``chromatic`` accept precomputed solver results.
    """
    if q == 3:
        target = line_graph(complete_bipartite_edges(3, 3))
        iso = find_isomorphism(g, target, budget)
        if iso is not None and verify_isomorphism(g, target, iso):
            return PerfectionVerdict(
                Perfection.PERFECT,
                "isomorphic to the line graph of K_{3,3}",
                {"isomorphism": list(iso), "line_graph_of": "K_{3,3}"},
            )
        return PerfectionVerdict(Perfection.UNDECIDED, "isomorphism search failed", {})

    anchor = 0 if vertex_transitive else None
    if clique is None:
        clique = max_clique(g, budget, anchor)
    evidence: dict = {"omega": clique.certificate.size, "omega_exact": clique.exact}
    if chromatic is None:
        chromatic = exact_chromatic(g, budget, clique.certificate.size, "clique certificate")
    evidence["chi_lower"] = chromatic.lower
    evidence["chi_lower_reason"] = chromatic.lower_reason
    if clique.exact and clique.upper_bound < chromatic.lower:
        return PerfectionVerdict(Perfection.NOT_PERFECT, "omega < chi", evidence)

    starts = [0] if vertex_transitive else range(g.order)
    for length in range(5, max_hole + 1, 2):
        for s in starts:
            cycle = find_induced_odd_cycle(g, length, budget, s)
            if cycle is not None and verify_induced_odd_cycle(g, cycle):
                evidence["induced_odd_cycle"] = list(cycle)
                return PerfectionVerdict(Perfection.NOT_PERFECT, "induced odd cycle", evidence)
    return PerfectionVerdict(Perfection.UNDECIDED, "no certificate within budget", evidence)
