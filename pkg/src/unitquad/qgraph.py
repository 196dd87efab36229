"""The unit-quadrance graph D_q, its structural witnesses and exports.

Adjacency is stored as one Python-int bitset per vertex.  D_q is built as a
Cayley graph: every vertex is joined to its translates by the unit circle.
"""
from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .ffield import Field, FieldError, PrimePower, make_field
from .geometry import norm_table, point_from_index, quadrance, translate_indices

MAX_GRAPH_Q = 50


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..order-1`` with bitset rows."""

    rows: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(rows))

    @classmethod
    def complete(cls, order: int) -> Graph:
        full = (1 << order) - 1
        return cls(tuple(full & ~(1 << v) for v in range(order)))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        """Each undirected edge once as ``(u, v)`` with u < v, ascending."""
        out = []
        for u, row in enumerate(self.rows):
            out.extend((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))
        return out

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def complement(self) -> Graph:
        full = (1 << self.order) - 1
        return Graph(tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.rows)))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=np.float64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    vertex_map: tuple[int, ...]  # local index -> parent index


@dataclass(frozen=True)
class GraphStats:
    q: int
    order: int
    degree: int
    edge_count: int
    triangle_count: int | None = None


@dataclass(frozen=True)
class CycleCertificate:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def verify(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs) or len(vs) % 2 == 0:
            return False
        return all(g.adjacent(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


@dataclass(frozen=True)
class QuadranceGraph(Graph):
    field: Field = field(default=None, repr=False, compare=False)
    unit_circle: tuple[int, ...] = ()

    @property
    def q(self) -> int:
        return self.field.q

    def point(self, v: int):
        return point_from_index(self.field, v)

    def coordinates(self, v: int) -> tuple[int, int]:
        return divmod(v, self.field.q)

    def stats(self) -> GraphStats:
        return GraphStats(self.q, self.order, expected_degree(self.q), self.edge_count())


def expected_degree(q: int) -> int:
    """q - (-1)^((q-1)/2)."""
    return q - (-1) ** ((q - 1) // 2)


def build_graph(params: PrimePower | int) -> QuadranceGraph:
    f = make_field(params)
    if f.q > MAX_GRAPH_Q:
        raise FieldError(f"q = {f.q} exceeds the dense-graph cap {MAX_GRAPH_Q}")
    n = f.q * f.q
    circle = np.flatnonzero(norm_table(f) == 1)
    rows = [0] * n
    for s in circle:
        targets = translate_indices(f, np.arange(n), int(s))
        for u, v in enumerate(targets.tolist()):
            rows[u] |= 1 << v
    return QuadranceGraph(tuple(rows), f, tuple(int(s) for s in circle))


def build_graph_direct(params: PrimePower | int) -> Graph:
    """O(q^4) construction evaluating the quadrance of every pair (test oracle)."""
    f = make_field(params)
    pts = [point_from_index(f, v) for v in range(f.q * f.q)]
    edges = [
        (u, v)
        for u in range(len(pts))
        for v in range(u + 1, len(pts))
        if quadrance(f, pts[u], pts[v]) == f.one
    ]
    return Graph.from_edges(len(pts), edges)


def degree_check(g: QuadranceGraph) -> tuple[bool, list[int]]:
    """Whether every degree equals q - (-1)^((q-1)/2); also the observed degrees."""
    observed = sorted(set(g.degrees()))
    return observed == [expected_degree(g.q)], observed


def odd_cycle_witness(g: QuadranceGraph, step: int | None = None) -> CycleCertificate:
    """The cycle 0, s, 2s, ..., (p-1)s for a unit vector s (length p)."""
    s = g.unit_circle[0] if step is None else step
    if s not in g.unit_circle:
        raise ValueError(f"vertex {s} is not on the unit circle")
    cycle = [0]
    for _ in range(g.field.p - 1):
        cycle.append(int(translate_indices(g.field, np.array([cycle[-1]]), s)[0]))
    return CycleCertificate(tuple(cycle))


def find_cycle_of_length(g: Graph, length: int, budget: int = 200_000, start: int = 0) -> CycleCertificate | None:
    """Depth-first search for a simple cycle through ``start`` of the given length.

    Returns None when none exists through ``start`` or the node budget runs out.
    """
    n = g.order
    dist = [-1] * n
    dist[start] = 0
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_bits(g.rows[u]):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    path = [start]
    used = 1 << start
    nodes = 0

    def extend(u: int) -> bool:
        nonlocal used, nodes
        nodes += 1
        if nodes > budget:
            raise _OutOfBudget
        remaining = length - len(path)
        if remaining == 0:
            return g.adjacent(u, start)
        for v in iter_bits(g.rows[u] & ~used):
            # v still needs a way back to start within the remaining edges
            if dist[v] < 0 or dist[v] > remaining:
                continue
            path.append(v)
            used |= 1 << v
            if extend(v):
                return True
            path.pop()
            used &= ~(1 << v)
        return False

    try:
        found = extend(start)
    except _OutOfBudget:
        return None
    return CycleCertificate(tuple(path)) if found else None


class _OutOfBudget(Exception):
    pass


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    keep = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(sum(1 << pos[u] for u in iter_bits(g.rows[v]) if u in pos))
    return InducedSubgraph(Graph(tuple(rows)), tuple(keep))


# -- export / import ---------------------------------------------------------------


def export(g: Graph, fmt: str) -> bytes:
    """Serialize to DIMACS ``.col``, a 0-based edge list, or JSON."""
    fmt = fmt.upper()
    edges = g.edges()
    buf = io.StringIO()
    if fmt == "DIMACS":
        if isinstance(g, QuadranceGraph):
            buf.write(f"c unit-quadrance graph D_{g.q}, modulus {g.field.modulus_string()}\n")
        buf.write(f"p edge {g.order} {len(edges)}\n")
        for u, v in edges:
            buf.write(f"e {u + 1} {v + 1}\n")
    elif fmt == "EDGELIST":
        for u, v in edges:
            buf.write(f"{u} {v}\n")
    elif fmt == "JSON":
        if not isinstance(g, QuadranceGraph):
            raise ValueError("JSON export needs a QuadranceGraph")
        f = g.field
        doc = {
            "q": f.q,
            "p": f.p,
            "n": f.n,
            "modulus": list(f.modulus),
            # coordinates as canonical element indices
            "vertices": [list(g.coordinates(v)) for v in range(g.order)],
            "edges": [list(e) for e in edges],
        }
        buf.write(json.dumps(doc, separators=(",", ":")))
        buf.write("\n")
    else:
        raise ValueError(f"unknown export format {fmt!r}")
    return buf.getvalue().encode("ascii")


def write_export(g: Graph, fmt: str, path) -> None:
    with open(path, "wb") as fh:
        fh.write(export(g, fmt))


def parse_edgelist(data: bytes | str, order: int) -> Graph:
    text = data.decode() if isinstance(data, bytes) else data
    edges = []
    for line in text.splitlines():
        if line.strip():
            u, v = line.split()
            edges.append((int(u), int(v)))
    return Graph.from_edges(order, edges)


def parse_dimacs(data: bytes | str) -> Graph:
    text = data.decode() if isinstance(data, bytes) else data
    order = None
    edges = []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            order = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
    if order is None:
        raise ValueError("DIMACS data has no 'p' line")
    return Graph.from_edges(order, edges)
