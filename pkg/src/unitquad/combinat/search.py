"""Budgeted exact searches on bitset graphs.

Every search counts branch nodes against an explicit budget.  Running out
never produces a wrong "exact" answer: results carry an ``exact`` flag and
the best witness found so far.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..qgraph import Graph, iter_bits
from .certificates import (
    CliqueCertificate,
    ColoringCertificate,
    ColoringKind,
    IndependentSetCertificate,
)

DEFAULT_BUDGET = 2_000_000


class BudgetExceeded(Exception):
    pass


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int):
        self.nodes = 0
        self.budget = budget

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded


# -- triangles ----------------------------------------------------------------------


@dataclass(frozen=True)
class TriangleCount:
    count: int
    witness: tuple[int, int, int] | None


def triangle_count(g: Graph) -> TriangleCount:
    """Exact number of triangles, each counted once, by neighbourhood intersection."""
    rows = g.rows
    total = 0
    witness = None
    for u in range(g.order):
        higher = rows[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher):
            common = rows[u] & rows[v] >> (v + 1) << (v + 1)
            if common:
                total += common.bit_count()
                if witness is None:
                    witness = (u, v, (common & -common).bit_length() - 1)
    return TriangleCount(total, witness)


# -- cliques and independent sets ---------------------------------------------------


@dataclass(frozen=True)
class CliqueResult:
    certificate: CliqueCertificate
    exact: bool
    nodes: int
    budget: int
    upper_bound: int  # proven upper bound (== size when exact)

    def to_json(self) -> dict:
        return {
            **self.certificate.to_json(),
            "exact": self.exact,
            "nodes": self.nodes,
            "budget": self.budget,
            "upper_bound": self.upper_bound,
        }


def _color_sort(rows, P: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of P; returns vertices and their colour numbers (ascending)."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = P
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            bounds.append(color)
            uncolored ^= low
            avail &= ~rows[v] & ~low
    return order, bounds


def _greedy_clique(rows, P: int) -> list[int]:
    clique = []
    while P:
        v = max(iter_bits(P), key=lambda u: (rows[u] & P).bit_count())
        clique.append(v)
        P &= rows[v]
    return clique


def max_clique(g: Graph, budget: int = DEFAULT_BUDGET, anchor: int | None = None) -> CliqueResult:
    """Maximum clique by branch and bound with greedy-colouring bounds.

    With ``anchor`` set, only cliques containing that vertex are searched;
    this is exact for vertex-transitive graphs.
    """
    rows = g.rows
    counter = _Counter(budget)
    full = (1 << g.order) - 1
    if anchor is None:
        root_R, root_P = [], full
    else:
        root_R, root_P = [anchor], rows[anchor]
    best = root_R + _greedy_clique(rows, root_P)
    # each root colour class holds at most one clique vertex
    root_bound = len(root_R) + (max(_color_sort(rows, root_P)[1]) if root_P else 0)

    def expand(R: list[int], P: int) -> None:
        nonlocal best
        counter.tick()
        order, bounds = _color_sort(rows, P)
        for idx in range(len(order) - 1, -1, -1):
            if len(R) + bounds[idx] <= len(best):
                return
            v = order[idx]
            R.append(v)
            newP = P & rows[v]
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    exact = True
    try:
        if root_P:
            expand(list(root_R), root_P)
    except BudgetExceeded:
        exact = False
    cert = CliqueCertificate(tuple(sorted(best)))
    return CliqueResult(cert, exact, counter.nodes, budget, len(best) if exact else root_bound)


@dataclass(frozen=True)
class IndependenceResult:
    certificate: IndependentSetCertificate
    exact: bool
    nodes: int
    budget: int
    upper_bound: float

    @property
    def size(self) -> int:
        return self.certificate.size

    def to_json(self) -> dict:
        return {
            **self.certificate.to_json(),
            "exact": self.exact,
            "nodes": self.nodes,
            "budget": self.budget,
            "upper_bound": self.upper_bound,
        }


def max_independent_set(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    anchor: int | None = None,
    upper_bound: float | None = None,
) -> IndependenceResult:
    """Maximum independent set as a maximum clique of the complement.

    ``upper_bound`` (e.g. the spectral ratio bound) is reported when the
    search does not finish.
    """
    res = max_clique(g.complement(), budget, anchor)
    cert = IndependentSetCertificate(res.certificate.vertices)
    bound = float(res.upper_bound)
    if not res.exact and upper_bound is not None:
        bound = min(bound, upper_bound)
    return IndependenceResult(cert, res.exact, res.nodes, budget, bound)


# -- vertex colouring ---------------------------------------------------------------


def dsatur_coloring(g: Graph, seed: int = 0) -> ColoringCertificate:
    """DSATUR greedy colouring; ties broken by a seeded random priority."""
    n = g.order
    rng = random.Random(seed)
    priority = [rng.random() for _ in range(n)]
    rows = g.rows
    colors = [-1] * n
    seen = [0] * n  # bitmask of neighbour colours
    uncolored = set(range(n))
    while uncolored:
        v = max(
            uncolored,
            key=lambda u: (seen[u].bit_count(), (rows[u]).bit_count(), priority[u]),
        )
        used = seen[v]
        c = 0
        while used >> c & 1:
            c += 1
        colors[v] = c
        uncolored.discard(v)
        for u in iter_bits(rows[v]):
            seen[u] |= 1 << c
    return ColoringCertificate(tuple(colors), ColoringKind.PROPER, "dsatur", seed)


@dataclass(frozen=True)
class ColorabilityResult:
    k: int
    feasible: bool | None  # None: budget exhausted
    nodes: int
    coloring: ColoringCertificate | None = None


def k_coloring(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> ColorabilityResult:
    """Decide k-colourability by DSATUR-ordered backtracking with forward checking.

    Colour classes are opened in order (a vertex may only take an already
    used colour or the next new one), so the first vertex is fixed to
    colour 0 and colour permutations are never revisited.
    """
    n = g.order
    rows = g.rows
    if n == 0:
        return ColorabilityResult(k, True, 0, ColoringCertificate(()))
    if k <= 0:
        return ColorabilityResult(k, False, 0)
    full = (1 << k) - 1
    domain = [full] * n
    colors = [-1] * n
    uncolored = (1 << n) - 1
    degree = g.degrees()
    counter = _Counter(budget)

    def pick() -> int:
        best_v, best_key = -1, None
        for u in iter_bits(uncolored):
            key = (domain[u].bit_count(), -(rows[u] & uncolored).bit_count(), -degree[u])
            if best_key is None or key < best_key:
                best_v, best_key = u, key
        return best_v

    def solve(max_used: int) -> bool:
        nonlocal uncolored
        counter.tick()
        if not uncolored:
            return True
        v = pick()
        allowed = domain[v] & ((1 << min(k, max_used + 2)) - 1)
        uncolored &= ~(1 << v)
        for c in iter_bits(allowed):
            bit = 1 << c
            colors[v] = c
            touched = []
            wiped = False
            for u in iter_bits(rows[v] & uncolored):
                if domain[u] & bit:
                    domain[u] &= ~bit
                    touched.append(u)
                    if not domain[u]:
                        wiped = True
                        break
            if not wiped and solve(max(max_used, c)):
                return True
            for u in touched:
                domain[u] |= bit
        colors[v] = -1
        uncolored |= 1 << v
        return False

    try:
        ok = solve(-1)
    except BudgetExceeded:
        return ColorabilityResult(k, None, counter.nodes)
    cert = ColoringCertificate(tuple(colors), ColoringKind.PROPER, "k_coloring") if ok else None
    return ColorabilityResult(k, ok, counter.nodes, cert)


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    coloring: ColoringCertificate
    transcript: tuple[dict, ...]
    lower_reason: str

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "lower_reason": self.lower_reason,
            "transcript": list(self.transcript),
            "coloring": self.coloring.to_json(),
        }


def exact_chromatic(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    lower_bound: int = 1,
    lower_reason: str = "trivial",
    seeds: tuple[int, ...] = (0, 1, 2, 3),
) -> ChromaticResult:
    """Chromatic number by refuting k-colourings from ``lower_bound`` upwards.

    Each k below the answer is refuted by an exhausted backtracking search
    recorded in the transcript.  On budget exhaustion the result is the
    interval [last refuted + 1, best colouring found].
    """
    best = min((dsatur_coloring(g, s) for s in seeds), key=lambda c: (c.color_count, c.seed))
    lower = max(lower_bound, 1 if g.order else 0)
    reason = lower_reason
    transcript = []
    k = lower
    while k < best.color_count:
        res = k_coloring(g, k, budget)
        entry = {"k": k, "nodes": res.nodes, "budget": budget}
        if res.feasible is None:
            entry["result"] = "BUDGET_EXHAUSTED"
            transcript.append(entry)
            break
        if res.feasible:
            entry["result"] = "FEASIBLE"
            transcript.append(entry)
            best = res.coloring
            break
        entry["result"] = "INFEASIBLE"
        transcript.append(entry)
        k += 1
        lower = k
        reason = f"exhaustive refutation of {k - 1}-colouring"
    return ChromaticResult(lower, best.color_count, best, tuple(transcript), reason)
