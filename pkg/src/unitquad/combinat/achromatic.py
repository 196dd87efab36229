"""Achromatic number: integer bound calculator, complete-colouring search."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from ..qgraph import Graph, iter_bits
from .certificates import ColoringCertificate, ColoringKind, verify_coloring

EXACT_ORDER_LIMIT = 12


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: float
    direction: str  # LOWER or UPPER
    provenance: str

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "direction": self.direction,
            "provenance": self.provenance,
        }


def achromatic_upper(q: int, delta: int) -> int:
    """Largest m with m(m-1) <= q^2 * delta."""
    budget = q * q * delta
    m = (1 + math.isqrt(1 + 4 * budget)) // 2
    while m * (m - 1) > budget:
        m -= 1
    while (m + 1) * m <= budget:
        m += 1
    return m


def achromatic_bounds(q: int, delta: int) -> tuple[BoundReport, BoundReport]:
    lower = BoundReport(
        "achromatic_lower", q + 1, "LOWER", "claimed psi >= q + 1 (unproven; witness only via search)"
    )
    upper = BoundReport(
        "achromatic_upper",
        achromatic_upper(q, delta),
        "UPPER",
        "largest m with m(m-1) <= q^2 * delta (smallest class has <= q^2/m vertices)",
    )
    return lower, upper


@dataclass(frozen=True)
class CompleteColoringResult:
    found: bool
    certificate: ColoringCertificate | None
    best_count: int
    target: int
    trials: int

    @property
    def status(self) -> str:
        return "FOUND" if self.found else "NOT-FOUND"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "best_count": self.best_count,
            "target": self.target,
            "trials": self.trials,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


def _merge_to_complete(g: Graph, rng: random.Random) -> list[int]:
    """Start from singleton classes; merge non-adjacent class pairs until complete."""
    rows = g.rows
    classes = [1 << v for v in range(g.order)]
    nbr = list(rows)
    order = list(range(g.order))
    rng.shuffle(order)
    classes = [classes[v] for v in order]
    nbr = [nbr[v] for v in order]
    tiebreak = [rng.random() for _ in range(g.order)]
    keys = list(range(len(classes)))
    while True:
        # merge the smallest class with the smallest class it has no edge to
        ranked = sorted(range(len(classes)), key=lambda i: (classes[i].bit_count(), tiebreak[keys[i]]))
        merged = False
        for a in ranked:
            for b in ranked:
                if b != a and not nbr[a] & classes[b]:
                    classes[a] |= classes[b]
                    nbr[a] |= nbr[b]
                    del classes[b], nbr[b], keys[b]
                    merged = True
                    break
            if merged:
                break
        if not merged:
            break
    colors = [0] * g.order
    for c, mask in enumerate(classes):
        for v in iter_bits(mask):
            colors[v] = c
    return colors


def _canonical(colors: list[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(c, len(relabel)) for c in colors)


def complete_coloring_heuristic(g: Graph, seed: int = 0, target: int = 2, trials: int = 20) -> CompleteColoringResult:
    """Search for a complete proper colouring with at least ``target`` colours.

    Failure means NOT-FOUND, never nonexistence.
    """
    if target < 2:
        raise ValueError("target must be at least 2")
    rng = random.Random(seed)
    best: tuple[int, ...] | None = None
    done = 0
    for _ in range(trials):
        done += 1
        colors = _canonical(_merge_to_complete(g, rng))
        if best is None or len(set(colors)) > len(set(best)):
            best = colors
        if len(set(best)) >= target:
            break
    cert = ColoringCertificate(best, ColoringKind.COMPLETE, "merge-heuristic", seed)
    if not verify_coloring(g, cert):
        raise AssertionError("merge heuristic produced an invalid complete colouring")
    count = cert.color_count
    found = count >= target
    return CompleteColoringResult(found, cert, count, target, done)


@dataclass(frozen=True)
class ExactAchromatic:
    value: int
    certificate: ColoringCertificate
    partitions_checked: int


def exact_achromatic(g: Graph) -> ExactAchromatic:
    """Achromatic number by enumerating every partition into independent sets."""
    n = g.order
    if n > EXACT_ORDER_LIMIT:
        raise ValueError(f"exhaustive achromatic search limited to {EXACT_ORDER_LIMIT} vertices")
    rows = g.rows
    classes: list[int] = []
    assign = [0] * n
    best: tuple[int, ...] | None = None
    checked = 0

    def complete() -> bool:
        nbr = [0] * len(classes)
        for i, mask in enumerate(classes):
            for v in iter_bits(mask):
                nbr[i] |= rows[v]
        return all(nbr[a] & classes[b] for a in range(len(classes)) for b in range(a + 1, len(classes)))

    def place(v: int) -> None:
        nonlocal best, checked
        if v == n:
            checked += 1
            if (best is None or len(classes) > len(set(best))) and complete():
                best = tuple(assign)
            return
        for i in range(len(classes)):
            if not rows[v] & classes[i]:
                classes[i] |= 1 << v
                assign[v] = i
                place(v + 1)
                classes[i] &= ~(1 << v)
        classes.append(1 << v)
        assign[v] = len(classes) - 1
        place(v + 1)
        classes.pop()

    place(0)
    cert = ColoringCertificate(best, ColoringKind.COMPLETE, "exhaustive-partitions")
    return ExactAchromatic(cert.color_count, cert, checked)
