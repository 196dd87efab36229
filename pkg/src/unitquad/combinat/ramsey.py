"""Ramsey witnesses from triangle-free D_q and the choice-number bound evaluator."""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..ffield import is_prime
from ..qgraph import QuadranceGraph, build_graph, export
from ..spectra import character_spectrum, ratio_theta
from .achromatic import BoundReport
from .search import DEFAULT_BUDGET, IndependenceResult, TriangleCount, max_independent_set, triangle_count


class HypothesisError(ValueError):
    """The requested q is outside the statement's hypothesis."""


def ramsey_hypothesis(q: int) -> bool:
    return is_prime(q) and q % 12 in (5, 7)


@dataclass(frozen=True)
class RamseyWitness:
    q: int
    order: int
    triangles: TriangleCount
    independence: IndependenceResult
    ratio_theta: float
    independence_upper: float
    bound: BoundReport
    dimacs: bytes

    @property
    def m(self) -> int:
        return math.floor(self.independence_upper + 1e-9) + 1

    def statement(self) -> str:
        return f"R({self.m}, 3) > {self.order}"

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "order": self.order,
            "triangle_count": self.triangles.count,
            "independence": self.independence.to_json(),
            "ratio_theta": self.ratio_theta,
            "independence_upper": self.independence_upper,
            "statement": self.statement(),
            "bound": self.bound.to_json(),
        }


def ramsey_witness(
    q: int,
    budget: int = DEFAULT_BUDGET,
    graph: QuadranceGraph | None = None,
    independence: IndependenceResult | None = None,
) -> RamseyWitness:
    """Bundle the triangle-free certificate and an independence upper bound U.

    A triangle-free graph on q^2 vertices without independent sets of size
    floor(U) + 1 shows R(floor(U) + 1, 3) > q^2.
    """
    if not ramsey_hypothesis(q):
        raise HypothesisError(f"{q} is not a prime congruent to +-7 mod 12")
    g = graph if graph is not None else build_graph(q)
    tri = triangle_count(g)
    if tri.count:
        raise AssertionError(f"D_{q} has {tri.count} triangles")
    theta = ratio_theta(character_spectrum(g))
    if independence is None:
        independence = max_independent_set(g, budget, anchor=0, upper_bound=theta)
    upper = min(float(independence.upper_bound), theta)
    m = math.floor(upper + 1e-9) + 1
    provenance = (
        "exact independence number" if independence.exact and independence.upper_bound <= theta
        else "spectral ratio bound"
    )
    bound = BoundReport(f"R({m},3)", g.order + 1, "LOWER", f"triangle-free D_{q}; {provenance}")
    return RamseyWitness(q, g.order, tri, independence, theta, upper, bound, export(g, "DIMACS"))


def choice_bound_eval(q: int, gamma: float, alpha: int | None = None) -> dict:
    """(1 + gamma) q^2 / log2 q, recorded as an asymptotic (q >= q0(gamma)) claim.

    With ``alpha`` given, also reports the unconditional ceil(q^2 / alpha)
    lower end of the chain ceil(n/alpha) <= chi <= ch.
    """
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    value = (1 + gamma) * q * q / math.log2(q)
    out = {
        "bound": BoundReport(
            "choice_upper", value, "UPPER", "(1+gamma) q^2 / log2 q, valid only for q >= q0(gamma)"
        ),
        "status": "INFORMATIONAL",
    }
    if alpha is not None:
        out["chi_lower_from_alpha"] = -(-q * q // alpha)
    return out
