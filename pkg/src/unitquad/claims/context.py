"""Per-q computation context shared by all claim checkers.

Each invariant is computed lazily, at most once per context, inside the
exactness scope configured by :class:`Budgets`.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import cached_property

from ..combinat.achromatic import achromatic_upper, complete_coloring_heuristic, exact_achromatic
from ..combinat.certificates import verify_clique, verify_coloring, verify_independent_set
from ..combinat.edges import class_one_obstruction, misra_gries
from ..combinat.perfection import perfection_verdict
from ..combinat.ramsey import ramsey_hypothesis, ramsey_witness
from ..combinat.search import (
    ChromaticResult,
    CliqueResult,
    IndependenceResult,
    dsatur_coloring,
    exact_chromatic,
    max_clique,
    max_independent_set,
    triangle_count,
)
from ..ffield import make_field
from ..geometry import triangle_predicate
from ..qgraph import build_graph, expected_degree, find_cycle_of_length, odd_cycle_witness
from ..spectra import (
    character_spectrum,
    hoffman_lower,
    numeric_spectrum,
    ratio_theta,
    spectra_agree,
)

BOUND_TOL = 1e-9


@dataclass(frozen=True)
class Budgets:
    nodes: int = 2_000_000
    exact_alpha_max_q: int = 9
    exact_chi_max_q: int = 9
    numeric_spectrum_max_q: int = 27
    clique_max_q: int = 49
    edge_coloring_max_q: int = 27
    achromatic_max_q: int = 27
    perfection_max_q: int = 27

    def to_json(self) -> dict:
        return asdict(self)


class QContext:
    def __init__(self, q: int, budgets: Budgets | None = None, seed: int = 0):
        self.q = q
        self.budgets = budgets or Budgets()
        self.seed = seed
        self.field = make_field(q)
        self.degree = expected_degree(q)

    @cached_property
    def graph(self):
        return build_graph(self.q)

    @cached_property
    def triangles(self):
        return triangle_count(self.graph)

    @cached_property
    def triangle_class(self):
        return triangle_predicate(self.field)

    # -- spectra -----------------------------------------------------------------

    @cached_property
    def spectrum(self):
        return character_spectrum(self.graph)

    @cached_property
    def numeric(self):
        if self.q > self.budgets.numeric_spectrum_max_q:
            return None
        return numeric_spectrum(self.graph)

    @cached_property
    def spectra_crosscheck(self) -> bool | None:
        return None if self.numeric is None else spectra_agree(self.spectrum, self.numeric)

    @cached_property
    def ratio_theta(self) -> float:
        return ratio_theta(self.spectrum)

    @cached_property
    def hoffman(self) -> float:
        return hoffman_lower(self.spectrum)

    # -- cliques, independence, colouring -----------------------------------------

    @cached_property
    def clique(self) -> CliqueResult | None:
        if self.q > self.budgets.clique_max_q:
            return None
        res = max_clique(self.graph, self.budgets.nodes)
        assert verify_clique(self.graph, res.certificate)
        return res

    @cached_property
    def independence(self) -> IndependenceResult:
        budget = self.budgets.nodes if self.q <= self.budgets.exact_alpha_max_q else 20_000
        res = max_independent_set(self.graph, budget, upper_bound=self.ratio_theta)
        assert verify_independent_set(self.graph, res.certificate)
        return res

    @cached_property
    def alpha_exact(self) -> int | None:
        ind = self.independence
        return ind.size if ind.exact else None

    @cached_property
    def odd_cycle(self):
        cert = odd_cycle_witness(self.graph)
        assert cert.verify(self.graph)
        return cert

    @cached_property
    def chromatic_lower_seed(self) -> tuple[int, str]:
        """Certified chromatic lower bound before any colouring search."""
        candidates = [(3, f"odd cycle of length {self.odd_cycle.length}")]
        if self.clique is not None and self.clique.exact:
            candidates.append((self.clique.certificate.size, "clique certificate"))
        candidates.append((math.ceil(self.hoffman - BOUND_TOL), "Hoffman bound (measured spectrum)"))
        alpha_hi = self.independence.upper_bound
        candidates.append((-(-self.graph.order // math.floor(alpha_hi + BOUND_TOL)), "ceil(n / alpha upper)"))
        return max(candidates, key=lambda c: c[0])

    @cached_property
    def chromatic(self) -> ChromaticResult:
        lo, reason = self.chromatic_lower_seed
        if self.q <= self.budgets.exact_chi_max_q:
            res = exact_chromatic(self.graph, self.budgets.nodes, lo, reason)
        else:
            seeds = (self.seed, self.seed + 1)
            best = min((dsatur_coloring(self.graph, s) for s in seeds), key=lambda c: c.color_count)
            res = ChromaticResult(lo, best.color_count, best, (), reason)
        assert verify_coloring(self.graph, res.coloring)
        return res

    # -- edges, perfection, achromatic, Ramsey ---------------------------------------

    @cached_property
    def edge_coloring(self):
        if self.q > self.budgets.edge_coloring_max_q:
            return None
        return misra_gries(self.graph)

    @cached_property
    def edge_obstruction(self):
        cert = self.edge_coloring
        return None if cert is None else class_one_obstruction(self.graph, cert)

    @cached_property
    def perfection(self):
        if self.q > self.budgets.perfection_max_q:
            return None
        chrom = self.chromatic if self.q != 3 else None
        return perfection_verdict(
            self.graph,
            self.q,
            self.budgets.nodes,
            vertex_transitive=True,
            clique=self.clique,
            chromatic=chrom,
        )

    @cached_property
    def cycle_of_length_q(self):
        if self.field.n == 1:
            return self.odd_cycle
        return find_cycle_of_length(self.graph, self.q, min(self.budgets.nodes, 500_000))

    @cached_property
    def achromatic_upper(self) -> int:
        return achromatic_upper(self.q, self.degree)

    @cached_property
    def achromatic_exact(self):
        return exact_achromatic(self.graph) if self.q == 3 else None

    @cached_property
    def complete_coloring(self):
        if self.q > self.budgets.achromatic_max_q:
            return None
        trials = 20 if self.q <= 13 else 3
        return complete_coloring_heuristic(self.graph, self.seed, self.q + 1, trials)

    @cached_property
    def ramsey(self):
        if not ramsey_hypothesis(self.q):
            return None
        return ramsey_witness(self.q, self.budgets.nodes, self.graph, self.independence)

    # -- summary row -------------------------------------------------------------------

    def profile(self) -> dict:
        """Invariants for the report row; every value is deterministic."""
        chrom = self.chromatic
        clique = self.clique
        obstruction = self.edge_obstruction
        return {
            "q": self.q,
            "p": self.field.p,
            "n": self.field.n,
            "delta": self.degree,
            "triangles": self.triangles.count,
            "omega": clique.certificate.size if clique and clique.exact else None,
            "alpha": self.independence.size,
            "alpha_exact": self.independence.exact,
            "chi_lo": chrom.lower,
            "chi_hi": chrom.upper,
            "chi_exact": chrom.value,
            "chi_edge": obstruction.chromatic_index if obstruction else None,
            "lambda_min": self.spectrum.smallest,
            "lambda_max_nontrivial": max(
                (v for v, _ in self.spectrum.eigenvalues if abs(v - self.degree) > 1e-6), default=0.0
            ),
            "ratio_theta": self.ratio_theta,
            "hoffman": self.hoffman,
        }
