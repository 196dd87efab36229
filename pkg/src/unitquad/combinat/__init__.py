"""Exact and heuristic colouring, clique and independence invariants with certificates."""
from .achromatic import (
    BoundReport,
    achromatic_bounds,
    achromatic_upper,
    complete_coloring_heuristic,
    exact_achromatic,
)
from .certificates import (
    CliqueCertificate,
    ColoringCertificate,
    ColoringKind,
    EdgeColoringCertificate,
    IndependentSetCertificate,
    verify_clique,
    verify_coloring,
    verify_edge_coloring,
    verify_independent_set,
)
from .edges import class_one_obstruction, misra_gries
from .perfection import Perfection, PerfectionVerdict, perfection_verdict
from .ramsey import HypothesisError, choice_bound_eval, ramsey_witness
from .search import (
    dsatur_coloring,
    exact_chromatic,
    k_coloring,
    max_clique,
    max_independent_set,
    triangle_count,
)

# names used in the operation catalogue
exact_clique = max_clique
exact_independence = max_independent_set
dsatur_heuristic = dsatur_coloring
edge_color_misra_gries = misra_gries

__all__ = [
    "BoundReport",
    "CliqueCertificate",
    "ColoringCertificate",
    "ColoringKind",
    "EdgeColoringCertificate",
    "HypothesisError",
    "IndependentSetCertificate",
    "Perfection",
    "PerfectionVerdict",
    "achromatic_bounds",
    "achromatic_upper",
    "choice_bound_eval",
    "class_one_obstruction",
    "complete_coloring_heuristic",
    "dsatur_coloring",
    "dsatur_heuristic",
    "edge_color_misra_gries",
    "exact_achromatic",
    "exact_chromatic",
    "exact_clique",
    "exact_independence",
    "k_coloring",
    "max_clique",
    "max_independent_set",
    "misra_gries",
    "perfection_verdict",
    "ramsey_witness",
    "triangle_count",
    "verify_clique",
    "verify_coloring",
    "verify_edge_coloring",
    "verify_independent_set",
]
