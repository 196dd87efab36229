"""Constructions, invariants and claim checks for unit-quadrance graphs D_q."""
from .ffield import Field, FieldElement, PrimePower, SquareClass, make_field
from .qgraph import Graph, QuadranceGraph, build_graph

__version__ = "0.1.0"

__all__ = [
    "Field",
    "FieldElement",
    "Graph",
    "PrimePower",
    "QuadranceGraph",
    "SquareClass",
    "build_graph",
    "make_field",
]
