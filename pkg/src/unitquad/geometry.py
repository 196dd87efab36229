"""Quadrance, circles and the two-circle intersection law over F_q.

Points in the plane F_q^2 get the vertex index ``idx(x) * q + idx(y)``.
The predicted intersection count comes from the square class of
``f(i, j, k) = ij - (k - i - j)^2 / 4``, which is symmetric in i, j, k; the
oracle counts common points by scanning every point of the plane, with no
algebra shared with the formula.

``f_invariant_stated`` keeps the variant ``ij - (i - j - k)^2 / 4``.  It is
not symmetric and mispredicts the count; it exists only so that the
discrepancy can be measured.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ffield import Field, FieldElement, FieldError, SquareClass, square_class


@dataclass(frozen=True)
class Point:
    x: FieldElement
    y: FieldElement

    def __post_init__(self) -> None:
        if self.x.field is not self.y.field:
            raise FieldError("point coordinates belong to different fields")

    @property
    def field(self) -> Field:
        return self.x.field

    @property
    def index(self) -> int:
        return self.x.index * self.field.q + self.y.index

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __repr__(self) -> str:
        return f"({self.x!r}, {self.y!r})"


@dataclass(frozen=True)
class Circle:
    center: Point
    quadrance: FieldElement


def point(f: Field, x, y) -> Point:
    """Point from element indices, coefficient sequences or elements."""
    def conv(v):
        return v if isinstance(v, FieldElement) else f.element(v)
    return Point(conv(x), conv(y))


def point_from_index(f: Field, v: int) -> Point:
    return Point(f.element(v // f.q), f.element(v % f.q))


def all_points(f: Field) -> list[Point]:
    return [point_from_index(f, v) for v in range(f.q * f.q)]


def quadrance(f: Field, a: Point, b: Point) -> FieldElement:
    dx = b.x - a.x
    dy = b.y - a.y
    return dx * dx + dy * dy


def circle_points(f: Field, c: Circle) -> list[Point]:
    """Points at quadrance ``c.quadrance`` from the center, in vertex order."""
    return [z for z in all_points(f) if quadrance(f, c.center, z) == c.quadrance]


# -- index-based helpers (numpy tables) -------------------------------------------


def norm_table(f: Field) -> np.ndarray:
    """``Q(origin, z)`` as an element index, for every vertex index z."""
    t = f.tables
    sq = t.square
    xs = np.repeat(np.arange(f.q), f.q)
    ys = np.tile(np.arange(f.q), f.q)
    return t.add[sq[xs], sq[ys]]


def translate_indices(f: Field, vertices: np.ndarray, shift: int) -> np.ndarray:
    """Vertex indices of ``vertices + shift`` (vector addition in F_q^2)."""
    q, add = f.q, f.tables.add
    vx, vy = np.divmod(np.asarray(vertices), q)
    sx, sy = divmod(shift, q)
    return add[vx, sx] * q + add[vy, sy]


def difference_indices(f: Field, vertices: np.ndarray, base: int) -> np.ndarray:
    """Vertex indices of ``vertices - base``."""
    q, neg = f.q, f.tables.neg
    bx, by = divmod(base, q)
    return translate_indices(f, vertices, int(neg[bx]) * q + int(neg[by]))


# -- the intersection law ---------------------------------------------------------


def f_invariant(f: Field, i: FieldElement, j: FieldElement, k: FieldElement) -> FieldElement:
    d = k - i - j
    return i * j - d * d / f.element([4])


def f_invariant_stated(f: Field, i: FieldElement, j: FieldElement, k: FieldElement) -> FieldElement:
    d = i - j - k
    return i * j - d * d / f.element([4])


_COUNT_BY_CLASS = {SquareClass.NONSQUARE: 0, SquareClass.ZERO: 1, SquareClass.SQUARE: 2}


def predicted_intersections(f: Field, i: FieldElement, j: FieldElement, k: FieldElement) -> int:
    """Number of common points of C_i(X), C_j(Y) when Q(X, Y) = k.

    Only defined for nonzero i, j, k.
    """
    if not (i and j and k):
        raise FieldError("predicted_intersections needs nonzero i, j and k")
    return _COUNT_BY_CLASS[square_class(f, f_invariant(f, i, j, k))]


def oracle_intersections(f: Field, X: Point, Y: Point, i: FieldElement, j: FieldElement) -> int:
    """|C_i(X) ∩ C_j(Y)| by scanning all q^2 points."""
    norms = norm_table(f)
    everything = np.arange(f.q * f.q)
    from_x = norms[difference_indices(f, everything, X.index)]
    from_y = norms[difference_indices(f, everything, Y.index)]
    return int(np.count_nonzero((from_x == i.index) & (from_y == j.index)))


def oracle_intersection_table(f: Field, X: Point, Y: Point) -> np.ndarray:
    """``table[i, j]`` = |C_i(X) ∩ C_j(Y)| for all element indices i, j at once."""
    norms = norm_table(f)
    everything = np.arange(f.q * f.q)
    from_x = norms[difference_indices(f, everything, X.index)]
    from_y = norms[difference_indices(f, everything, Y.index)]
    table = np.zeros((f.q, f.q), dtype=np.int64)
    np.add.at(table, (from_x, from_y), 1)
    return table


def point_at_quadrance(f: Field, k: FieldElement) -> Point:
    """First point (vertex order) at quadrance k from the origin."""
    hits = np.flatnonzero(norm_table(f) == k.index)
    if hits.size == 0:
        raise FieldError(f"no point at quadrance {k!r}")
    return point_from_index(f, int(hits[0]))


def triangle_predicate(f: Field) -> SquareClass:
    """Square class of f(1, 1, 1) = 3/4; NONSQUARE predicts a triangle-free D_q."""
    one = f.one
    return square_class(f, f_invariant(f, one, one, one))


def check_intersection_law(f: Field) -> dict:
    """Compare formula and oracle for every nonzero (i, j, k).

    For each nonzero k one realizing pair (origin, first point at quadrance k)
    is used.
    """
    origin = point(f, 0, 0)
    elements = [f.element(v) for v in range(1, f.q)]
    mismatches = []
    stated_mismatches = 0
    checked = 0
    for k in elements:
        Y = point_at_quadrance(f, k)
        table = oracle_intersection_table(f, origin, Y)
        for i in elements:
            for j in elements:
                predicted = predicted_intersections(f, i, j, k)
                observed = int(table[i.index, j.index])
                checked += 1
                if predicted != observed:
                    mismatches.append((i.index, j.index, k.index, predicted, observed))
                stated = _COUNT_BY_CLASS[square_class(f, f_invariant_stated(f, i, j, k))]
                stated_mismatches += stated != observed
    return {"checked": checked, "mismatches": mismatches, "stated_form_mismatches": stated_mismatches}
