"""Adjacency spectra of D_q and the bounds derived from them.

D_q is a Cayley graph on (F_q^2, +), so its eigenvalues are the additive
character sums over the unit circle,

    lambda_(a,b) = sum over (x, y) on the unit circle of cos(2 pi tr(ax + by) / p).

``numeric_spectrum`` diagonalizes the dense adjacency matrix instead and is
used as an independent cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ffield import PrimePower
from .qgraph import Graph, QuadranceGraph, expected_degree

MERGE_TOL = 1e-9
COMPARE_TOL = 1e-6


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, sorted descending."""

    eigenvalues: tuple[tuple[float, int], ...]
    n: int

    @classmethod
    def from_values(cls, values) -> Spectrum:
        vals = sorted((float(v) for v in values), reverse=True)
        groups: list[list] = []
        for v in vals:
            if groups and abs(groups[-1][0] - v) <= MERGE_TOL:
                groups[-1][1] += 1
            else:
                groups.append([v, 1])
        return cls(tuple((v, m) for v, m in groups), len(vals))

    def values(self) -> np.ndarray:
        """All eigenvalues with repetition, descending."""
        return np.array([v for v, m in self.eigenvalues for _ in range(m)])

    @property
    def largest(self) -> float:
        return self.eigenvalues[0][0]

    @property
    def smallest(self) -> float:
        return self.eigenvalues[-1][0]

    def to_json(self, q: int | None = None) -> dict:
        return {"q": q, "eigenvalues": [[v, m] for v, m in self.eigenvalues]}

    @classmethod
    def from_json(cls, doc: dict) -> Spectrum:
        pairs = tuple((float(v), int(m)) for v, m in doc["eigenvalues"])
        return cls(pairs, sum(m for _, m in pairs))


@dataclass(frozen=True)
class SpectralBounds:
    lambda_max_nontrivial: float
    lambda_min: float
    ratio_theta: float
    hoffman_chromatic_lower: float
    alpha_upper_three_halves: float


def character_values(g: QuadranceGraph) -> np.ndarray:
    """Eigenvalue for every character (a, b), indexed like the vertices."""
    f = g.field
    t = f.tables
    q = f.q
    circle = np.array(g.unit_circle)
    sx, sy = np.divmod(circle, q)
    a = np.repeat(np.arange(q), q)[:, None]
    b = np.tile(np.arange(q), q)[:, None]
    tr = t.trace[t.add[t.mul[a, sx[None, :]], t.mul[b, sy[None, :]]]]
    return np.cos(2.0 * np.pi * tr / f.p).sum(axis=1)


def character_spectrum(g: QuadranceGraph) -> Spectrum:
    return Spectrum.from_values(character_values(g))


def numeric_spectrum(g: Graph) -> Spectrum:
    if g.order > 2500:
        raise SpectrumError(f"order {g.order} too large for a dense eigensolver")
    try:
        vals = np.linalg.eigvalsh(g.adjacency_matrix())
    except np.linalg.LinAlgError as exc:
        raise SpectrumError(f"eigensolver did not converge: {exc}") from exc
    return Spectrum.from_values(vals)


def spectra_agree(a: Spectrum, b: Spectrum, tol: float = COMPARE_TOL) -> bool:
    va, vb = a.values(), b.values()
    return va.shape == vb.shape and bool(np.all(np.abs(va - vb) <= tol))


def trace_identities(s: Spectrum, degree: int) -> tuple[float, float]:
    """(sum of eigenvalues, sum of squares minus n * degree); both should be 0."""
    v = s.values()
    return float(v.sum()), float((v * v).sum() - s.n * degree)


def eigenvalue_bound_check(s: Spectrum, q: int) -> dict:
    """Test |lambda| <= sqrt(q) and <= 2 sqrt(q) for every eigenvalue != degree."""
    degree = expected_degree(q)
    others = [abs(v) for v, _ in s.eigenvalues if abs(v - degree) > COMPARE_TOL]
    worst = max(others, default=0.0)
    root = math.sqrt(q)
    return {
        "holds_sqrt_q": worst <= root + COMPARE_TOL,
        "holds_2sqrt_q": worst <= 2 * root + COMPARE_TOL,
        "max_abs_nontrivial": worst,
    }


def _require_edges(s: Spectrum) -> None:
    if not s.smallest < -COMPARE_TOL:
        raise SpectrumError("spectral bound needs a graph with at least one edge")


def ratio_theta(s: Spectrum) -> float:
    """-n lambda_n / (lambda_1 - lambda_n), an upper bound on the independence number."""
    _require_edges(s)
    return -s.n * s.smallest / (s.largest - s.smallest)


def hoffman_lower(s: Spectrum) -> float:
    """1 + lambda_1 / (-lambda_n), a lower bound on the chromatic number."""
    _require_edges(s)
    return 1.0 + s.largest / (-s.smallest)


def spectral_bounds(s: Spectrum, q: int) -> SpectralBounds:
    degree = expected_degree(q)
    nontrivial = [v for v, _ in s.eigenvalues if abs(v - degree) > COMPARE_TOL]
    return SpectralBounds(
        lambda_max_nontrivial=max(nontrivial, default=0.0),
        lambda_min=s.smallest,
        ratio_theta=ratio_theta(s),
        hoffman_chromatic_lower=hoffman_lower(s),
        alpha_upper_three_halves=q**1.5,
    )


def theta_closed_form(q: int) -> float:
    """The ratio bound with lambda_n replaced by -sqrt(q): q^2 sqrt(q) / (degree + sqrt(q))."""
    root = math.sqrt(q)
    return q * q * root / (expected_degree(q) + root)


def theorem1_bounds(q: int) -> dict:
    """The closed-form chromatic bounds for q = p^n > 3.

    ``lower_as_stated`` is 1 + degree/sqrt(q), ``lower_variant`` is
    1 + (q-1)/sqrt(q), and ``upper`` is (p^n + p^(n-1)) / 2.
    """
    if q <= 3:
        raise SpectrumError("the chromatic bounds need q > 3")
    pp = PrimePower.from_q(q)
    root = math.sqrt(q)
    return {
        "lower_as_stated": 1 + expected_degree(q) / root,
        "lower_variant": 1 + (q - 1) / root,
        "upper": (pp.p**pp.n + pp.p ** (pp.n - 1)) / 2,
    }
