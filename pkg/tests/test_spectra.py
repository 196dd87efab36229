import math

import numpy as np
import pytest

from unitquad.ffield import odd_prime_powers
from unitquad.qgraph import Graph, expected_degree
from unitquad.spectra import (
    Spectrum,
    SpectrumError,
    character_spectrum,
    character_values,
    eigenvalue_bound_check,
    hoffman_lower,
    numeric_spectrum,
    ratio_theta,
    spectra_agree,
    spectral_bounds,
    theta_closed_form,
    theorem1_bounds,
    trace_identities,
)

UP_TO_27 = odd_prime_powers(3, 27)


def test_d3_spectrum_is_rook_graph(D):
    s = character_spectrum(D(3))
    assert [(round(v, 9), m) for v, m in s.eigenvalues] == [(4.0, 1), (1.0, 4), (-2.0, 4)]
    vals = character_values(D(3))
    assert vals[0] == pytest.approx(4.0)
    assert vals[3] == pytest.approx(1.0)  # character (a, b) = (1, 0)


def test_trivial_character_gives_degree(D):
    for q in (5, 9, 25):
        assert character_values(D(q))[0] == pytest.approx(expected_degree(q))


@pytest.mark.parametrize("q", UP_TO_27)
def test_character_matches_numeric(D, q):
    g = D(q)
    a, b = character_spectrum(g), numeric_spectrum(g)
    assert spectra_agree(a, b)
    assert a.n == b.n == q * q
    assert sum(m for _, m in a.eigenvalues) == q * q
    for s in (a, b):
        total, squares = trace_identities(s, expected_degree(q))
        assert abs(total) < 1e-6 and abs(squares) < 1e-6
        assert s.largest == pytest.approx(expected_degree(q))
        assert eigenvalue_bound_check(s, q)["holds_2sqrt_q"]


def test_numeric_examples(D):
    assert numeric_spectrum(D(5)).largest == pytest.approx(4.0)
    low = numeric_spectrum(D(7)).smallest
    assert -2 * math.sqrt(7) <= low < 0


def test_eigenvalue_bound_examples(D):
    res = eigenvalue_bound_check(character_spectrum(D(3)), 3)
    assert res == {"holds_sqrt_q": False, "holds_2sqrt_q": True, "max_abs_nontrivial": pytest.approx(2.0)}
    assert eigenvalue_bound_check(character_spectrum(D(5)), 5)["holds_2sqrt_q"]
    flat = Spectrum.from_values([4.0] + [0.0] * 8)
    assert eigenvalue_bound_check(flat, 3) == {"holds_sqrt_q": True, "holds_2sqrt_q": True, "max_abs_nontrivial": 0.0}


def test_ratio_and_hoffman_examples(D):
    k2 = Spectrum.from_values([1.0, -1.0])
    assert ratio_theta(k2) == pytest.approx(1.0)
    assert hoffman_lower(k2) == pytest.approx(2.0)
    s3 = character_spectrum(D(3))
    assert ratio_theta(s3) == pytest.approx(3.0)
    assert hoffman_lower(s3) == pytest.approx(3.0)
    s9 = character_spectrum(D(9))
    assert s9.smallest == pytest.approx(-4.0)
    assert hoffman_lower(s9) == pytest.approx(3.0)
    assert ratio_theta(s9) == pytest.approx(27.0)


def test_bounds_reject_edgeless_graph():
    empty = numeric_spectrum(Graph((0, 0, 0)))
    with pytest.raises(SpectrumError):
        ratio_theta(empty)
    with pytest.raises(SpectrumError):
        hoffman_lower(empty)


def test_spectral_bounds_record(D):
    b = spectral_bounds(character_spectrum(D(5)), 5)
    assert b.alpha_upper_three_halves == pytest.approx(5**1.5)
    assert b.lambda_min == pytest.approx(-(1 + math.sqrt(5)))
    assert b.ratio_theta >= 1
    assert b.hoffman_chromatic_lower == pytest.approx(1 + 4 / (1 + math.sqrt(5)))


def test_theorem_bounds_examples():
    b9 = theorem1_bounds(9)
    assert b9["lower_as_stated"] == pytest.approx(1 + 8 / 3)
    assert b9["upper"] == 6
    b7 = theorem1_bounds(7)
    assert b7["lower_as_stated"] == pytest.approx(1 + 8 / math.sqrt(7))
    assert b7["upper"] == 4
    assert b7["lower_as_stated"] > b7["upper"]
    assert theorem1_bounds(5)["lower_variant"] == pytest.approx(1 + 4 / math.sqrt(5))
    with pytest.raises(SpectrumError):
        theorem1_bounds(3)


def test_theta_closed_form_below_three_halves():
    for q in UP_TO_27:
        assert theta_closed_form(q) <= q**1.5


def test_spectrum_json_round_trip(D):
    s = character_spectrum(D(7))
    doc = s.to_json(7)
    assert doc["q"] == 7
    assert Spectrum.from_json(doc) == s


def test_merge_tolerance():
    s = Spectrum.from_values([1.0, 1.0 + 1e-12, -1.0, 0.5])
    assert s.eigenvalues == ((1.0 + 1e-12, 2), (0.5, 1), (-1.0, 1))
    assert np.allclose(s.values(), [1, 1, 0.5, -1])
