import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitquad.combinat import (
    CliqueCertificate,
    ColoringCertificate,
    ColoringKind,
    EdgeColoringCertificate,
    HypothesisError,
    IndependentSetCertificate,
    Perfection,
    achromatic_bounds,
    achromatic_upper,
    choice_bound_eval,
    class_one_obstruction,
    complete_coloring_heuristic,
    dsatur_coloring,
    exact_achromatic,
    exact_chromatic,
    k_coloring,
    max_clique,
    max_independent_set,
    misra_gries,
    perfection_verdict,
    ramsey_witness,
    triangle_count,
    verify_clique,
    verify_coloring,
    verify_edge_coloring,
    verify_independent_set,
)
from unitquad.combinat.perfection import (
    complete_bipartite_edges,
    find_induced_odd_cycle,
    find_isomorphism,
    line_graph,
    verify_induced_odd_cycle,
)
from unitquad.ffield import SquareClass, make_field, odd_prime_powers
from unitquad.geometry import triangle_predicate
from unitquad.qgraph import Graph, expected_degree, induced_subgraph
from unitquad.spectra import character_spectrum, ratio_theta


@st.composite
def random_graphs(draw, max_order=9):
    n = draw(st.integers(1, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def brute_clique(g):
    for size in range(g.order, 0, -1):
        for vs in itertools.combinations(range(g.order), size):
            if all(g.adjacent(u, v) for u, v in itertools.combinations(vs, 2)):
                return size
    return 0


def brute_chromatic(g):
    for k in range(1, g.order + 1):
        for colors in itertools.product(range(k), repeat=g.order):
            if all(colors[u] != colors[v] for u, v in g.edges()):
                return k
    return 0


# -- triangles ---------------------------------------------------------------------------


def test_triangle_examples(D):
    assert triangle_count(D(5)).count == 0
    assert triangle_count(D(7)).count == 0
    t3 = triangle_count(D(3))
    assert t3.count == 6
    u, v, w = t3.witness
    assert D(3).adjacent(u, v) and D(3).adjacent(v, w) and D(3).adjacent(u, w)


@pytest.mark.parametrize("q", odd_prime_powers(3, 27))
def test_triangles_iff_three_quarters_not_nonsquare(D, q):
    free = triangle_count(D(q)).count == 0
    assert free == (triangle_predicate(make_field(q)) is SquareClass.NONSQUARE)


def test_triangle_count_per_vertex_crosscheck(D):
    # vertex-transitive: every vertex lies on 3T/n triangles
    g = D(9)
    total = triangle_count(g).count
    at_zero = sum((g.rows[0] & g.rows[u]).bit_count() for u in g.neighbors(0)) // 2
    assert 3 * total == at_zero * g.order


@settings(max_examples=60, deadline=None)
@given(random_graphs())
def test_triangle_count_matches_brute_force(g):
    brute = sum(
        1 for a, b, c in itertools.combinations(range(g.order), 3)
        if g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c)
    )
    assert triangle_count(g).count == brute


# -- cliques and independence --------------------------------------------------------------


@pytest.mark.parametrize("q,omega", [(3, 3), (5, 2), (7, 2), (9, 3)])
def test_clique_examples(D, q, omega):
    res = max_clique(D(q))
    assert res.exact and res.certificate.size == omega and res.upper_bound == omega
    assert verify_clique(D(q), res.certificate)


@pytest.mark.parametrize("q", odd_prime_powers(11, 27))
def test_clique_number_at_most_four(D, q):
    res = max_clique(D(q))
    assert res.exact and res.certificate.size <= 4
    assert verify_clique(D(q), res.certificate)


@settings(max_examples=80, deadline=None)
@given(random_graphs())
def test_max_clique_matches_brute_force(g):
    res = max_clique(g)
    assert res.exact and res.certificate.size == brute_clique(g)
    assert verify_clique(g, res.certificate)
    ind = max_independent_set(g)
    assert ind.size == brute_clique(g.complement())
    assert verify_independent_set(g, ind.certificate)


def test_clique_budget_exhaustion_is_flagged(D):
    res = max_clique(D(7).complement(), budget=5)
    assert not res.exact
    assert res.upper_bound >= res.certificate.size
    assert verify_clique(D(7).complement(), res.certificate)


@pytest.mark.parametrize("q,alpha", [(3, 3), (5, 10), (7, 14)])
def test_independence_examples(D, q, alpha):
    res = max_independent_set(D(q))
    assert res.exact and res.size == alpha
    assert verify_independent_set(D(q), res.certificate)
    assert res.size <= ratio_theta(character_spectrum(D(q))) + 1e-9


def test_independence_reports_spectral_bound_when_incomplete(D):
    theta = ratio_theta(character_spectrum(D(11)))
    res = max_independent_set(D(11), budget=50, upper_bound=theta)
    assert not res.exact
    assert res.size <= res.upper_bound <= theta


# -- vertex colouring ----------------------------------------------------------------------


def test_chromatic_d3(D):
    res = exact_chromatic(D(3), lower_bound=1)
    assert res.exact and res.value == 3
    assert verify_coloring(D(3), res.coloring)
    refuted = [e["k"] for e in res.transcript if e["result"] == "INFEASIBLE"]
    assert 2 in refuted


def test_chromatic_d5_is_three(D):
    res = exact_chromatic(D(5), lower_bound=3, lower_reason="odd cycle")
    assert (res.lower, res.upper) == (3, 3)
    assert verify_coloring(D(5), res.coloring)


def test_chromatic_d7_is_four(D):
    res = exact_chromatic(D(7), lower_bound=3, lower_reason="odd cycle")
    assert res.exact and res.value == 4
    assert [e["result"] for e in res.transcript] == ["INFEASIBLE", "FEASIBLE"]


def test_chromatic_budget_gives_interval(D):
    res = exact_chromatic(D(7), budget=3, lower_bound=3)
    assert res.transcript[-1]["result"] == "BUDGET_EXHAUSTED"
    assert res.lower == 3 and res.upper >= 4 and res.value is None


@settings(max_examples=60, deadline=None)
@given(random_graphs(max_order=7))
def test_chromatic_matches_brute_force(g):
    res = exact_chromatic(g)
    assert res.exact and res.value == brute_chromatic(g)
    assert verify_coloring(g, res.coloring)


def test_k_coloring_certificate_and_refutation(D):
    ok = k_coloring(D(5), 3)
    assert ok.feasible and verify_coloring(D(5), ok.coloring)
    assert ok.coloring.colors[min(range(25), key=lambda v: ok.coloring.colors[v])] == 0
    assert k_coloring(D(5), 2).feasible is False
    assert k_coloring(Graph(()), 0).feasible


def test_dsatur_examples(D):
    c3 = dsatur_coloring(D(3), seed=0)
    assert verify_coloring(D(3), c3) and c3.color_count <= 6
    c5 = dsatur_coloring(D(5), seed=0)
    assert verify_coloring(D(5), c5)
    empty = induced_subgraph(D(5), [0, 1, 2]).graph  # (0,0),(0,1),(0,2): pairwise quadrances 1, 4, 1
    edgeless = Graph((0, 0, 0))
    assert dsatur_coloring(edgeless).color_count == 1
    assert verify_coloring(empty, dsatur_coloring(empty))


@pytest.mark.parametrize("q", [3, 9, 13])
def test_dsatur_deterministic(D, q):
    a, b = dsatur_coloring(D(q), seed=7), dsatur_coloring(D(q), seed=7)
    assert a == b and a.to_json() == b.to_json()
    assert verify_coloring(D(q), a)


# -- verifiers with planted defects ---------------------------------------------------------


def test_verify_coloring_planted_defects(D):
    g = D(3)
    good = exact_chromatic(g).coloring
    assert verify_coloring(g, good)
    colors = list(good.colors)
    u, v = g.edges()[0]
    colors[v] = colors[u]
    bad = verify_coloring(g, ColoringCertificate(tuple(colors)))
    assert not bad and bad.counterexample in g.edges()
    assert g.adjacent(*bad.counterexample)
    assert not verify_coloring(g, ColoringCertificate(good.colors[:-1]))


def test_verify_complete_coloring_missing_pair():
    path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert verify_coloring(path, ColoringCertificate((0, 1, 2, 0), ColoringKind.COMPLETE))
    cert = ColoringCertificate((0, 1, 0, 2), ColoringKind.COMPLETE)
    res = verify_coloring(path, cert)
    assert not res and res.counterexample == (1, 2)
    assert verify_coloring(path, ColoringCertificate((0, 1, 0, 2), ColoringKind.PROPER))


def test_verify_clique_and_independent_set_planted(D):
    g = D(5)
    assert not verify_clique(g, CliqueCertificate((0, 5, 10)))
    assert not verify_independent_set(g, IndependentSetCertificate((0, 5)))
    assert not verify_independent_set(g, IndependentSetCertificate((0, 0)))


def test_verify_edge_coloring_planted(D):
    g = D(3)
    cert = misra_gries(g)
    assert verify_edge_coloring(g, cert)
    edges = list(cert.edge_colors)
    (u, v, c), (x, y, d) = next(
        (a, b) for a, b in itertools.combinations(edges, 2) if {a[0], a[1]} & {b[0], b[1]}
    )
    edges[edges.index((x, y, d))] = (x, y, c)
    assert not verify_edge_coloring(g, EdgeColoringCertificate(tuple(edges)))
    assert not verify_edge_coloring(g, EdgeColoringCertificate(cert.edge_colors[1:]))


# -- edge colouring --------------------------------------------------------------------------


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_misra_gries_on_dq(D, q):
    g = D(q)
    cert = misra_gries(g)
    assert verify_edge_coloring(g, cert)
    assert cert.color_count == expected_degree(q) + 1
    seen = {}
    for u, v, c in cert.edge_colors:
        assert 0 <= c <= expected_degree(q)
        seen.setdefault(u, set()).add(c)
        seen.setdefault(v, set()).add(c)
    assert all(len(s) == expected_degree(q) for s in seen.values())


@settings(max_examples=80, deadline=None)
@given(random_graphs(max_order=12))
def test_misra_gries_random(g):
    cert = misra_gries(g)
    assert verify_edge_coloring(g, cert)
    assert cert.color_count <= max(g.degrees(), default=0) + 1


def test_misra_gries_single_edge():
    assert misra_gries(Graph.from_edges(2, [(0, 1)])).color_count == 1


@pytest.mark.parametrize("q,index", [(3, 5), (5, 5), (7, 9), (9, 9)])
def test_class_one_obstruction(D, q, index):
    obs = class_one_obstruction(D(q))
    assert obs.order_odd and obs.regular and obs.certificate_valid
    assert obs.chromatic_index == index


def test_obstruction_inapplicable():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert class_one_obstruction(path).conclusion == "obstruction inapplicable"
    even_cycle = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert class_one_obstruction(even_cycle).chromatic_index is None


# -- achromatic ------------------------------------------------------------------------------


def test_achromatic_upper_examples():
    assert achromatic_upper(3, 4) == 6
    assert achromatic_upper(5, 4) == 10
    lower, upper = achromatic_bounds(5, 4)
    assert (lower.value, lower.direction) == (6, "LOWER")
    assert (upper.value, upper.direction) == (10, "UPPER")


@pytest.mark.parametrize("q", odd_prime_powers(3, 49))
def test_achromatic_upper_is_tight_integer(q):
    budget = q * q * expected_degree(q)
    m = achromatic_upper(q, expected_degree(q))
    assert m * (m - 1) <= budget < (m + 1) * m
    assert m < math.sqrt(budget) + 1
    if expected_degree(q) < q:
        assert m <= math.ceil(q**1.5) + 1


def test_three_halves_envelope_fails_when_degree_exceeds_q():
    # delta = q + 1 pushes m past ceil(q^1.5) + 1
    assert achromatic_upper(19, 20) == 85 > math.ceil(19**1.5) + 1


def test_exact_achromatic_fixtures(D):
    k4 = Graph.complete(4)
    assert exact_achromatic(k4).value == 4
    res = exact_achromatic(D(3))
    assert res.value == 5
    assert res.certificate.kind is ColoringKind.COMPLETE
    assert verify_coloring(D(3), res.certificate)
    with pytest.raises(ValueError):
        exact_achromatic(D(5))


def test_complete_coloring_heuristic(D):
    res = complete_coloring_heuristic(D(3), seed=0, target=4)
    assert res.status in ("FOUND", "NOT-FOUND")
    if res.found:
        assert verify_coloring(D(3), res.certificate)
        assert res.certificate.color_count >= 4
    res5 = complete_coloring_heuristic(D(5), seed=0, target=6)
    assert verify_coloring(D(5), res5.certificate)
    assert res5.found == (res5.best_count >= 6)
    assert complete_coloring_heuristic(D(5), seed=0, target=6).to_json() == res5.to_json()


def test_complete_coloring_on_complete_graph():
    res = complete_coloring_heuristic(Graph.complete(4), seed=1, target=4)
    assert res.found and res.best_count == 4


# -- perfection ------------------------------------------------------------------------------


def test_d3_is_line_graph_of_k33(D):
    verdict = perfection_verdict(D(3), q=3)
    assert verdict.status is Perfection.PERFECT
    iso = verdict.evidence["isomorphism"]
    target = line_graph(complete_bipartite_edges(3, 3))
    for u, v in itertools.combinations(range(9), 2):
        assert D(3).adjacent(u, v) == target.adjacent(iso[u], iso[v])


def test_isomorphism_search_rejects_non_isomorphic(D):
    assert find_isomorphism(D(3), Graph.complete(9)) is None
    # same degree sequence, different triangle counts
    c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert find_isomorphism(c6, two_triangles) is None


@pytest.mark.parametrize("q", [5, 7])
def test_not_perfect_by_omega_below_chi(D, q):
    verdict = perfection_verdict(D(q), q=q, vertex_transitive=True)
    assert verdict.status is Perfection.NOT_PERFECT
    assert verdict.route == "omega < chi"
    assert verdict.evidence["omega"] < verdict.evidence["chi_lower"]


def test_d9_not_perfect_by_induced_hole(D):
    verdict = perfection_verdict(D(9), q=9, vertex_transitive=True)
    assert verdict.status is Perfection.NOT_PERFECT
    hole = tuple(verdict.evidence["induced_odd_cycle"])
    assert verify_induced_odd_cycle(D(9), hole)
    sub = induced_subgraph(D(9), hole).graph
    assert sub.is_regular() and set(sub.degrees()) == {2}


def test_induced_odd_cycle_checks():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert find_induced_odd_cycle(c5, 5) is not None
    assert find_induced_odd_cycle(Graph.complete(5), 5) is None
    assert not verify_induced_odd_cycle(Graph.complete(5), (0, 1, 2, 3, 4))


# -- Ramsey and choice bound -----------------------------------------------------------------


def test_ramsey_witness_q5():
    w = ramsey_witness(5)
    assert w.triangles.count == 0
    assert w.independence.exact and w.independence.size == 10
    assert w.m == 11
    assert "R(11, 3) > 25" in w.statement()
    assert w.dimacs.startswith(b"c ")


def test_ramsey_witness_q7():
    w = ramsey_witness(7)
    assert w.triangles.count == 0
    assert w.independence_upper <= w.ratio_theta
    assert w.bound.value == 50


def test_ramsey_rejects_outside_hypothesis():
    for q in (3, 9, 13, 25):
        with pytest.raises(HypothesisError):
            ramsey_witness(q)


def test_choice_bound():
    res = choice_bound_eval(9, 0.1)
    assert res["bound"].value == pytest.approx(1.1 * 81 / math.log2(9))
    assert res["status"] == "INFORMATIONAL"
    assert choice_bound_eval(5, 0.1, alpha=10)["chi_lower_from_alpha"] == 3
    with pytest.raises(ValueError):
        choice_bound_eval(9, 0)
