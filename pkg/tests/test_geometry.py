import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitquad.ffield import FieldError, SquareClass, make_field, odd_prime_powers
from unitquad.geometry import (
    Circle,
    Point,
    all_points,
    check_intersection_law,
    circle_points,
    f_invariant,
    f_invariant_stated,
    oracle_intersections,
    point,
    predicted_intersections,
    quadrance,
    triangle_predicate,
)


def test_quadrance_examples():
    z5, z7 = make_field(5), make_field(7)
    assert quadrance(z5, point(z5, 0, 0), point(z5, 1, 2)) == 0
    assert quadrance(z7, point(z7, 1, 1), point(z7, 2, 3)) == 5
    a = point(z7, 3, 6)
    assert quadrance(z7, a, a) == 0


def test_points_from_different_fields_rejected():
    with pytest.raises(FieldError):
        Point(make_field(5).one, make_field(7).one)


def test_circle_examples():
    z3 = make_field(3)
    got = circle_points(z3, Circle(point(z3, 0, 0), z3.one))
    assert [(p.x.index, p.y.index) for p in got] == [(0, 1), (0, 2), (1, 0), (2, 0)]
    z7, z5 = make_field(7), make_field(5)
    assert len(circle_points(z7, Circle(point(z7, 0, 0), z7.one))) == 8
    assert len(circle_points(z5, Circle(point(z5, 0, 0), z5.one))) == 4


@pytest.mark.parametrize("q", odd_prime_powers(3, 27))
def test_unit_circle_size(q):
    f = make_field(q)
    assert len(circle_points(f, Circle(point(f, 0, 0), f.one))) == q - (-1) ** ((q - 1) // 2)


@pytest.mark.parametrize("q", [3, 5, 9])
def test_circles_around_a_center_partition_the_plane(q):
    f = make_field(q)
    center = point(f, 1, 2)
    sizes = [len(circle_points(f, Circle(center, f.element(k)))) for k in range(q)]
    assert sum(sizes) == q * q


def test_f_invariant_examples():
    z5, z13 = make_field(5), make_field(13)
    one = z5.one
    assert f_invariant(z5, one, one, one) == 2
    assert f_invariant(z13, z13.one, z13.one, z13.one) == z13.element(3) / z13.element(4)
    for q in (3, 5, 7, 9, 25):
        f = make_field(q)
        assert f_invariant(f, f.one, f.one, f.element(4 % f.p)) == 0


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_f_invariant_symmetric_exhaustive(q):
    f = make_field(q)
    els = [f.element(v) for v in range(q)]
    four = f.element([4])
    for i, j, k in itertools.product(els, repeat=3):
        value = f_invariant(f, i, j, k)
        assert value * four == i * j * 2 + j * k * 2 + k * i * 2 - i * i - j * j - k * k
        for perm in itertools.permutations((i, j, k)):
            assert f_invariant(f, *perm) == value


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([17, 25, 27, 49, 81]), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_f_invariant_symmetric_random(q, a, b, c):
    f = make_field(q)
    i, j, k = (f.element(v % q) for v in (a, b, c))
    values = {f_invariant(f, *perm) for perm in itertools.permutations((i, j, k))}
    assert len(values) == 1


def test_stated_variant_is_not_symmetric():
    f = make_field(7)
    i, j, k = f.element(1), f.element(2), f.element(3)
    assert f_invariant_stated(f, i, j, k) != f_invariant_stated(f, k, j, i)


def test_predicted_examples():
    z5, z13 = make_field(5), make_field(13)
    assert predicted_intersections(z5, z5.one, z5.one, z5.one) == 0
    assert predicted_intersections(z13, z13.one, z13.one, z13.one) == 2
    for q in (5, 7, 9, 13):
        f = make_field(q)
        assert predicted_intersections(f, f.one, f.one, f.element(4 % f.p)) == 1


def test_predicted_refuses_zero_arguments():
    f = make_field(7)
    for args in [(f.zero, f.one, f.one), (f.one, f.zero, f.one), (f.one, f.one, f.zero)]:
        with pytest.raises(FieldError):
            predicted_intersections(f, *args)


def test_oracle_examples():
    z5, z13 = make_field(5), make_field(13)
    assert oracle_intersections(z5, point(z5, 0, 0), point(z5, 1, 0), z5.one, z5.one) == 0
    assert oracle_intersections(z13, point(z13, 0, 0), point(z13, 1, 0), z13.one, z13.one) == 2
    z7 = make_field(7)
    X = point(z7, 2, 5)
    for k in range(7):
        K = z7.element(k)
        assert oracle_intersections(z7, X, X, K, K) == len(circle_points(z7, Circle(X, K)))


def test_oracle_matches_set_intersection():
    f = make_field(5)
    X, Y = point(f, 0, 0), point(f, 1, 3)
    for i, j in itertools.product(range(5), repeat=2):
        a = set(circle_points(f, Circle(X, f.element(i))))
        b = set(circle_points(f, Circle(Y, f.element(j))))
        assert oracle_intersections(f, X, Y, f.element(i), f.element(j)) == len(a & b)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_intersection_law_exhaustive(q):
    res = check_intersection_law(make_field(q))
    assert res["checked"] == (q - 1) ** 3
    assert res["mismatches"] == []


@pytest.mark.parametrize("q", [5, 9])
def test_intersection_law_every_realizing_pair(q):
    # all pairs (X, Y) with X at the origin, not only the first at each quadrance
    f = make_field(q)
    origin = point(f, 0, 0)
    for Y in all_points(f)[1:]:
        k = quadrance(f, origin, Y)
        if not k:
            continue
        for i, j in itertools.product(range(1, q), repeat=2):
            I, J = f.element(i), f.element(j)
            assert oracle_intersections(f, origin, Y, I, J) == predicted_intersections(f, I, J, k)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([5, 7, 9, 25]), st.lists(st.integers(0, 10**6), min_size=6, max_size=6))
def test_quadrance_translation_invariant(q, coords):
    f = make_field(q)
    a, b, t = (point(f, coords[2 * s] % q, coords[2 * s + 1] % q) for s in range(3))
    assert quadrance(f, a + t, b + t) == quadrance(f, a, b)
    assert quadrance(f, a, b) == quadrance(f, b, a)


def test_triangle_predicate_examples():
    assert triangle_predicate(make_field(5)) is SquareClass.NONSQUARE
    assert triangle_predicate(make_field(7)) is SquareClass.NONSQUARE
    assert triangle_predicate(make_field(3)) is SquareClass.ZERO
    assert triangle_predicate(make_field(13)) is SquareClass.SQUARE
