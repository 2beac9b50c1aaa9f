from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from greedyroute.geom import (Circle, CoincidentSites, CollinearDefiningPoints, HalfPlane,
                              Orientation, Point, bisector_halfplane, circumcenter, dist_sq,
                              in_circle, orientation, segments_cross, to_scalar)

P = Point.of


def test_dist_sq_examples():
    assert dist_sq(P(0, 0), P(3, 4)) == 25
    assert dist_sq(P(1, 1), P(1, 1)) == 0
    assert dist_sq(P(0, 0), P("1/2", "1/3")) == F(13, 36)


def test_orientation_examples():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) is Orientation.CCW
    assert orientation(P(0, 0), P(1, 1), P(2, 2)) is Orientation.COLLINEAR
    assert orientation(P(0, 0), P(0, 1), P(1, 0)) is Orientation.CW


@pytest.mark.parametrize("d, expected", [
    ((2, 2), Circle.ON),
    ((1, 1), Circle.INSIDE),
    ((10, 10), Circle.OUTSIDE),
])
def test_in_circle_examples(d, expected):
    assert in_circle(P(0, 0), P(2, 0), P(0, 2), P(*d)) is expected


def test_in_circle_rejects_collinear():
    with pytest.raises(CollinearDefiningPoints):
        in_circle(P(0, 0), P(1, 0), P(2, 0), P(5, 5))


def test_circumcenter_examples():
    assert circumcenter(P(0, 0), P(2, 0), P(0, 2)) == P(1, 1)
    assert circumcenter(P(0, 0), P(4, 0), P(0, 4)) == P(2, 2)
    with pytest.raises(CollinearDefiningPoints):
        circumcenter(P(0, 0), P(1, 0), P(2, 0))


def test_bisector_examples():
    assert bisector_halfplane(P(0, 0), P(2, 0)) == HalfPlane(1, 0, 1)
    assert bisector_halfplane(P(0, 0), P(0, 2)) == HalfPlane(0, 1, 1)
    assert bisector_halfplane(P(0, 0), P(2, 2)) == HalfPlane(1, 1, 2)
    with pytest.raises(CoincidentSites):
        bisector_halfplane(P(1, 1), P(1, 1))


def test_scalar_parsing_is_exact():
    assert to_scalar("1.25") == F(5, 4)
    assert to_scalar("5/4") == F(5, 4)
    assert to_scalar(-3) == -3
    with pytest.raises(TypeError):
        to_scalar(0.1)


def test_segments_cross():
    assert segments_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0))
    assert not segments_cross(P(0, 0), P(1, 0), P(1, 0), P(1, 1))
    assert segments_cross(P(0, 0), P(2, 0), P(1, 0), P(3, 0))
    assert not segments_cross(P(0, 0), P(1, 0), P(2, 0), P(3, 0))
    assert segments_cross(P(0, 0), P(2, 0), P(0, 0), P(1, 0))


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
points = st.builds(Point, rationals, rationals)


@given(points, points, points)
def test_orientation_flips_under_swap(a, b, c):
    assert orientation(a, b, c) == -orientation(a, c, b)


@given(points, points, points, points)
def test_in_circle_permutation_invariant(a, b, c, d):
    if orientation(a, b, c) is Orientation.COLLINEAR:
        return
    r = in_circle(a, b, c, d)
    assert in_circle(b, c, a, d) is r
    assert in_circle(c, a, b, d) is r
    assert in_circle(a, c, b, d) is r
    assert in_circle(c, b, a, d) is r


@given(points, points, points)
def test_bisector_matches_distance_comparison(vi, vj, x):
    if vi == vj:
        return
    h = bisector_halfplane(vi, vj)
    assert h.contains(x) == (dist_sq(x, vi) <= dist_sq(x, vj))
    assert h.contains_strictly(x) == (dist_sq(x, vi) < dist_sq(x, vj))


@given(points, points, points)
def test_circumcenter_is_equidistant(a, b, c):
    if orientation(a, b, c) is Orientation.COLLINEAR:
        return
    cc = circumcenter(a, b, c)
    assert dist_sq(cc, a) == dist_sq(cc, b) == dist_sq(cc, c)


@given(points, points, points, points)
def test_in_circle_agrees_with_circumradius(a, b, c, d):
    if orientation(a, b, c) is Orientation.COLLINEAR:
        return
    cc = circumcenter(a, b, c)
    r2, d2 = dist_sq(cc, a), dist_sq(cc, d)
    expected = Circle.INSIDE if d2 < r2 else Circle.OUTSIDE if d2 > r2 else Circle.ON
    assert in_circle(a, b, c, d) is expected
