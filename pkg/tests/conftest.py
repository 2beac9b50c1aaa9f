import random
from fractions import Fraction

import pytest

from greedyroute.delaunay import delaunay_graph
from greedyroute.geom import Point
from greedyroute.sites import GeometricGraph, SiteSet

SQUARE = [(0, 0), (2, 0), (2, 2), (0, 2)]


@pytest.fixture
def square():
    return SiteSet(SQUARE)


@pytest.fixture
def square_graph(square):
    return GeometricGraph(square, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def broken_square(square):
    """Square with side (0,0)-(2,0) removed: the smallest graph greedy routing fails on."""
    return GeometricGraph(square, [(1, 2), (2, 3), (0, 3)])


def random_sites(rng: random.Random, n: int, bound: int = 10**6) -> SiteSet:
    pts = set()
    while len(pts) < n:
        pts.add((rng.randint(0, bound), rng.randint(0, bound)))
    pts = sorted(pts)
    rng.shuffle(pts)
    return SiteSet(pts)


def with_rectangle(rng: random.Random, n: int, bound: int = 10**6) -> SiteSet:
    """Random sites plus the four corners of a random rectangle (a cocircular quadruple)."""
    pts = set()
    while len(pts) < 4:
        cx, cy = rng.randint(0, bound), rng.randint(0, bound)
        hw, hh = rng.randint(1, bound // 10), rng.randint(1, bound // 10)
        pts = {(cx - hw, cy - hh), (cx + hw, cy - hh), (cx + hw, cy + hh), (cx - hw, cy + hh)}
    while len(pts) < n:
        pts.add((rng.randint(0, bound), rng.randint(0, bound)))
    pts = sorted(pts)
    rng.shuffle(pts)
    return SiteSet(pts)


def random_point(rng: random.Random, lo: int, hi: int, den: int = 97) -> Point:
    return Point(Fraction(rng.randint(lo * den, hi * den), den),
                 Fraction(rng.randint(lo * den, hi * den), den))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS:
        terminalreporter.write_line(line)
