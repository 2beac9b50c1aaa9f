import itertools
import math
import random

import pytest

from conftest import random_sites, with_rectangle
from greedyroute.delaunay import (AllCollinear, EdgeClass, Empty, NotAnEdge, NotBoundedSegment,
                                  Segment, SinglePoint, TooFewSites, classify_all, classify_edge,
                                  delaunay_graph, edge_oracle, oracle_classes,
                                  shared_voronoi_midpoint, triangulate)
from greedyroute.generators import GeneratorSpec, generate
from greedyroute.geom import (Circle, Orientation, Point, circumcenter, in_circle, orientation,
                              segments_cross)
from greedyroute.sites import SiteSet

P = Point.of


def agreement_problems(s: SiteSet) -> list:
    """Pairs where the triangulation and the bisector oracle tell different stories.

    The triangulation picks one diagonal per cocircular group, so a pair it omits
    may still be a degenerate Delaunay pair; everything else must match exactly.
    """
    t = triangulate(s)
    tri = classify_all(t)
    bad = []
    for pair, oc in oracle_classes(s).items():
        tc = tri.get(pair)
        if tc is None:
            if oc is EdgeClass.NON_DEGENERATE:
                bad.append((pair, None, oc))
        elif tc is not oc:
            bad.append((pair, tc, oc))
    return bad


def test_single_triangle():
    t = triangulate(SiteSet([(0, 0), (4, 0), (0, 4)]))
    assert len(t.triangles) == 1
    assert t.edges() == [(0, 1), (0, 2), (1, 2)]
    assert all(classify_edge(t, *e) is EdgeClass.NON_DEGENERATE for e in t.edges())


def test_square_triangulation(square):
    t = triangulate(square)
    assert len(t.triangles) == 2
    edges = t.edges()
    assert len(edges) == 5
    diagonal = [e for e in edges if e in ((0, 2), (1, 3))]
    assert len(diagonal) == 1
    assert classify_edge(t, *diagonal[0]) is EdgeClass.DEGENERATE
    assert classify_edge(t, 0, 1) is EdgeClass.NON_DEGENERATE
    with pytest.raises(NotAnEdge):
        missing = (1, 3) if diagonal[0] == (0, 2) else (0, 2)
        classify_edge(t, *missing)


def test_triangulate_errors():
    with pytest.raises(TooFewSites):
        triangulate(SiteSet([(0, 0), (1, 1)]))
    with pytest.raises(AllCollinear):
        triangulate(SiteSet([(0, 0), (1, 1), (3, 3), (7, 7)]))


def test_delaunay_graph_examples(square):
    assert delaunay_graph(square).sorted_edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert delaunay_graph(SiteSet([(0, 0), (1, 0), (3, 0)])).sorted_edges() == [(0, 1), (1, 2)]
    assert delaunay_graph(SiteSet([(5, 5)])).sorted_edges() == []
    assert delaunay_graph(SiteSet([(5, 5), (1, 2)])).sorted_edges() == [(0, 1)]
    # collinear but listed out of order along the line
    assert delaunay_graph(SiteSet([(3, 3), (0, 0), (1, 1)])).sorted_edges() == [(0, 2), (1, 2)]


def test_cocircular_dozen_is_a_cycle():
    s = generate(GeneratorSpec("CocircularRational", 12))
    order = sorted(range(12), key=lambda i: math.atan2(s[i].y, s[i].x))
    cycle = sorted(tuple(sorted((order[k], order[(k + 1) % 12]))) for k in range(12))
    assert delaunay_graph(s).sorted_edges() == cycle
    # the oracle sees every chord as touching the common centre only
    classes = oracle_classes(s)
    for pair, c in classes.items():
        expected = EdgeClass.NON_DEGENERATE if pair in cycle else EdgeClass.DEGENERATE
        assert c is expected, pair


def test_edge_oracle_examples(square):
    assert edge_oracle(square, 0, 2) == (EdgeClass.DEGENERATE, SinglePoint(P(1, 1)))
    cls, feat = edge_oracle(square, 0, 1)
    assert cls is EdgeClass.NON_DEGENERATE
    assert isinstance(feat, Segment) and not feat.bounded
    assert P(1, 1) in (feat.p1, feat.p2)
    assert feat.unbounded_flags in ((True, False), (False, True))
    cls, feat = edge_oracle(SiteSet([(0, 0), (2, 0), (1, 5)]), 0, 1)
    assert cls is EdgeClass.NON_DEGENERATE
    # the cell boundary runs from below up to the circumcentre (1, 12/5)
    assert feat.p2 == P(1, "12/5") and feat.p1 is None


def test_edge_oracle_not_delaunay():
    s = SiteSet([(0, 0), (10, 0), (5, 1), (5, -1)])
    assert edge_oracle(s, 0, 1) == (EdgeClass.NOT_DELAUNAY, Empty())


def test_shared_midpoint():
    s = SiteSet([(0, 0), (2, 0), (1, 3), (1, -3)])
    c1 = circumcenter(s[0], s[1], s[2])
    c2 = circumcenter(s[0], s[1], s[3])
    assert (c1, c2) == (P(1, "4/3"), P(1, "-4/3"))
    expected = Point((c1.x + c2.x) / 2, (c1.y + c2.y) / 2)
    assert shared_voronoi_midpoint(s, 0, 1) == expected == P(1, 0)


def test_shared_midpoint_is_strictly_nearest_to_the_pair():
    rng = random.Random(3)
    s = random_sites(rng, 15, 1000)
    for i, j in delaunay_graph(s).sorted_edges():
        try:
            p = shared_voronoi_midpoint(s, i, j)
        except NotBoundedSegment:
            continue
        d = [(p.x - q.x) ** 2 + (p.y - q.y) ** 2 for q in s]
        assert d[i] == d[j]
        assert all(d[k] > d[i] for k in range(len(s)) if k not in (i, j))


@pytest.mark.parametrize("pair", [(0, 1), (0, 2)])
def test_shared_midpoint_needs_bounded_segment(square, pair):
    with pytest.raises(NotBoundedSegment):
        shared_voronoi_midpoint(square, *pair)


def test_twenty_grid_sites_match_oracle():
    rng = random.Random(20)
    s = random_sites(rng, 20, 30)
    assert agreement_problems(s) == []


@pytest.mark.parametrize("seed", range(12))
def test_oracle_equivalence_random(seed):
    rng = random.Random(seed)
    s = with_rectangle(rng, rng.randint(5, 30), 50) if seed % 2 else random_sites(rng, rng.randint(3, 30))
    assert agreement_problems(s) == []


def test_oracle_equivalence_lattice():
    s = generate(GeneratorSpec("Lattice", 25))
    assert agreement_problems(s) == []
    t = triangulate(s)
    assert sum(c is EdgeClass.DEGENERATE for c in classify_all(t).values()) == 16


@pytest.mark.parametrize("seed", range(8))
def test_empty_circle_property(seed):
    rng = random.Random(100 + seed)
    s = random_sites(rng, 25, 40)
    t = triangulate(s)
    for a, b, c in t.triangles:
        assert orientation(s[a], s[b], s[c]) is Orientation.CCW
        for d in range(len(s)):
            if d not in (a, b, c):
                assert in_circle(s[a], s[b], s[c], s[d]) is not Circle.INSIDE


def test_triangulation_covers_hull():
    rng = random.Random(9)
    s = random_sites(rng, 30, 1000)
    t = triangulate(s)
    twice_area = sum((s[b].x - s[a].x) * (s[c].y - s[a].y) - (s[b].y - s[a].y) * (s[c].x - s[a].x)
                     for a, b, c in t.triangles)
    # Euler: with h hull vertices a triangulation has 2n - 2 - h triangles
    hull = {u for u, _ in t.hull_edges()}
    assert len(t.triangles) == 2 * len(s) - 2 - len(hull)
    assert twice_area > 0


@pytest.mark.parametrize("seed", range(6))
def test_delaunay_graph_is_planar(seed):
    rng = random.Random(200 + seed)
    s = random_sites(rng, 25, 20)
    edges = delaunay_graph(s).sorted_edges()
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        assert not segments_cross(s[a], s[b], s[c], s[d]), ((a, b), (c, d))


def test_nondegenerate_edges_are_in_every_triangulation():
    rng = random.Random(5)
    base = list(generate(GeneratorSpec("Lattice", 16))) + [P(1, "1/2"), P("5/2", 3)]
    dg = delaunay_graph(SiteSet(base)).edges
    for _ in range(6):
        perm = list(range(len(base)))
        rng.shuffle(perm)
        s = SiteSet([base[k] for k in perm])
        edges = {tuple(sorted((perm[a], perm[b]))) for a, b in triangulate(s).edges()}
        assert dg <= edges
