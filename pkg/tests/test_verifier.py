import random
from itertools import combinations

import pytest

from conftest import random_sites, with_rectangle
from greedyroute.delaunay import EdgeClass, classify_all, delaunay_graph, triangulate
from greedyroute.generators import GeneratorSpec, generate
from greedyroute.routing import nearest_site
from greedyroute.sites import GeometricGraph
from greedyroute.verifier import cross_validate, is_sparsest_support, supports_greedy


def test_square_supports(square_graph):
    v = supports_greedy(square_graph)
    assert v.supports and v.method_edge_test and v.method_region_test
    assert v.missing_edges == () and v.counterexample is None


def test_broken_square(broken_square):
    v = supports_greedy(broken_square)
    assert not v.supports and not v.method_edge_test and not v.method_region_test
    assert v.missing_edges == ((0, 1),)
    cex = v.counterexample
    assert cex.node == 0
    assert cex.trace.path == (0,) and not cex.trace.delivered
    assert nearest_site(broken_square.sites, cex.destination) == {1}


def test_complete_graph_supports():
    s = random_sites(random.Random(1), 15)
    assert supports_greedy(GeometricGraph.complete(s)).supports


def test_sparsest(square, square_graph, broken_square):
    assert is_sparsest_support(square_graph)
    assert not is_sparsest_support(square_graph.with_edge(0, 2))
    assert not is_sparsest_support(broken_square)


@pytest.mark.parametrize("seed", range(5))
def test_necessity_every_edge(seed):
    rng = random.Random(seed)
    s = with_rectangle(rng, 14, 40) if seed % 2 else random_sites(rng, 14)
    dg = delaunay_graph(s)
    for e in dg.sorted_edges():
        v = supports_greedy(dg.without_edge(*e), dg)
        assert not v.supports and v.methods_agree
        assert v.missing_edges == (e,)
        assert set(v.violating_sites) <= set(e)
        cex = v.counterexample
        assert not cex.trace.delivered
        assert cex.trace.terminal not in nearest_site(s, cex.destination)


def test_degenerate_edges_are_optional():
    s = generate(GeneratorSpec("Lattice", 16))
    dg = delaunay_graph(s)
    chords = [e for e, c in classify_all(triangulate(s)).items() if c is EdgeClass.DEGENERATE]
    chords += [(1, 4), (2, 5)]  # the other diagonals of the first squares
    rng = random.Random(0)
    for _ in range(10):
        extra = rng.sample(chords, rng.randint(1, len(chords)))
        v = supports_greedy(dg.with_edges(extra), dg)
        assert v.supports and v.methods_agree


def test_cross_validate_square(square):
    rep = cross_validate(square, 10, 7)
    assert len(rep.trials) == 10
    assert rep.agreement == 10 and rep.ok
    for t in rep.trials:
        if t.supports:
            assert t.delivery_rate == 1.0 and t.routes == 4 * (4 + 40)


def test_cross_validate_cocircular_chords():
    s = generate(GeneratorSpec("CocircularRational", 12))
    dg = delaunay_graph(s)
    chords = [e for e in combinations(range(12), 2) if e not in dg.edges]
    rep = cross_validate(s, 12, 3, destinations_per_site=3, chord_pool=chords, drop_edges=False)
    assert rep.ok and all(t.supports for t in rep.trials)


def test_cross_validate_is_deterministic():
    s = random_sites(random.Random(2), 10, 100)
    assert cross_validate(s, 5, 11) == cross_validate(s, 5, 11)


def test_cross_validate_single_trial():
    s = random_sites(random.Random(8), 9)
    rep = cross_validate(s, 1, 0)
    assert rep.ok and rep.trials[0].supports and rep.trials[0].methods_agree
    with pytest.raises(ValueError):
        cross_validate(s, 0, 0)
