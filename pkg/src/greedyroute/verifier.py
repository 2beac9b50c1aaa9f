"""Deciding greedy-routing support for a geometric graph.

Two independent criteria are always evaluated: containment of the Delaunay
graph's edges, and equality of every vertex region with its Voronoi cell. They
must agree; a disagreement is a defect in this package, not a property of the
input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .delaunay import delaunay_graph
from .geom import Point
from .regions import regions_equal
from .routing import RouteOutcome, route, route_with_distances
from .sites import GeometricGraph, SiteSet


@dataclass(frozen=True)
class Counterexample:
    node: int
    destination: Point
    trace: RouteOutcome


@dataclass(frozen=True)
class SupportVerdict:
    supports: bool
    method_edge_test: bool
    method_region_test: bool
    missing_edges: tuple[tuple[int, int], ...] = ()
    counterexample: Optional[Counterexample] = None
    violating_sites: tuple[int, ...] = ()

    @property
    def methods_agree(self) -> bool:
        return self.method_edge_test == self.method_region_test


def supports_greedy(g: GeometricGraph, reference: Optional[GeometricGraph] = None) -> SupportVerdict:
    """Check both characterisations and build a stuck trace when support fails.

    ``reference`` may pass a precomputed ``delaunay_graph(g.sites)``.
    """
    dg = reference if reference is not None else delaunay_graph(g.sites)
    missing = tuple(sorted(dg.edges - g.edges))
    edge_ok = not missing

    verdicts = [regions_equal(g, i) for i in range(len(g.sites))]
    bad = tuple(v.site for v in verdicts if not v.equal)
    region_ok = not bad

    cex = None
    if bad:
        v = verdicts[bad[0]]
        cex = Counterexample(v.site, v.witness, route(g, v.site, v.witness))
    return SupportVerdict(edge_ok and region_ok, edge_ok, region_ok, missing, cex, bad)


def is_sparsest_support(g: GeometricGraph) -> bool:
    """True iff g supports greedy routing with no removable edge.

    Every non-degenerate Delaunay edge is required, so the sparsest supporting
    edge set is exactly that set.
    """
    dg = delaunay_graph(g.sites)
    return supports_greedy(g, dg).supports and g.edges == dg.edges


def random_destinations(s: SiteSet, count: int, rng: random.Random,
                        denominator: int = 1000) -> list[Point]:
    """Seeded rational points in the sites' bounding box grown by 10% per side."""
    xs = [p.x for p in s]
    ys = [p.y for p in s]
    w = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    lo_x, hi_x = min(xs) - w / 10, max(xs) + w / 10
    lo_y, hi_y = min(ys) - w / 10, max(ys) + w / 10
    out = []
    for _ in range(count):
        x = Fraction(rng.randint(int(lo_x * denominator), int(hi_x * denominator)), denominator)
        y = Fraction(rng.randint(int(lo_y * denominator), int(hi_y * denominator)), denominator)
        out.append(Point(x, y))
    return out


@dataclass
class BatteryResult:
    routes: int = 0
    delivered: int = 0
    hop_total: int = 0
    max_hops: int = 0
    first_failure: Optional[RouteOutcome] = None

    @property
    def delivery_rate(self) -> float:
        return self.delivered / self.routes if self.routes else 1.0

    @property
    def mean_hops(self) -> float:
        return self.hop_total / self.routes if self.routes else 0.0


def route_battery(g: GeometricGraph, destinations: list[Point]) -> BatteryResult:
    """Route from every site to every destination."""
    res = BatteryResult()
    n = len(g.sites)
    for dest in destinations:
        d2 = g.sites.dist_sq_all(dest)
        best = min(d2)
        for src in range(n):
            out = route_with_distances(g, src, dest, d2, best)
            res.routes += 1
            res.hop_total += out.hops
            res.max_hops = max(res.max_hops, out.hops)
            if out.delivered:
                res.delivered += 1
            elif res.first_failure is None:
                res.first_failure = out
    return res


@dataclass
class TrialOutcome:
    trial: int
    added: int
    removed: int
    supports: bool
    methods_agree: bool
    routes: int
    delivery_rate: float
    counterexample_stuck: Optional[bool]
    ok: bool


@dataclass
class CrossValidationReport:
    seed: int
    trials: list[TrialOutcome] = field(default_factory=list)

    @property
    def agreement(self) -> int:
        return sum(t.methods_agree for t in self.trials)

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.trials)


def cross_validate(s: SiteSet, trials: int, seed: int, destinations_per_site: int = 10,
                   chord_pool: Optional[list[tuple[int, int]]] = None,
                   drop_edges: bool = True) -> CrossValidationReport:
    """Perturb the Delaunay graph at random and check every characterisation agrees.

    Trial 0 is the unperturbed Delaunay graph. Later trials drop each Delaunay
    edge with probability 1/4 (or none, half the time) and add random extra
    pairs; ``chord_pool`` restricts the additions to given pairs and
    ``drop_edges=False`` keeps every trial a supergraph.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not isinstance(s, SiteSet):
        s = SiteSet(s)
    rng = random.Random(seed)
    dg = delaunay_graph(s)
    n = len(s)
    dg_edges = sorted(dg.edges)
    pool = chord_pool if chord_pool is not None else [
        e for e in combinations(range(n), 2) if e not in dg.edges]
    battery = list(s) + random_destinations(s, destinations_per_site * n, rng)
    report = CrossValidationReport(seed)
    for t in range(trials):
        removed = []
        added = []
        if t > 0:
            if drop_edges and rng.random() < 0.5:
                removed = [e for e in dg_edges if rng.random() < 0.25]
            if pool:
                added = rng.sample(pool, rng.randint(0, min(len(pool), max(1, n // 2))))
        g = GeometricGraph(s, (set(dg_edges) - set(removed)) | set(added))
        v = supports_greedy(g, dg)
        if v.supports:
            res = route_battery(g, battery)
            stuck = None
            ok = v.methods_agree and res.delivered == res.routes
        else:
            res = BatteryResult()
            cex = v.counterexample
            stuck = cex is not None and not cex.trace.delivered
            ok = v.methods_agree and stuck
        report.trials.append(TrialOutcome(t, len(added), len(removed), v.supports,
                                          v.methods_agree, res.routes, res.delivery_rate,
                                          stuck, ok))
    return report
