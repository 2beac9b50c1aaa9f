"""Voronoi cells and vertex regions as exact half-plane intersections.

A region is kept as its constraint list; a generator form (vertices plus
recession rays) is derived lazily by brute-force vertex enumeration. Vertices
are homogeneous integer triples (X, Y, W) with W > 0, so every membership test
and every extremum check is integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import atan2, gcd
from typing import Optional, Sequence

from .geom import HalfPlane, Point, _lcm
from .sites import GeometricGraph, SiteSet

IntHalfPlane = tuple[int, int, int]


def bisector_ints(s: SiteSet, i: int, k: int) -> IntHalfPlane:
    """Primitive integer (a, b, c) with a*x + b*y <= c iff x is no farther from site i than site k."""
    P = s.scaled
    L = s.scale
    xi, yi = P[i]
    xk, yk = P[k]
    a = 2 * L * (xk - xi)
    b = 2 * L * (yk - yi)
    c = xk * xk + yk * yk - xi * xi - yi * yi
    g = gcd(gcd(a, b), c)
    return (a // g, b // g, c // g)


def homogeneous(p: Point) -> tuple[int, int, int]:
    w = _lcm(p.x.denominator, p.y.denominator)
    return (int(p.x * w), int(p.y * w), w)


def _normalize(x: int, y: int, w: int) -> tuple[int, int, int]:
    if w < 0:
        x, y, w = -x, -y, -w
    g = gcd(gcd(x, y), w)
    return (x // g, y // g, w // g)


def _primitive_dir(x: int, y: int) -> tuple[int, int]:
    g = gcd(x, y)
    return (x // g, y // g)


def _satisfies(cons: Sequence[IntHalfPlane], X: int, Y: int, W: int) -> bool:
    for a, b, c in cons:
        if a * X + b * Y > c * W:
            return False
    return True


@dataclass(frozen=True)
class Generators:
    """Polyhedron as conv(points) + cone(rays); empty when ``points`` is empty."""

    points: tuple[tuple[int, int, int], ...]
    rays: tuple[tuple[int, int], ...]

    def status(self, h: IntHalfPlane) -> int:
        """+1 if the polyhedron pokes strictly past h, 0 if it only touches h's line, -1 if strictly inside."""
        a, b, c = h
        for rx, ry in self.rays:
            if a * rx + b * ry > 0:
                return 1
        best = -1
        for X, Y, W in self.points:
            v = a * X + b * Y - c * W
            if v > 0:
                return 1
            if v == 0:
                best = 0
        return best


def generators(cons: Sequence[IntHalfPlane]) -> Generators:
    """Vertices and recession rays of the intersection of ``cons``; O(m^3) worst case.

    Callers get faster rejection by putting the most restrictive constraints first.
    """
    m = len(cons)
    if m == 0:
        return Generators(((0, 0, 1),), ((-1, 0), (0, -1), (0, 1), (1, 0)))
    verts = set()
    for p in range(m):
        a1, b1, c1 = cons[p]
        for q in range(p + 1, m):
            a2, b2, c2 = cons[q]
            w = a1 * b2 - a2 * b1
            if w == 0:
                continue
            x = c1 * b2 - c2 * b1
            y = a1 * c2 - a2 * c1
            if w < 0:
                x, y, w = -x, -y, -w
            if _satisfies(cons, x, y, w):
                verts.add(_normalize(x, y, w))
    rays = set()
    for a, b, _ in cons:
        for r in ((-b, a), (b, -a), (-a, -b)):
            if all(a2 * r[0] + b2 * r[1] <= 0 for a2, b2, _ in cons):
                rays.add(_primitive_dir(*r))
    if not verts:
        # No vertex: the region is empty or contains a whole line, and then some
        # constraint line lies on its boundary, so its foot point is feasible.
        for a, b, c in cons:
            x, y, w = a * c, b * c, a * a + b * b
            if _satisfies(cons, x, y, w):
                verts.add(_normalize(x, y, w))
        if not verts:
            return Generators((), ())
    return Generators(tuple(sorted(verts)), tuple(sorted(rays)))


def _to_point(h: tuple[int, int, int]) -> Point:
    return Point(Fraction(h[0], h[2]), Fraction(h[1], h[2]))


def interior_point(gens: Generators) -> Optional[Point]:
    """Centroid of three affinely independent generated points, or None if the set is flat.

    The triangle lies inside the (convex) region, so its centroid is an interior point.
    """
    if not gens.points:
        return None
    base = [_to_point(h) for h in gens.points]
    cands = list(base)
    p0 = base[0]
    cands += [Point(p0.x + rx, p0.y + ry) for rx, ry in gens.rays]
    a = cands[0]
    b = next((q for q in cands if q != a), None)
    if b is None:
        return None
    for c in cands:
        if (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) != 0:
            return Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3)
    return None


class ConvexRegion:
    """Points at least as close to ``base_site`` as to each of ``competitors``."""

    def __init__(self, sites: SiteSet, base_site: int, competitors: Sequence[int]):
        self.sites = sites
        self.base_site = base_site
        self.competitors = tuple(competitors)
        self.int_constraints: tuple[IntHalfPlane, ...] = tuple(
            bisector_ints(sites, base_site, k) for k in self.competitors)

    @property
    def constraints(self) -> tuple[HalfPlane, ...]:
        return tuple(HalfPlane(Fraction(a), Fraction(b), Fraction(c))
                     for a, b, c in self.int_constraints)

    def contains(self, p: Point) -> bool:
        return _satisfies(self.int_constraints, *homogeneous(p))

    def contains_strictly(self, p: Point) -> bool:
        X, Y, W = homogeneous(p)
        return all(a * X + b * Y < c * W for a, b, c in self.int_constraints)

    @cached_property
    def generators(self) -> Generators:
        # Nearest competitors first: their bisectors reject most candidate vertices.
        P = self.sites.scaled
        bx, by = P[self.base_site]
        order = sorted(range(len(self.competitors)),
                       key=lambda t: ((P[self.competitors[t]][0] - bx) ** 2
                                      + (P[self.competitors[t]][1] - by) ** 2, t))
        return generators([self.int_constraints[t] for t in order])

    @property
    def vertices(self) -> list[Point]:
        """Exact corner points, counter-clockwise. Empty for regions without corners."""
        if not self.is_pointed:
            return []
        return _ccw([_to_point(h) for h in self.generators.points])

    @property
    def rays(self) -> list[tuple[int, int]]:
        """Directions along which the region is unbounded (a superset of its extreme rays)."""
        return list(self.generators.rays)

    @property
    def is_bounded(self) -> bool:
        return not self.generators.rays

    @property
    def is_pointed(self) -> bool:
        rays = set(self.generators.rays)
        return not any((-x, -y) in rays for x, y in rays)

    def subset_of(self, h: IntHalfPlane) -> bool:
        return self.generators.status(h) <= 0

    def clipped(self, box: tuple[Fraction, Fraction, Fraction, Fraction]) -> list[Point]:
        """Polygon of the region cut to ``box`` = (xmin, ymin, xmax, ymax); for drawing only."""
        xmin, ymin, xmax, ymax = (Fraction(v) for v in box)
        extra = []
        for a, b, c in (( -1, 0, -xmin), (0, -1, -ymin), (1, 0, xmax), (0, 1, ymax)):
            c = Fraction(c)
            extra.append((a * c.denominator, b * c.denominator, c.numerator))
        gens = generators(list(self.int_constraints) + extra)
        return _ccw([_to_point(h) for h in gens.points])

    def __repr__(self) -> str:
        return (f"ConvexRegion(base_site={self.base_site}, "
                f"competitors={list(self.competitors)})")


def _ccw(pts: list[Point]) -> list[Point]:
    if len(pts) < 3:
        return pts
    cx = sum(p.x for p in pts) / len(pts)
    cy = sum(p.y for p in pts) / len(pts)
    return sorted(pts, key=lambda p: (atan2(float(p.y - cy), float(p.x - cx)), p))


def voronoi_cell(s: SiteSet, i: int) -> ConvexRegion:
    if not isinstance(s, SiteSet):
        s = SiteSet(s)
    return ConvexRegion(s, i, [k for k in range(len(s)) if k != i])


def vertex_region(g: GeometricGraph, i: int) -> ConvexRegion:
    return ConvexRegion(g.sites, i, g.neighbors(i))


@dataclass(frozen=True)
class EqualityVerdict:
    """Outcome of comparing a vertex region with its Voronoi cell.

    ``boundary_contacts`` lists non-neighbours whose bisector the vertex region
    touches without crossing: the region meets their cell in a single point,
    which never traps a packet.
    """

    site: int
    equal: bool
    witness: Optional[Point] = None
    blocking_site: Optional[int] = None
    boundary_contacts: tuple[int, ...] = field(default=())


def nearest_ids(s: SiteSet, p: Point) -> list[int]:
    d = s.dist_sq_all(p)
    best = min(d)
    return [k for k, v in enumerate(d) if v == best]


def _isolate(s: SiteSet, vr: ConvexRegion, x: Point, i: int) -> tuple[Point, int]:
    """Slide x toward one of its tied nearest sites until that site is the unique nearest."""
    near = nearest_ids(s, x)
    if len(near) == 1:
        return x, near[0]
    target = s[near[0]]
    eps = Fraction(1, 2)
    while True:
        y = Point(x.x + eps * (target.x - x.x), x.y + eps * (target.y - x.y))
        if vr.contains_strictly(y):
            near = nearest_ids(s, y)
            if len(near) == 1 and near[0] != i:
                return y, near[0]
        eps /= 2


def _simplify(s: SiteSet, vr: ConvexRegion, x: Point, i: int) -> tuple[Point, int]:
    """Snap x to the coarsest dyadic grid that keeps it a trapping destination."""
    den = 1
    while True:
        y = Point(Fraction(round(x.x * den), den), Fraction(round(x.y * den), den))
        if vr.contains_strictly(y):
            near = nearest_ids(s, y)
            if len(near) == 1 and near[0] != i:
                return y, near[0]
        den *= 2


def regions_equal(g: GeometricGraph, i: int) -> EqualityVerdict:
    """Decide VR_G(i) == VC(i) exactly, with a trapping destination when they differ.

    The regions differ iff some non-neighbour's bisector cuts the vertex region,
    i.e. the vertex region has a vertex or a recession ray strictly on the far
    side. The witness is an interior point of the vertex region strictly closer
    to that non-neighbour, so no neighbour of ``i`` is even tied with ``i``.
    """
    s = g.sites
    vr = vertex_region(g, i)
    gens = vr.generators
    nbrs = set(g.neighbors(i))
    violator = None
    contacts = []
    for k in range(len(s)):
        if k == i or k in nbrs:
            continue
        st = gens.status(bisector_ints(s, i, k))
        if st > 0:
            violator = k
            break
        if st == 0:
            contacts.append(k)
    if violator is None:
        return EqualityVerdict(i, True, boundary_contacts=tuple(contacts))

    a, b, c = bisector_ints(s, i, violator)
    gap = generators(list(vr.int_constraints) + [(-a, -b, -c)])
    x = interior_point(gap)
    assert x is not None and vr.contains_strictly(x), "gap region has no interior"
    X, Y, W = homogeneous(x)
    assert a * X + b * Y > c * W
    x, _ = _isolate(s, vr, x, i)
    x, blocking = _simplify(s, vr, x, i)
    return EqualityVerdict(i, False, witness=x, blocking_site=blocking)


def witness_destination(g: GeometricGraph, i: int) -> Optional[Point]:
    return regions_equal(g, i).witness
