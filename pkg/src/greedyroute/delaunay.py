"""Delaunay triangulation, degenerate-edge classification and a brute-force edge oracle.

The triangulation is incremental Bowyer-Watson. The convex hull is closed off
with "ghost" triangles sharing a vertex at infinity, so no bounding super
triangle (and no coordinate guess) is needed. All predicates run on the
integer-scaled coordinates of the site set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

from .geom import (CoincidentSites, GeometryError, Point, incircle_det, orient_det)
from .sites import GeometricGraph, SiteSet

GHOST = -1


class TooFewSites(GeometryError):
    pass


class AllCollinear(GeometryError):
    pass


class NotAnEdge(KeyError):
    pass


class NotBoundedSegment(GeometryError):
    pass


class EdgeClass(enum.Enum):
    NOT_DELAUNAY = "NotDelaunay"
    DEGENERATE = "Degenerate"
    NON_DEGENERATE = "NonDegenerate"


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class SinglePoint:
    p: Point


@dataclass(frozen=True)
class Segment:
    """Part of the bisector line ``anchor + t * direction``.

    ``p1`` is the end with smaller ``t`` and ``p2`` the end with larger ``t``;
    ``None`` marks an unbounded end.
    """

    p1: Optional[Point]
    p2: Optional[Point]
    anchor: Point
    direction: tuple[int, int]

    @property
    def bounded(self) -> bool:
        return self.p1 is not None and self.p2 is not None

    @property
    def unbounded_flags(self) -> tuple[bool, bool]:
        return (self.p1 is None, self.p2 is None)


SharedFeature = Union[Empty, SinglePoint, Segment]


def _between(u, v, p) -> bool:
    """p strictly inside segment uv, given that u, v, p are collinear."""
    return ((p[0] - u[0]) * (v[0] - u[0]) + (p[1] - u[1]) * (v[1] - u[1]) > 0
            and (p[0] - v[0]) * (u[0] - v[0]) + (p[1] - v[1]) * (u[1] - v[1]) > 0)


def _collinear(pts) -> bool:
    if len(pts) < 3:
        return True
    a, b = pts[0], pts[1]
    return all(orient_det(*a, *b, *c) == 0 for c in pts[2:])


class Triangulation:
    """A Delaunay triangulation of a site set.

    ``triangles`` holds counter-clockwise id triples. ``edge_triangle`` maps each
    directed edge (u, v) to the triangle that has it in counter-clockwise order;
    a hull edge has exactly one direction present.
    """

    def __init__(self, site_set: SiteSet, triangles: list[tuple[int, int, int]]):
        self.site_set = site_set
        self.triangles = triangles
        self.edge_triangle: dict[tuple[int, int], int] = {}
        for t, (a, b, c) in enumerate(triangles):
            for e in ((a, b), (b, c), (c, a)):
                self.edge_triangle[e] = t

    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(u, v), max(u, v)) for u, v in self.edge_triangle})

    def hull_edges(self) -> list[tuple[int, int]]:
        """Hull edges as counter-clockwise directed pairs."""
        return sorted(e for e in self.edge_triangle if (e[1], e[0]) not in self.edge_triangle)

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edge_triangle or (j, i) in self.edge_triangle

    def incident_triangles(self, i: int, j: int) -> list[tuple[int, int, int]]:
        out = []
        for e in ((i, j), (j, i)):
            t = self.edge_triangle.get(e)
            if t is not None:
                out.append(self.triangles[t])
        return out

    def __repr__(self) -> str:
        return f"Triangulation(n={len(self.site_set)}, triangles={len(self.triangles)})"


def triangulate(s: SiteSet) -> Triangulation:
    """Delaunay triangulation by incremental insertion in input order.

    Cocircular ties count as "outside", so cocircular groups are split by an
    arbitrary (but deterministic) choice of diagonals.
    """
    if not isinstance(s, SiteSet):
        s = SiteSet(s)
    n = len(s)
    if n < 3:
        raise TooFewSites(f"need at least 3 sites, got {n}")
    P = s.scaled
    third = next((k for k in range(2, n) if orient_det(*P[0], *P[1], *P[k]) != 0), None)
    if third is None:
        raise AllCollinear("all sites lie on one line")
    a, b, c = 0, 1, third
    if orient_det(*P[a], *P[b], *P[c]) < 0:
        a, b = b, a
    tris = [(a, b, c), (b, a, GHOST), (c, b, GHOST), (a, c, GHOST)]

    def conflicts(t, p) -> bool:
        u, v, w = t
        if w == GHOST:
            o = orient_det(*P[u], *P[v], *p)
            return o > 0 or (o == 0 and _between(P[u], P[v], p))
        return incircle_det(*P[u], *P[v], *P[w], *p) > 0

    for k in range(n):
        if k in (a, b, c):
            continue
        p = P[k]
        cavity = []
        keep = []
        for t in tris:
            (cavity if conflicts(t, p) else keep).append(t)
        assert cavity, "inserted point conflicts with no triangle"
        directed = set()
        for u, v, w in cavity:
            directed.update(((u, v), (v, w), (w, u)))
        for u, v in directed:
            if (v, u) in directed:
                continue
            if u == GHOST:
                keep.append((v, k, GHOST))
            elif v == GHOST:
                keep.append((k, u, GHOST))
            else:
                keep.append((u, v, k))
        # Sorting keeps the result independent of set iteration order.
        tris = sorted(keep)
    return Triangulation(s, [t for t in tris if GHOST not in t])


def classify_edge(t: Triangulation, i: int, j: int) -> EdgeClass:
    """Degenerate iff the two triangles on (i, j) share their circumcircle."""
    if not t.has_edge(i, j):
        raise NotAnEdge((i, j))
    inc = t.incident_triangles(i, j)
    if len(inc) < 2:
        return EdgeClass.NON_DEGENERATE
    P = t.site_set.scaled
    (u, v, w), other = inc
    d = next(x for x in other if x not in (u, v, w))
    if incircle_det(*P[u], *P[v], *P[w], *P[d]) == 0:
        return EdgeClass.DEGENERATE
    return EdgeClass.NON_DEGENERATE


def classify_all(t: Triangulation) -> dict[tuple[int, int], EdgeClass]:
    return {e: classify_edge(t, *e) for e in t.edges()}


def delaunay_graph(s: SiteSet) -> GeometricGraph:
    """Graph of all non-degenerate Delaunay edges."""
    if not isinstance(s, SiteSet):
        s = SiteSet(s)
    n = len(s)
    if n == 1:
        return GeometricGraph(s)
    if _collinear(s.scaled):
        # Voronoi cells of collinear sites are parallel slabs; consecutive slabs share a line.
        order = sorted(range(n), key=lambda i: s.scaled[i])
        return GeometricGraph(s, zip(order, order[1:]))
    t = triangulate(s)
    return GeometricGraph(s, [e for e, cls in classify_all(t).items()
                              if cls is EdgeClass.NON_DEGENERATE])


def _bisector_interval(P, i: int, j: int):
    """Parameter interval of the bisector of (i, j) lying in both Voronoi cells.

    The bisector is parametrised as m + t*u with m the midpoint and
    u = perp(P[j] - P[i]). Each other site k cuts it to a half-line. Bounds are
    returned as (numerator, positive denominator) pairs or None when unbounded;
    ``None`` overall means the intersection is empty.
    """
    xi, yi = P[i]
    xj, yj = P[j]
    ux, uy = yi - yj, xj - xi
    sx, sy = xi + xj, yi + yj
    ri = xi * xi + yi * yi
    lo = hi = None
    for k, (xk, yk) in enumerate(P):
        if k == i or k == j:
            continue
        wx, wy = xk - xi, yk - yi
        alpha = 2 * (ux * wx + uy * wy)
        beta = xk * xk + yk * yk - ri - (sx * wx + sy * wy)
        if alpha == 0:
            if beta < 0:
                return None
            continue
        if alpha > 0:
            if hi is None or beta * hi[1] < hi[0] * alpha:
                hi = (beta, alpha)
        else:
            if lo is None or -beta * lo[1] > lo[0] * -alpha:
                lo = (-beta, -alpha)
        if lo is not None and hi is not None and lo[0] * hi[1] > hi[0] * lo[1]:
            return None
    return lo, hi


def edge_oracle(s: SiteSet, i: int, j: int) -> tuple[EdgeClass, SharedFeature]:
    """Classify the pair (i, j) straight from the cell-adjacency definition.

    Independent of :func:`triangulate`: intersects, along the bisector of the
    pair, the half-lines where no third site is closer. O(n) per pair.
    """
    if not isinstance(s, SiteSet):
        s = SiteSet(s)
    if i == j:
        raise CoincidentSites(f"pair ({i}, {i})")
    P = s.scaled
    res = _bisector_interval(P, i, j)
    if res is None:
        return EdgeClass.NOT_DELAUNAY, Empty()
    lo, hi = res
    xi, yi = P[i]
    xj, yj = P[j]
    ux, uy = yi - yj, xj - xi
    scale = s.scale

    def at(bound) -> Point:
        t = Fraction(bound[0], bound[1])
        return Point(Fraction(xi + xj, 2 * scale) + t * ux / scale,
                     Fraction(yi + yj, 2 * scale) + t * uy / scale)

    if lo is not None and hi is not None and lo[0] * hi[1] == hi[0] * lo[1]:
        return EdgeClass.DEGENERATE, SinglePoint(at(lo))
    anchor = Point(Fraction(xi + xj, 2 * scale), Fraction(yi + yj, 2 * scale))
    seg = Segment(None if lo is None else at(lo), None if hi is None else at(hi),
                  anchor, _primitive_dir(ux, uy))
    return EdgeClass.NON_DEGENERATE, seg


def _primitive_dir(x: int, y: int) -> tuple[int, int]:
    g = gcd(x, y)
    return (x // g, y // g) if g else (0, 0)


def oracle_classes(s: SiteSet) -> dict[tuple[int, int], EdgeClass]:
    """Oracle class of every unordered pair; O(n^3)."""
    n = len(s)
    return {(i, j): edge_oracle(s, i, j)[0] for i in range(n) for j in range(i + 1, n)}


def shared_voronoi_midpoint(s: SiteSet, i: int, j: int) -> Point:
    """Midpoint of the bounded Voronoi edge shared by sites i and j."""
    cls, feature = edge_oracle(s, i, j)
    if not isinstance(feature, Segment) or not feature.bounded:
        raise NotBoundedSegment(f"cells of {i} and {j} share {cls.value} feature {feature}")
    p1, p2 = feature.p1, feature.p2
    return Point((p1.x + p2.x) / 2, (p1.y + p2.y) / 2)
