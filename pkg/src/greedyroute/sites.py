"""Site sets and geometric graphs: the routing substrate."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .geom import CoincidentSites, Number, Point, _lcm


class InvalidSiteSet(ValueError):
    pass


class NoSuchEdge(KeyError):
    pass


class DuplicateEdge(ValueError):
    pass


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point.of(x, y)


class SiteSet(Sequence[Point]):
    """Ordered, pairwise-distinct points; a site's id is its index."""

    def __init__(self, points: Iterable):
        pts = tuple(as_point(p) for p in points)
        if not pts:
            raise InvalidSiteSet("a site set needs at least one point")
        seen: dict[Point, int] = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise CoincidentSites(f"sites {seen[p]} and {i} coincide at {p}")
            seen[p] = i
        self._points = pts

    def __getitem__(self, i):
        return self._points[i]

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __eq__(self, other) -> bool:
        return isinstance(other, SiteSet) and self._points == other._points

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"SiteSet({[(str(p.x), str(p.y)) for p in self._points]})"

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    @cached_property
    def scale(self) -> int:
        """Common denominator of every coordinate."""
        den = 1
        for p in self._points:
            den = _lcm(_lcm(den, p.x.denominator), p.y.denominator)
        return den

    @cached_property
    def scaled(self) -> tuple[tuple[int, int], ...]:
        """Integer coordinates: every site multiplied by :attr:`scale`.

        Predicates are invariant under positive scaling, so the hot paths run on
        these ints instead of Fractions.
        """
        s = self.scale
        return tuple((int(p.x * s), int(p.y * s)) for p in self._points)

    def dist_sq_all(self, dest: Point) -> list[int]:
        """Squared distances from every site to ``dest``, all multiplied by one positive constant."""
        q = _lcm(dest.x.denominator, dest.y.denominator)
        s = self.scale
        dx = int(dest.x * s * q)
        dy = int(dest.y * s * q)
        out = []
        for x, y in self.scaled:
            ex = x * q - dx
            ey = y * q - dy
            out.append(ex * ex + ey * ey)
        return out


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


class GeometricGraph:
    """Immutable undirected graph on a :class:`SiteSet`."""

    def __init__(self, sites, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(sites, SiteSet):
            sites = SiteSet(sites)
        n = len(sites)
        es = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop at {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"edge ({i}, {j}) references a missing site")
            es.add(_norm_edge(i, j))
        self.sites = sites
        self.edges: frozenset[tuple[int, int]] = frozenset(es)
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in es:
            adj[i].append(j)
            adj[j].append(i)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @classmethod
    def complete(cls, sites) -> "GeometricGraph":
        if not isinstance(sites, SiteSet):
            sites = SiteSet(sites)
        return cls(sites, combinations(range(len(sites)), 2))

    def __len__(self) -> int:
        return len(self.sites)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GeometricGraph) and self.sites == other.sites
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.sites, self.edges))

    def __repr__(self) -> str:
        return f"GeometricGraph(n={len(self.sites)}, edges={sorted(self.edges)})"

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def has_edge(self, i: int, j: int) -> bool:
        return _norm_edge(i, j) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def without_edge(self, i: int, j: int) -> "GeometricGraph":
        e = _norm_edge(i, j)
        if e not in self.edges:
            raise NoSuchEdge(e)
        return GeometricGraph(self.sites, self.edges - {e})

    def with_edge(self, i: int, j: int) -> "GeometricGraph":
        e = _norm_edge(i, j)
        if e in self.edges:
            raise DuplicateEdge(e)
        return GeometricGraph(self.sites, self.edges | {e})

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "GeometricGraph":
        return GeometricGraph(self.sites, set(self.edges) | {_norm_edge(i, j) for i, j in edges})


def parse_point(text: str) -> Point:
    """Parse ``"x,y"`` with exact coordinates, e.g. ``"3/2,0"`` or ``"1.25,-2"``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x,y', got {text!r}")
    return Point.of(parts[0], parts[1])


def fraction_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


__all__ = [
    "SiteSet", "GeometricGraph", "InvalidSiteSet", "NoSuchEdge", "DuplicateEdge",
    "parse_point", "fraction_str", "as_point", "Number",
]
