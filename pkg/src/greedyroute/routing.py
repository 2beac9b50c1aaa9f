"""Greedy geographic forwarding and its delivery semantics."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .geom import Point
from .sites import GeometricGraph, SiteSet


class Outcome(enum.Enum):
    DELIVERED = "Delivered"
    STUCK = "Stuck"


@dataclass(frozen=True)
class RouteOutcome:
    kind: Outcome
    path: tuple[int, ...]
    destination: Point

    @property
    def delivered(self) -> bool:
        return self.kind is Outcome.DELIVERED

    @property
    def terminal(self) -> int:
        return self.path[-1]

    @property
    def hops(self) -> int:
        return len(self.path) - 1


def nearest_site(s: SiteSet, dest: Point) -> frozenset[int]:
    d = s.dist_sq_all(dest)
    best = min(d)
    return frozenset(k for k, v in enumerate(d) if v == best)


def _next_hop(adjacency: Sequence[Sequence[int]], d2: Sequence[int], current: int) -> Optional[int]:
    best = None
    best_d = d2[current]
    for j in adjacency[current]:
        # Strict '<' keeps the lowest id on ties because neighbours are sorted.
        if d2[j] < best_d:
            best, best_d = j, d2[j]
    return best


def greedy_next(g: GeometricGraph, current: int, dest: Point) -> Optional[int]:
    """Neighbour strictly closer to ``dest`` than ``current`` and closest among those.

    Ties go to the lowest site id; ``None`` means the packet is at a local minimum.
    """
    return _next_hop(g.adjacency, g.sites.dist_sq_all(dest), current)


def route_with_distances(g: GeometricGraph, source: int, dest: Point,
                         d2: Sequence[int], best: Optional[int] = None) -> RouteOutcome:
    """Route using precomputed (uniformly scaled) squared distances to ``dest``.

    Lets a caller share one distance table across many sources.
    """
    if best is None:
        best = min(d2)
    adj = g.adjacency
    path = [source]
    cur = source
    while True:
        nxt = _next_hop(adj, d2, cur)
        if nxt is None:
            break
        path.append(nxt)
        cur = nxt
    kind = Outcome.DELIVERED if d2[cur] == best else Outcome.STUCK
    return RouteOutcome(kind, tuple(path), dest)


def route(g: GeometricGraph, source: int, dest: Point) -> RouteOutcome:
    """Forward greedily from ``source`` until no neighbour improves.

    Squared distance strictly drops every hop, so no site repeats and the path
    has at most n nodes. Delivered iff the last node is one of the nearest sites.
    """
    if not 0 <= source < len(g.sites):
        raise IndexError(f"no site {source}")
    return route_with_distances(g, source, dest, g.sites.dist_sq_all(dest))
