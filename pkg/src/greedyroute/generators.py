"""Seeded site-set generators and graph perturbations.

Randomness comes from :class:`random.Random` (MT19937) seeded with a GeneratorSpec's
integer seed, which reproduces bit-for-bit across platforms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt
from typing import Any, Iterator, Optional, Union

from .geom import Point, to_scalar
from .sites import DuplicateEdge, GeometricGraph, NoSuchEdge, SiteSet

KINDS = {
    "uniform": "UniformGrid", "uniformgrid": "UniformGrid",
    "cocircular": "CocircularRational", "cocircularrational": "CocircularRational",
    "lattice": "Lattice",
    "clustered": "Clustered",
}


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    seed: int = 0
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        key = self.kind.replace("_", "").replace("-", "").lower()
        if key not in KINDS:
            raise InvalidSpec(f"unknown generator kind {self.kind!r}")
        object.__setattr__(self, "kind", KINDS[key])
        if self.n < 1:
            raise InvalidSpec("n must be >= 1")


def rational_parameters() -> Iterator[Optional[Fraction]]:
    """0, 1, -1, infinity (None), then p/q by increasing height with both signs."""
    yield Fraction(0)
    yield Fraction(1)
    yield Fraction(-1)
    yield None
    h = 2
    while True:
        coprime = [q for q in range(1, h) if gcd(h, q) == 1]
        for p, q in [(h, q) for q in coprime] + [(q, h) for q in coprime]:
            yield Fraction(p, q)
            yield Fraction(-p, q)
        h += 1


def circle_point(t: Optional[Fraction], radius: Fraction, center: Point) -> Point:
    if t is None:
        return Point(center.x - radius, center.y)
    d = 1 + t * t
    return Point(center.x + radius * (1 - t * t) / d, center.y + radius * 2 * t / d)


def _uniform(spec: GeneratorSpec, rng: random.Random) -> list[Point]:
    bound = int(spec.params.get("bound", 10**6))
    if bound < 0 or (bound + 1) ** 2 < spec.n:
        raise InvalidSpec(f"cannot place {spec.n} distinct points in [0, {bound}]^2")
    seen: set[tuple[int, int]] = set()
    out = []
    while len(out) < spec.n:
        p = (rng.randint(0, bound), rng.randint(0, bound))
        if p not in seen:
            seen.add(p)
            out.append(Point(Fraction(p[0]), Fraction(p[1])))
    return out


def _cocircular(spec: GeneratorSpec, rng: random.Random) -> list[Point]:
    radius = to_scalar(spec.params.get("radius", 1))
    if radius <= 0:
        raise InvalidSpec("radius must be positive")
    cx, cy = spec.params.get("center", (0, 0))
    center = Point.of(cx, cy)
    gen = rational_parameters()
    ts = [next(gen) for _ in range(spec.n)]
    out = [circle_point(t, radius, center) for t in ts]
    if spec.params.get("shuffle", False):
        rng.shuffle(out)
    return out


def _lattice(spec: GeneratorSpec, rng: random.Random) -> list[Point]:
    rows = spec.params.get("rows")
    cols = spec.params.get("cols")
    if rows is None or cols is None:
        side = isqrt(spec.n)
        if side * side != spec.n:
            raise InvalidSpec("lattice needs rows and cols, or a square n")
        rows = cols = side
    rows, cols = int(rows), int(cols)
    if rows * cols != spec.n:
        raise InvalidSpec(f"rows*cols = {rows * cols} != n = {spec.n}")
    bound = to_scalar(spec.params.get("bound", max(rows, cols) - 1))
    dx = bound / (cols - 1) if cols > 1 else Fraction(0)
    dy = bound / (rows - 1) if rows > 1 else Fraction(0)
    return [Point(c * dx, r * dy) for r in range(rows) for c in range(cols)]


def _clustered(spec: GeneratorSpec, rng: random.Random) -> list[Point]:
    bound = int(spec.params.get("bound", 10**6))
    k = int(spec.params.get("clusters", 3))
    spread = int(spec.params.get("spread", max(1, bound // 20)))
    if k < 1 or spread < 1:
        raise InvalidSpec("clusters and spread must be >= 1")
    centers = [(rng.randint(0, bound), rng.randint(0, bound)) for _ in range(k)]
    seen: set[tuple[int, int]] = set()
    out = []
    attempts = 0
    while len(out) < spec.n:
        attempts += 1
        if attempts > 100 * spec.n + 1000:
            raise InvalidSpec("clusters too tight for the requested number of points")
        cx, cy = centers[rng.randrange(k)]
        p = (min(bound, max(0, cx + rng.randint(-spread, spread))),
             min(bound, max(0, cy + rng.randint(-spread, spread))))
        if p not in seen:
            seen.add(p)
            out.append(Point(Fraction(p[0]), Fraction(p[1])))
    return out


_BUILDERS = {
    "UniformGrid": _uniform,
    "CocircularRational": _cocircular,
    "Lattice": _lattice,
    "Clustered": _clustered,
}


def generate(spec: GeneratorSpec) -> SiteSet:
    rng = random.Random(spec.seed)
    return SiteSet(_BUILDERS[spec.kind](spec, rng))


@dataclass(frozen=True)
class DropEdge:
    i: int
    j: int


@dataclass(frozen=True)
class AddEdge:
    i: int
    j: int


@dataclass(frozen=True)
class KnnRewire:
    """Replace all edges by the union of every site's k nearest neighbours."""
    k: int


@dataclass(frozen=True)
class UnitDisk:
    r: Union[int, str, Fraction]


Perturbation = Union[DropEdge, AddEdge, KnnRewire, UnitDisk]


def knn_edges(s: SiteSet, k: int) -> set[tuple[int, int]]:
    n = len(s)
    P = s.scaled
    edges = set()
    for i in range(n):
        xi, yi = P[i]
        order = sorted((j for j in range(n) if j != i),
                       key=lambda j: ((P[j][0] - xi) ** 2 + (P[j][1] - yi) ** 2, j))
        for j in order[:k]:
            edges.add((min(i, j), max(i, j)))
    return edges


def perturb(g: GeometricGraph, op: Perturbation) -> GeometricGraph:
    n = len(g.sites)
    if isinstance(op, (DropEdge, AddEdge)):
        if not (0 <= op.i < n and 0 <= op.j < n) or op.i == op.j:
            raise IndexError(f"invalid pair ({op.i}, {op.j})")
        if isinstance(op, DropEdge):
            return g.without_edge(op.i, op.j)
        return g.with_edge(op.i, op.j)
    if isinstance(op, KnnRewire):
        if op.k < 1:
            raise ValueError("k must be >= 1")
        return GeometricGraph(g.sites, knn_edges(g.sites, op.k))
    if isinstance(op, UnitDisk):
        r = to_scalar(op.r)
        if r <= 0:
            raise ValueError("r must be positive")
        pts = g.sites.points
        r2 = r * r
        return GeometricGraph(g.sites, [
            (i, j) for i, j in combinations(range(n), 2)
            if (pts[i].x - pts[j].x) ** 2 + (pts[i].y - pts[j].y) ** 2 <= r2])
    raise TypeError(f"unknown perturbation {op!r}")


__all__ = [
    "GeneratorSpec", "InvalidSpec", "generate", "rational_parameters", "circle_point",
    "DropEdge", "AddEdge", "KnnRewire", "UnitDisk", "perturb", "knn_edges",
    "NoSuchEdge", "DuplicateEdge",
]
