"""Exact 2-D geometric primitives.

Every coordinate is a :class:`fractions.Fraction`; no predicate ever touches
floating point. Squared distances are used throughout so all values stay
rational.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Union

Scalar = Fraction
Number = Union[int, str, Fraction]


class GeometryError(ValueError):
    pass


class CollinearDefiningPoints(GeometryError):
    pass


class CoincidentSites(GeometryError):
    pass


def to_scalar(value: Number) -> Fraction:
    """Parse an int, decimal string ("1.25"), rational string ("5/4") or Fraction.

    Floats are refused: they would silently smuggle rounding into the kernel.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coordinate {value!r}")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Number, y: Number) -> "Point":
        return cls(to_scalar(x), to_scalar(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


class HalfPlane(NamedTuple):
    """The closed set {(x, y) : a*x + b*y <= c}.

    Coefficients produced by :func:`bisector_halfplane` are primitive integers.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y <= self.c

    def contains_strictly(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y < self.c


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class Circle(enum.Enum):
    INSIDE = "inside"
    ON = "on"
    OUTSIDE = "outside"


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def dist_sq(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def orient_det(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def incircle_det(ax, ay, bx, by, cx, cy, dx, dy):
    """Positive iff d lies inside the circle through a, b, c when (a, b, c) is CCW."""
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (alift * (bdx * cdy - cdx * bdy)
            + blift * (cdx * ady - adx * cdy)
            + clift * (adx * bdy - bdx * ady))


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    return Orientation(_sign(orient_det(a.x, a.y, b.x, b.y, c.x, c.y)))


def in_circle(a: Point, b: Point, c: Point, d: Point) -> Circle:
    """Locate d against the circle through a, b, c (any orientation of a, b, c)."""
    o = _sign(orient_det(a.x, a.y, b.x, b.y, c.x, c.y))
    if o == 0:
        raise CollinearDefiningPoints(f"{a}, {b}, {c} are collinear")
    s = o * _sign(incircle_det(a.x, a.y, b.x, b.y, c.x, c.y, d.x, d.y))
    if s > 0:
        return Circle.INSIDE
    if s < 0:
        return Circle.OUTSIDE
    return Circle.ON


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    bx, by = b.x - a.x, b.y - a.y
    cx, cy = c.x - a.x, c.y - a.y
    d = 2 * (bx * cy - by * cx)
    if d == 0:
        raise CollinearDefiningPoints(f"{a}, {b}, {c} are collinear")
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return Point(a.x + ux, a.y + uy)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def primitive(*coeffs: Fraction) -> tuple[int, ...]:
    """Scale rationals by a positive factor to coprime integers."""
    den = 1
    for v in coeffs:
        den = _lcm(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def bisector_halfplane(vi: Point, vj: Point) -> HalfPlane:
    """Points at least as close to ``vi`` as to ``vj``.

    |x - vi|^2 <= |x - vj|^2 reduces to 2 (vj - vi) . x <= |vj|^2 - |vi|^2.
    """
    if vi == vj:
        raise CoincidentSites(f"bisector of coincident sites {vi}")
    a = 2 * (vj.x - vi.x)
    b = 2 * (vj.y - vi.y)
    c = vj.x * vj.x + vj.y * vj.y - vi.x * vi.x - vi.y * vi.y
    ia, ib, ic = primitive(a, b, c)
    return HalfPlane(Fraction(ia), Fraction(ib), Fraction(ic))


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True when closed segments p1p2 and q1q2 meet anywhere other than a shared endpoint."""
    shared = {p1, p2} & {q1, q2}
    d1 = _sign(orient_det(*q1, *q2, *p1))
    d2 = _sign(orient_det(*q1, *q2, *p2))
    d3 = _sign(orient_det(*p1, *p2, *q1))
    d4 = _sign(orient_det(*p1, *p2, *q2))
    if shared:
        if len(shared) == 2:
            return True
        # Sharing one endpoint: they only overlap further if collinear and pointing the same way.
        if d1 == d2 == d3 == d4 == 0:
            s = shared.pop()
            po = p2 if p1 == s else p1
            qo = q2 if q1 == s else q1
            return (po.x - s.x) * (qo.x - s.x) + (po.y - s.y) * (qo.y - s.y) > 0
        return False
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    def on_segment(a: Point, b: Point, p: Point) -> bool:
        return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)

    return ((d1 == 0 and on_segment(q1, q2, p1)) or (d2 == 0 and on_segment(q1, q2, p2))
            or (d3 == 0 and on_segment(p1, p2, q1)) or (d4 == 0 and on_segment(p1, p2, q2)))
