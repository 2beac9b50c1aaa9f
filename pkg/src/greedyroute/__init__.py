"""Exact verification of greedy geographic routing on geometric graphs."""

from .delaunay import (EdgeClass, Triangulation, classify_edge, delaunay_graph, edge_oracle,
                       shared_voronoi_midpoint, triangulate)
from .geom import (Circle, HalfPlane, Orientation, Point, bisector_halfplane, circumcenter,
                   dist_sq, in_circle, orientation)
from .regions import (ConvexRegion, EqualityVerdict, regions_equal, vertex_region, voronoi_cell,
                      witness_destination)
from .routing import Outcome, RouteOutcome, greedy_next, nearest_site, route
from .sites import GeometricGraph, SiteSet
from .verifier import SupportVerdict, cross_validate, is_sparsest_support, supports_greedy

__version__ = "0.1.0"

__all__ = [
    "Point", "HalfPlane", "Orientation", "Circle", "dist_sq", "orientation", "in_circle",
    "circumcenter", "bisector_halfplane",
    "SiteSet", "GeometricGraph",
    "EdgeClass", "Triangulation", "triangulate", "classify_edge", "delaunay_graph",
    "edge_oracle", "shared_voronoi_midpoint",
    "ConvexRegion", "EqualityVerdict", "voronoi_cell", "vertex_region", "regions_equal",
    "witness_destination",
    "Outcome", "RouteOutcome", "greedy_next", "route", "nearest_site",
    "SupportVerdict", "supports_greedy", "is_sparsest_support", "cross_validate",
]
