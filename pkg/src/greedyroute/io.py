"""JSON wire format: exact coordinates travel as strings.

Point-set file::

    {"points": [["0", "0"], ["5/4", "1.5"], ...]}

A graph file adds ``"edges": [[i, j], ...]`` with ``i < j``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .delaunay import EdgeClass, Triangulation, classify_all
from .geom import Point
from .routing import RouteOutcome
from .sites import GeometricGraph, SiteSet, fraction_str
from .verifier import SupportVerdict


class FormatError(ValueError):
    pass


def point_json(p: Point) -> list[str]:
    return [fraction_str(p.x), fraction_str(p.y)]


def sites_to_dict(s: SiteSet) -> dict[str, Any]:
    return {"points": [point_json(p) for p in s]}


def graph_to_dict(g: GeometricGraph) -> dict[str, Any]:
    d = sites_to_dict(g.sites)
    d["edges"] = [list(e) for e in g.sorted_edges()]
    return d


def _coord(v) -> str:
    if isinstance(v, bool) or isinstance(v, float):
        raise FormatError(f"coordinate {v!r} must be a string or integer, not a float")
    return str(v)


def sites_from_dict(d: dict) -> SiteSet:
    try:
        pts = d["points"]
        return SiteSet([(_coord(x), _coord(y)) for x, y in pts])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad point set: {exc}") from exc


def graph_from_dict(d: dict) -> GeometricGraph:
    s = sites_from_dict(d)
    try:
        return GeometricGraph(s, [(int(i), int(j)) for i, j in d.get("edges", [])])
    except (TypeError, ValueError, IndexError) as exc:
        raise FormatError(f"bad edge list: {exc}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_graph(path: Union[str, Path]) -> GeometricGraph:
    """Read a point-set or graph file; a bare point set gives an edgeless graph."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    return graph_from_dict(data)


def load_sites(path: Union[str, Path]) -> SiteSet:
    return load_graph(path).sites


def save_graph(g: GeometricGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(graph_to_dict(g)))


def save_sites(s: SiteSet, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(sites_to_dict(s)))


def route_to_dict(r: RouteOutcome) -> dict[str, Any]:
    return {"kind": r.kind.value, "path": list(r.path), "destination": point_json(r.destination)}


def verdict_to_dict(v: SupportVerdict) -> dict[str, Any]:
    cex = None
    if v.counterexample is not None:
        c = v.counterexample
        cex = {"node": c.node, "destination": point_json(c.destination),
               "trace": route_to_dict(c.trace)}
    return {
        "supports": v.supports,
        "method_edge_test": v.method_edge_test,
        "method_region_test": v.method_region_test,
        "missing_edges": [list(e) for e in v.missing_edges],
        "violating_sites": list(v.violating_sites),
        "counterexample": cex,
    }


def triangulation_to_dict(t: Triangulation) -> dict[str, Any]:
    classes = classify_all(t)
    return {
        **sites_to_dict(t.site_set),
        "triangles": [list(tri) for tri in t.triangles],
        "edges": [[i, j, c.value] for (i, j), c in sorted(classes.items())],
        "delaunay_graph": [[i, j] for (i, j), c in sorted(classes.items())
                           if c is EdgeClass.NON_DEGENERATE],
    }
