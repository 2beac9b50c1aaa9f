"""Figures: Voronoi diagram, Delaunay graph, vertex regions and route traces.

Line styles follow the usual convention for these diagrams: dash-dot Voronoi
boundaries, solid graph edges, dashed vertex-region outline. Output is SVG with
a fixed hash salt and no timestamp, so identical inputs give identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .delaunay import Segment, delaunay_graph, edge_oracle, triangulate, _collinear  # noqa: E402
from .geom import Point, circumcenter  # noqa: E402
from .regions import vertex_region  # noqa: E402
from .routing import RouteOutcome  # noqa: E402
from .sites import GeometricGraph, SiteSet  # noqa: E402

RC = {
    "svg.hashsalt": "greedyroute",
    "svg.fonttype": "none",
    "font.size": 9,
    "axes.linewidth": 0.6,
}

Box = tuple[Fraction, Fraction, Fraction, Fraction]


def rendering_box(s: SiteSet, extra: Sequence[Point] = ()) -> Box:
    """Bounding box of the sites, the Voronoi vertices and ``extra``, grown by 10%."""
    pts = list(s) + list(extra)
    if len(s) >= 3 and not _collinear(s.scaled):
        t = triangulate(s)
        pts += [circumcenter(s[a], s[b], s[c]) for a, b, c in t.triangles]
    xmin = min(p.x for p in pts)
    xmax = max(p.x for p in pts)
    ymin = min(p.y for p in pts)
    ymax = max(p.y for p in pts)
    w = max(xmax - xmin, ymax - ymin, Fraction(1))
    m = w / 10
    return (xmin - m, ymin - m, xmax + m, ymax + m)


def _clip_line(anchor: Point, d: tuple[int, int], t_lo, t_hi, box: Box):
    """Clip anchor + t*d, t in [t_lo, t_hi] (None = unbounded), to the box."""
    xmin, ymin, xmax, ymax = box
    lo, hi = t_lo, t_hi
    for a0, dv, mn, mx in ((anchor.x, d[0], xmin, xmax), (anchor.y, d[1], ymin, ymax)):
        if dv == 0:
            if not mn <= a0 <= mx:
                return None
            continue
        t1, t2 = (mn - a0) / dv, (mx - a0) / dv
        if t1 > t2:
            t1, t2 = t2, t1
        lo = t1 if lo is None else max(lo, t1)
        hi = t2 if hi is None else min(hi, t2)
    if lo is None or hi is None or lo > hi:
        return None
    return ((anchor.x + lo * d[0], anchor.y + lo * d[1]),
            (anchor.x + hi * d[0], anchor.y + hi * d[1]))


def _param(seg: Segment, p: Optional[Point]):
    if p is None:
        return None
    dx, dy = seg.direction
    return ((p.x - seg.anchor.x) * dx + (p.y - seg.anchor.y) * dy) / (dx * dx + dy * dy)


def voronoi_segments(s: SiteSet, box: Box):
    out = []
    dg = delaunay_graph(s)
    for i, j in dg.sorted_edges():
        _, feat = edge_oracle(s, i, j)
        if not isinstance(feat, Segment):
            continue
        clipped = _clip_line(feat.anchor, feat.direction, _param(feat, feat.p1),
                             _param(feat, feat.p2), box)
        if clipped is not None:
            out.append(clipped)
    return out


def _f(v) -> float:
    return float(v)


def render_svg(s: Union[SiteSet, GeometricGraph], out: Union[str, Path], *,
               voronoi: bool = True, delaunay: bool = True,
               graph: Optional[GeometricGraph] = None,
               region_of: Optional[int] = None,
               trace: Optional[RouteOutcome] = None,
               title: Optional[str] = None) -> Path:
    """Draw the requested layers and write an SVG to ``out``.

    ``region_of`` outlines that site's vertex region in ``graph`` (or in the
    Delaunay graph when no graph is given).
    """
    if isinstance(s, GeometricGraph):
        graph = graph or s
        s = s.sites
    n = len(s)
    if region_of is not None and not 0 <= region_of < n:
        raise IndexError(f"no site {region_of}")
    extra: list[Point] = []
    region_poly = None
    region_graph = graph if graph is not None else delaunay_graph(s)
    if region_of is not None:
        vr = vertex_region(region_graph, region_of)
        extra += vr.vertices
    if trace is not None:
        extra.append(trace.destination)
    box = rendering_box(s, extra)
    if region_of is not None:
        region_poly = vertex_region(region_graph, region_of).clipped(box)

    out = Path(out)
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(6, 6))
        if voronoi and n > 1:
            for (x0, y0), (x1, y1) in voronoi_segments(s, box):
                ax.plot([_f(x0), _f(x1)], [_f(y0), _f(y1)], linestyle="-.", color="0.45",
                        linewidth=0.8, label="_voronoi")
        if delaunay and n > 1:
            for i, j in delaunay_graph(s).sorted_edges():
                ax.plot([_f(s[i].x), _f(s[j].x)], [_f(s[i].y), _f(s[j].y)], "-",
                        color="black", linewidth=1.0)
        if graph is not None:
            for i, j in graph.sorted_edges():
                ax.plot([_f(s[i].x), _f(s[j].x)], [_f(s[i].y), _f(s[j].y)], "-",
                        color="tab:blue", linewidth=1.4, alpha=0.8)
        if region_poly:
            xs = [_f(p.x) for p in region_poly] + [_f(region_poly[0].x)]
            ys = [_f(p.y) for p in region_poly] + [_f(region_poly[0].y)]
            ax.plot(xs, ys, "--", color="tab:green", linewidth=1.2)
        ax.scatter([_f(p.x) for p in s], [_f(p.y) for p in s], s=14, color="black", zorder=3)
        if n <= 40:
            for k, p in enumerate(s):
                ax.annotate(str(k), (_f(p.x), _f(p.y)), textcoords="offset points",
                            xytext=(3, 3), fontsize=7)
        if trace is not None:
            path = [s[k] for k in trace.path]
            ax.plot([_f(p.x) for p in path], [_f(p.y) for p in path], "-", color="tab:red",
                    linewidth=2.0, zorder=4)
            end = s[trace.terminal]
            ax.scatter([_f(end.x)], [_f(end.y)], s=60, facecolors="none",
                       edgecolors="tab:red", zorder=5)
            d = trace.destination
            ax.scatter([_f(d.x)], [_f(d.y)], marker="x", s=50, color="tab:red", zorder=5)
        ax.set_xlim(_f(box[0]), _f(box[2]))
        ax.set_ylim(_f(box[1]), _f(box[3]))
        ax.set_aspect("equal")
        if title:
            ax.set_title(title)
        fig.savefig(out, format="svg", metadata={"Date": None}, bbox_inches=None)
        plt.close(fig)
    return out


def render_summary(rows: list[dict], out: Union[str, Path], title: str = "") -> Path:
    """Per-trial delivery rate and hop counts for an experiment report."""
    out = Path(out)
    idx = [r["trial"] for r in rows]
    with plt.rc_context(RC):
        fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7, 5), sharex=True)
        ax1.plot(idx, [r["delivery_rate"] for r in rows], "o-", markersize=3, color="tab:blue")
        ax1.scatter([r["trial"] for r in rows if not r["supports"]],
                    [r["delivery_rate"] for r in rows if not r["supports"]],
                    color="tab:red", s=16, zorder=3, label="unsupported")
        ax1.set_ylabel("delivery rate")
        ax1.set_ylim(-0.05, 1.05)
        if any(not r["supports"] for r in rows):
            ax1.legend(loc="lower left", frameon=False)
        ax2.bar(idx, [r["max_hops"] for r in rows], color="0.7", label="max hops")
        ax2.plot(idx, [r["mean_hops"] for r in rows], "k.-", markersize=3, label="mean hops")
        ax2.set_ylabel("hops")
        ax2.set_xlabel("trial")
        ax2.legend(loc="upper left", frameon=False)
        if title:
            ax1.set_title(title)
        fig.tight_layout()
        fig.savefig(out, format="svg", metadata={"Date": None})
        plt.close(fig)
    return out
