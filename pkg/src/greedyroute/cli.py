"""Command line entry point: ``greedyroute <command> ...``.

Exit codes: 0 success, 1 negative verdict from ``check``, 2 bad input or
config, 3 an invariant assertion failed during ``experiment``.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .delaunay import AllCollinear, TooFewSites, triangulate
from .experiment import ConfigError, run_experiment
from .generators import GeneratorSpec, InvalidSpec, generate
from .geom import GeometryError
from .render import render_svg
from .routing import route
from .sites import parse_point
from .verifier import supports_greedy

EXIT_OK, EXIT_NEGATIVE, EXIT_CONFIG, EXIT_ASSERTION = 0, 1, 2, 3


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _need_output(args, what: str) -> str:
    if not args.output:
        raise ConfigError(f"--output PATH is required for {what}")
    return args.output


def cmd_triangulate(args) -> int:
    s = io.load_sites(args.input)
    if args.format == "svg":
        render_svg(s, _need_output(args, "SVG"), title=args.title)
        return EXIT_OK
    d = io.triangulation_to_dict(triangulate(s))
    if args.format == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "class"])
        w.writerows(d["edges"])
        _emit(buf.getvalue(), args.output)
    else:
        _emit(io.dumps(d), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    g = io.load_graph(args.input)
    v = supports_greedy(g)
    if args.format == "svg":
        trace = v.counterexample.trace if v.counterexample else None
        node = v.counterexample.node if v.counterexample else None
        render_svg(g, _need_output(args, "SVG"), region_of=node, trace=trace, title=args.title)
        sys.stdout.write(io.dumps(io.verdict_to_dict(v)))
    else:
        _emit(io.dumps(io.verdict_to_dict(v)), args.output)
    return EXIT_OK if v.supports else EXIT_NEGATIVE


def cmd_route(args) -> int:
    g = io.load_graph(args.input)
    dest = parse_point(args.dest)
    if not 0 <= args.source < len(g.sites):
        raise ConfigError(f"no site {args.source}")
    r = route(g, args.source, dest)
    if args.format == "svg":
        render_svg(g, _need_output(args, "SVG"), region_of=r.terminal, trace=r, title=args.title)
        sys.stdout.write(io.dumps(io.route_to_dict(r)))
    else:
        _emit(io.dumps(io.route_to_dict(r)), args.output)
    return EXIT_OK


def cmd_experiment(args) -> int:
    data = json.loads(Path(args.input).read_text())
    if args.seed is not None:
        data["seed"] = args.seed
    out = args.output or "experiment-out"
    report = run_experiment(data, out, figures=not args.no_figures)
    summary = report.summary()
    sys.stdout.write(io.dumps(summary))
    sys.stderr.write(f"wall-clock {report.wall_clock:.2f}s; outputs in {out}\n")
    return EXIT_OK if report.ok else EXIT_ASSERTION


def cmd_render(args) -> int:
    g = io.load_graph(args.input)
    layers = {x.strip() for x in args.layers.split(",") if x.strip()}
    unknown = layers - {"voronoi", "delaunay", "graph"}
    if unknown:
        raise ConfigError(f"unknown layers {sorted(unknown)}")
    trace = None
    if args.dest is not None:
        trace = route(g, args.source or 0, parse_point(args.dest))
    render_svg(g.sites, _need_output(args, "render"),
               voronoi="voronoi" in layers, delaunay="delaunay" in layers,
               graph=g if "graph" in layers else None,
               region_of=args.region, trace=trace, title=args.title)
    return EXIT_OK


def cmd_generate(args) -> int:
    params = json.loads(args.params) if args.params else {}
    s = generate(GeneratorSpec(args.kind, args.n, args.seed or 0, params))
    _emit(io.dumps(io.sites_to_dict(s)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="greedyroute",
                                description="Greedy-routing support checks on exact geometric graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json",), default="json"):
        sp.add_argument("--input", required=True, help="point-set, graph or config JSON")
        sp.add_argument("--output", help="output path (default: stdout)")
        sp.add_argument("--seed", type=int)
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--title")

    sp = sub.add_parser("triangulate", help="Delaunay triangulation with edge classes")
    common(sp, ("json", "csv", "svg"))
    sp.set_defaults(func=cmd_triangulate)

    sp = sub.add_parser("check", help="decide greedy-routing support; exit 1 if unsupported")
    common(sp, ("json", "svg"))
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("route", help="greedy route from a site to a point")
    common(sp, ("json", "svg"))
    sp.add_argument("--source", type=int, required=True)
    sp.add_argument("--dest", required=True, help="destination 'x,y' (exact, e.g. 3/2,0)")
    sp.set_defaults(func=cmd_route)

    sp = sub.add_parser("experiment", help="run a JSON-configured experiment")
    common(sp, ("json", "csv"))
    sp.add_argument("--no-figures", action="store_true")
    sp.set_defaults(func=cmd_experiment)

    sp = sub.add_parser("render", help="draw an SVG figure")
    common(sp, ("svg",), "svg")
    sp.add_argument("--layers", default="voronoi,delaunay",
                    help="comma list of voronoi, delaunay, graph")
    sp.add_argument("--region", type=int, help="outline this site's vertex region")
    sp.add_argument("--source", type=int)
    sp.add_argument("--dest", help="route from --source to this point and draw the trace")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("generate", help="write a generated point set")
    sp.add_argument("--kind", required=True,
                    help="uniform | cocircular | lattice | clustered")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--params", help="JSON object of generator parameters")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ConfigError, io.FormatError, InvalidSpec, GeometryError, TooFewSites, AllCollinear,
            OSError, json.JSONDecodeError, ValueError, IndexError) as exc:
        sys.stderr.write(f"greedyroute: error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
