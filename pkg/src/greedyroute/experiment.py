"""Config-driven experiments: generate, build a substrate, verify, route.

A config is a JSON object::

    {
      "name": "sufficiency",
      "seed": 1,
      "instances": 100,
      "n": [5, 100],
      "generator": {"kind": "uniform", "params": {"bound": 1000000}},
      "substrate": "delaunay",
      "substrate_params": {},
      "destinations_per_site": 10,
      "cross_validate_trials": 0,
      "expect": {"supports": true}
    }

Trial ``t`` uses seed ``seed + t`` for both the site set and its destinations.
Substrates: ``delaunay``, ``delaunay-minus-random-edge``,
``delaunay-plus-random-edges`` (``extra``), ``knn`` (``k``), ``unit-disk``
(``r``), ``complete``.
"""

from __future__ import annotations

import csv
import io as _io
import json
import logging
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Optional, Union

from .delaunay import delaunay_graph
from .generators import GeneratorSpec, InvalidSpec, KnnRewire, UnitDisk, generate, perturb
from .io import dumps, graph_to_dict, verdict_to_dict
from .render import render_summary
from .routing import nearest_site
from .sites import GeometricGraph, SiteSet
from .verifier import cross_validate, random_destinations, route_battery, supports_greedy

log = logging.getLogger(__name__)

SUBSTRATES = ("delaunay", "delaunay-minus-random-edge", "delaunay-plus-random-edges",
              "knn", "unit-disk", "complete")

CSV_FIELDS = ["trial", "seed", "n", "substrate", "edges", "supports", "method_edge_test",
              "method_region_test", "missing_edges", "delivery_rate", "mean_hops", "max_hops",
              "counterexample_stuck", "ok"]


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    name: str = "experiment"
    seed: int = 0
    instances: int = 1
    n: tuple[int, int] = (10, 10)
    generator: dict[str, Any] = field(default_factory=lambda: {"kind": "uniform"})
    substrate: str = "delaunay"
    substrate_params: dict[str, Any] = field(default_factory=dict)
    destinations_per_site: int = 10
    cross_validate_trials: int = 0
    expect: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        if not isinstance(d, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**d)
        n = cfg.n
        if isinstance(n, int):
            n = (n, n)
        try:
            lo, hi = (int(v) for v in n)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"n must be an int or [min, max]: {exc}") from exc
        if not 1 <= lo <= hi:
            raise ConfigError("need 1 <= min n <= max n")
        cfg.n = (lo, hi)
        if cfg.substrate not in SUBSTRATES:
            raise ConfigError(f"substrate must be one of {SUBSTRATES}")
        if cfg.instances < 1:
            raise ConfigError("instances must be >= 1")
        if not isinstance(cfg.generator, dict) or "kind" not in cfg.generator:
            raise ConfigError("generator needs a 'kind'")
        return cfg

    @classmethod
    def load(cls, path: Union[str, Path]) -> "ExperimentConfig":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        return cls.from_dict(data)


def build_substrate(s: SiteSet, kind: str, params: dict, rng: random.Random,
                    dg: Optional[GeometricGraph] = None) -> GeometricGraph:
    dg = dg if dg is not None else delaunay_graph(s)
    if kind == "delaunay":
        return dg
    if kind == "delaunay-minus-random-edge":
        if not dg.edges:
            raise ConfigError("site set has no Delaunay edge to drop")
        return dg.without_edge(*rng.choice(dg.sorted_edges()))
    if kind == "delaunay-plus-random-edges":
        pool = [e for e in combinations(range(len(s)), 2) if e not in dg.edges]
        extra = min(len(pool), int(params.get("extra", 3)))
        return dg.with_edges(rng.sample(pool, extra))
    if kind == "knn":
        return perturb(dg, KnnRewire(int(params.get("k", 3))))
    if kind == "unit-disk":
        if "r" not in params:
            raise ConfigError("unit-disk substrate needs substrate_params.r")
        return perturb(dg, UnitDisk(str(params["r"])))
    if kind == "complete":
        return GeometricGraph.complete(s)
    raise ConfigError(f"unknown substrate {kind!r}")


@dataclass
class ExperimentReport:
    config: dict[str, Any]
    trials: list[dict[str, Any]]
    failures: list[dict[str, Any]]
    wall_clock: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict[str, Any]:
        rows = self.trials
        routes = sum(r["routes"] for r in rows)
        delivered = sum(r["delivered"] for r in rows)
        return {
            "trials": len(rows),
            "support_rate": sum(r["supports"] for r in rows) / len(rows),
            "agreement_rate": sum(r["method_edge_test"] == r["method_region_test"]
                                  for r in rows) / len(rows),
            "delivery_rate": delivered / routes if routes else 1.0,
            "mean_hops": sum(r["mean_hops"] * r["routes"] for r in rows) / routes if routes else 0.0,
            "max_hops": max(r["max_hops"] for r in rows),
            "counterexamples_stuck": sum(bool(r["counterexample_stuck"]) for r in rows),
            "failures": len(self.failures),
        }

    def to_json(self) -> str:
        """Everything except wall-clock, so reruns compare byte for byte."""
        return dumps({"config": self.config, "summary": self.summary(),
                      "trials": self.trials, "failures": self.failures})

    def to_csv(self) -> str:
        buf = _io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in self.trials:
            w.writerow({k: (_fmt(r[k])) for k in CSV_FIELDS})
        return buf.getvalue()


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.6f}"
    if isinstance(v, list):
        return ";".join(f"{a}-{b}" for a, b in v)
    return v


def run_trial(cfg: ExperimentConfig, t: int) -> tuple[dict[str, Any], Optional[dict[str, Any]]]:
    seed = cfg.seed + t
    rng = random.Random(seed)
    n = rng.randint(*cfg.n)
    gen = cfg.generator
    try:
        spec = GeneratorSpec(gen["kind"], n, seed, dict(gen.get("params", {})))
        s = generate(spec)
    except InvalidSpec as exc:
        raise ConfigError(str(exc)) from exc
    dg = delaunay_graph(s)
    g = build_substrate(s, cfg.substrate, cfg.substrate_params, rng, dg)
    v = supports_greedy(g, dg)
    battery = list(s) + random_destinations(s, cfg.destinations_per_site * n, rng)
    res = route_battery(g, battery)

    problems = []
    if not v.methods_agree:
        problems.append("edge test and region test disagree")
    if v.supports and res.delivered != res.routes:
        problems.append("supported graph failed to deliver")
    cex_stuck = None
    if not v.supports:
        cex = v.counterexample
        cex_stuck = (cex is not None and not cex.trace.delivered
                     and cex.trace.terminal not in nearest_site(s, cex.destination))
        if not cex_stuck:
            problems.append("unsupported graph without a stuck counterexample")
    if "supports" in cfg.expect and v.supports != bool(cfg.expect["supports"]):
        problems.append(f"expected supports={cfg.expect['supports']}")
    if cfg.cross_validate_trials > 0:
        cv = cross_validate(s, cfg.cross_validate_trials, seed, cfg.destinations_per_site)
        if not cv.ok:
            problems.append("cross-validation failed")

    row = {
        "trial": t, "seed": seed, "n": n, "substrate": cfg.substrate,
        "edges": len(g.edges),
        "supports": v.supports,
        "method_edge_test": v.method_edge_test,
        "method_region_test": v.method_region_test,
        "missing_edges": [list(e) for e in v.missing_edges],
        "routes": res.routes, "delivered": res.delivered,
        "delivery_rate": res.delivery_rate, "mean_hops": res.mean_hops,
        "max_hops": res.max_hops,
        "counterexample_stuck": cex_stuck,
        "verdict": verdict_to_dict(v),
        "ok": not problems,
    }
    failure = None
    if problems:
        failure = {"trial": t, "seed": seed, "problems": problems, "instance": graph_to_dict(g)}
    return row, failure


def run_experiment(cfg: Union[ExperimentConfig, dict, str, Path],
                   out_dir: Optional[Union[str, Path]] = None,
                   figures: bool = True) -> ExperimentReport:
    """Run every trial; when ``out_dir`` is given write report.json, summary.csv and summary.svg.

    Failing instances are also written to ``out_dir/failures/`` for replay.
    """
    if isinstance(cfg, (str, Path)):
        cfg = ExperimentConfig.load(cfg)
    elif isinstance(cfg, dict):
        cfg = ExperimentConfig.from_dict(cfg)
    start = time.perf_counter()
    rows, failures = [], []
    for t in range(cfg.instances):
        row, failure = run_trial(cfg, t)
        rows.append(row)
        if failure:
            log.warning("trial %d (seed %d) failed: %s", t, failure["seed"], failure["problems"])
            failures.append(failure)
    cfg_dict = {k: getattr(cfg, k) for k in cfg.__dataclass_fields__}
    cfg_dict["n"] = list(cfg.n)
    report = ExperimentReport(cfg_dict, rows, failures, time.perf_counter() - start)
    log.info("%s: %d trials in %.2fs", cfg.name, len(rows), report.wall_clock)
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(report.to_json())
        (out / "summary.csv").write_text(report.to_csv())
        if figures:
            render_summary(rows, out / "summary.svg", title=cfg.name)
        if failures:
            fdir = out / "failures"
            fdir.mkdir(exist_ok=True)
            for f in failures:
                (fdir / f"trial_{f['trial']:04d}.json").write_text(dumps(f["instance"]))
    return report
