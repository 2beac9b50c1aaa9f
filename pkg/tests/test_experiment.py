import csv
import json

import pytest

from greedyroute import io
from greedyroute.experiment import ConfigError, ExperimentConfig, run_experiment


def test_config_validation():
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict({"n": [10, 5]})
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict({"bogus": 1})
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict({"substrate": "ring"})
    assert ExperimentConfig.from_dict({"n": 7}).n == (7, 7)


def test_unit_disk_needs_radius():
    with pytest.raises(ConfigError):
        run_experiment({"substrate": "unit-disk", "n": 5})


def test_delaunay_minus_edge(tmp_path):
    rep = run_experiment({"instances": 6, "n": [5, 15], "seed": 3,
                          "substrate": "delaunay-minus-random-edge",
                          "destinations_per_site": 2}, tmp_path)
    s = rep.summary()
    assert rep.ok and s["support_rate"] == 0.0 and s["counterexamples_stuck"] == 6
    rows = list(csv.DictReader((tmp_path / "summary.csv").open()))
    assert [r["supports"] for r in rows] == ["False"] * 6
    assert {"seed", "n", "substrate", "supports", "delivery_rate", "max_hops"} <= set(rows[0])


def test_knn_mixed(tmp_path):
    rep = run_experiment({"instances": 8, "n": [6, 20], "seed": 1, "substrate": "knn",
                          "substrate_params": {"k": 3}, "destinations_per_site": 2})
    s = rep.summary()
    assert rep.ok and s["agreement_rate"] == 1.0


def test_failing_instance_replays(tmp_path):
    rep = run_experiment({"instances": 1, "n": 8, "substrate": "delaunay-minus-random-edge",
                          "expect": {"supports": True}, "destinations_per_site": 1}, tmp_path)
    assert not rep.ok
    g = io.load_graph(tmp_path / "failures" / "trial_0000.json")
    assert len(g.sites) == 8
    data = json.loads((tmp_path / "report.json").read_text())
    assert data["failures"][0]["problems"] == ["expected supports=True"]


def test_report_excludes_wall_clock(tmp_path):
    rep = run_experiment({"instances": 2, "n": 6, "destinations_per_site": 1}, tmp_path)
    assert rep.wall_clock > 0
    assert "wall" not in (tmp_path / "report.json").read_text()


def test_other_generators_and_substrates():
    for gen, sub, params in (({"kind": "lattice", "params": {"rows": 3, "cols": 4}}, "complete", {}),
                             ({"kind": "clustered", "params": {"bound": 500}}, "unit-disk", {"r": 200}),
                             ({"kind": "cocircular"}, "delaunay-plus-random-edges", {"extra": 4})):
        rep = run_experiment({"instances": 2, "n": 12, "generator": gen, "substrate": sub,
                              "substrate_params": params, "destinations_per_site": 1,
                              "cross_validate_trials": 2})
        assert rep.ok, (gen, sub, rep.failures)
