import json
import subprocess
import sys

import pytest

from graphsampling import load_edge_list
from graphsampling.cli import main
from graphsampling.io import read_sample


@pytest.fixture
def edge_file(tmp_path):
    p = tmp_path / "toy.txt"
    assert main(["gen", "erdos_renyi", "120", "--p", "0.06", "--seed", "3", "-o", str(p)]) == 0
    return p


def test_gen_stdout(capsys):
    assert main(["gen", "complete", "4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 6 and out[0] == "0 1"


def test_sample_command(edge_file, tmp_path):
    out = tmp_path / "s.txt"
    assert main(["sample", str(edge_file), "--method", "tiwes", "--phi", "0.2",
                 "--seed", "4", "-o", str(out)]) == 0
    with open(out) as fh:
        rec = read_sample(fh)
    g = load_edge_list(edge_file)
    assert rec.method == "TIWES" and rec.seed == 4
    assert len(rec.nodes) >= 0.2 * g.node_count


def test_metrics_command(edge_file, capsys):
    assert main(["metrics", str(edge_file), "--sources", "exact"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data) == {"nodes", "edges", "average_degree", "average_clustering",
                         "average_path_length", "path_length_mode"}
    assert data["path_length_mode"] == "exact"
    assert data["average_degree"] == pytest.approx(2 * data["edges"] / data["nodes"])


def test_point_stats_config_and_override(edge_file, tmp_path, capsys):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text(f"dataset_path = {edge_file}\nmethods = ES,TIES\nfractions = 0.1,0.2\n"
                   f"repetitions = 2\noutput_dir = {tmp_path / 'from_file'}\n")
    out = tmp_path / "flags"
    assert main(["point-stats", "--config", str(cfg), "--repetitions", "3", "-o", str(out)]) == 0
    meta = json.loads((out / "point_stats_meta.json").read_text())
    assert meta["repetitions"] == 3
    assert not (tmp_path / "from_file").exists()
    lines = (out / "point_stats.csv").read_text().splitlines()
    assert lines[0] == "dataset,method,property,phi,mean_ratio,ci_low,ci_high"
    assert len(lines) == 1 + 2 * 3 * 2


def test_point_stats_byte_identical(edge_file, tmp_path):
    for d in ("a", "b"):
        assert main(["point-stats", str(edge_file), "--fractions", "0.1", "--repetitions", "2",
                     "--base-seed", "5", "-o", str(tmp_path / d)]) == 0
    for name in ("point_stats.csv", "rmse.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_distributions_json(edge_file, tmp_path):
    assert main(["distributions", str(edge_file), "--methods", "WES", "--dist-phi", "0.3",
                 "--repetitions", "2", "--output-format", "json", "-o", str(tmp_path)]) == 0
    data = json.loads((tmp_path / "distributions.json").read_text())
    assert [r["method"] for r in data["ks"]] == ["WES"] * 3


def test_exit_codes(tmp_path, edge_file, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\nfoo bar\n")
    assert main(["metrics", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["metrics", str(tmp_path / "missing.txt")]) == 2
    assert main(["point-stats", str(edge_file), "--fractions", "0.001"]) == 1
    assert main(["point-stats"]) == 1
    with pytest.raises(SystemExit) as info:
        main(["sample", str(edge_file), "--method", "BFS"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 1


def test_module_entry_point(edge_file):
    res = subprocess.run([sys.executable, "-m", "graphsampling.cli", "gen", "path", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == "0 1\n1 2\n"
