from __future__ import annotations

import json

import pytest

from sigdim.cli import main
from conftest import C3, K2, K13


@pytest.fixture
def k2_file(tmp_path):
    path = tmp_path / "k2.txt"
    path.write_text(K2)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_embed_k2(tmp_path, capsys, k2_file):
    out = tmp_path / "k2.json"
    code, stdout, _ = run(capsys, "embed", k2_file, "-o", out)
    assert code == 0
    assert "d=2" in stdout and "verdict=pass" in stdout
    data = json.loads(out.read_text())
    assert data["coords"] == [[-24, 0], [0, -24]]
    assert data["r"] == 24 and data["delta"] == 2


def test_embed_output_stable(tmp_path, capsys, k2_file):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "embed", k2_file, "-o", out1)
    run(capsys, "embed", k2_file, "-o", out2)
    assert out1.read_bytes() == out2.read_bytes()


def test_embed_isolated_vertex(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n0 1\n")
    code, _, stderr = run(capsys, "embed", path)
    assert code == 1
    assert "isolated vertex 2" in stderr


def test_embed_c3(tmp_path, capsys):
    path = tmp_path / "c3.txt"
    path.write_text(C3)
    code, stdout, _ = run(capsys, "embed", path, "-o", tmp_path / "c3.json")
    assert code == 0
    assert "d=2" in stdout


def test_sig_reads_embedding_json(tmp_path, capsys, k2_file):
    out = tmp_path / "k2.json"
    run(capsys, "embed", k2_file, "-o", out)
    code, stdout, _ = run(capsys, "sig", out)
    assert code == 0
    assert stdout == "2 1\n0 1\n"


def test_sig_reads_bare_coords(tmp_path, capsys):
    path = tmp_path / "pts.json"
    path.write_text(json.dumps({"coords": [[0], [1], [10]]}))
    code, stdout, _ = run(capsys, "sig", path)
    assert code == 0
    assert stdout == "3 2\n0 1\n1 2\n"


def test_verify_roundtrip(tmp_path, capsys, k2_file):
    out = tmp_path / "k2.json"
    run(capsys, "embed", k2_file, "-o", out)
    code, stdout, _ = run(capsys, "verify", k2_file, out)
    assert code == 0
    assert json.loads(stdout)["verdict"] == "pass"


def test_verify_perturbed(tmp_path, capsys, k2_file):
    out = tmp_path / "k2.json"
    run(capsys, "embed", k2_file, "-o", out)
    data = json.loads(out.read_text())
    data["coords"][0][1] += 1
    out.write_text(json.dumps(data))
    code, stdout, _ = run(capsys, "verify", k2_file, out)
    assert code == 2
    report = json.loads(stdout)
    assert report["verdict"] == "fail"
    assert not report["sig_equal"] or not report["radius_agree"]
    assert report["diagnostics"]


def test_oracle(tmp_path, capsys):
    path = tmp_path / "k13.txt"
    path.write_text(K13)
    code, stdout, _ = run(capsys, "oracle", path, "-o", tmp_path / "o.json")
    assert code == 0
    assert "roundtrip=ok" in stdout
    data = json.loads((tmp_path / "o.json").read_text())
    assert data["d"] == 4
    assert data["coords"][0] == [2, 1, 1, 1]


def test_fuzz_deterministic_and_clean(tmp_path, capsys):
    args = ["fuzz", "--n-min", "2", "--n-max", "2", "--p", "1/2",
            "--seed", "1", "--count", "10",
            "--bundle-dir", tmp_path / "bundles", "-o", tmp_path / "s1.json"]
    code, _, _ = run(capsys, *args)
    assert code == 0
    args[-1] = tmp_path / "s2.json"
    run(capsys, *args)
    s1 = json.loads((tmp_path / "s1.json").read_text())
    s2 = json.loads((tmp_path / "s2.json").read_text())
    assert s1 == s2
    assert s1["passed"] == 10 and s1["failed"] == 0


def test_fuzz_bundles_reproduce(tmp_path, capsys):
    # Known construction-gap seed: the bundle must reproduce via embed.
    code, stdout, _ = run(
        capsys, "fuzz", "--n-min", "18", "--n-max", "18", "--p", "1/10",
        "--seed", "2960", "--count", "1",
        "--bundle-dir", tmp_path / "bundles", "-o", tmp_path / "s.json",
    )
    assert code == 0
    summary = json.loads((tmp_path / "s.json").read_text())
    assert summary["failed"] == 1
    bundle = json.loads(open(summary["failures"][0]["bundle"]).read())
    graph_file = tmp_path / "bad.txt"
    graph_file.write_text(bundle["graph"])
    code, _, stderr = run(capsys, "embed", graph_file, "-o", tmp_path / "bad.json")
    assert code == 2
    rerun = json.loads(stderr[stderr.index("{"):])
    assert rerun["inequality_failures"] == bundle["failure"]["report"]["inequality_failures"]


def test_exhaustive_n3(tmp_path, capsys):
    code, stdout, _ = run(capsys, "exhaustive", "--max-n", "3",
                          "-o", tmp_path / "e.json")
    assert code == 0
    data = json.loads((tmp_path / "e.json").read_text())
    assert data["all_pass"]
    totals = {row["n"]: row for row in data["per_n"]}
    assert totals[2]["graphs"] == 1 and totals[3]["graphs"] == 4
    assert totals[3]["oracle_pass"] == 4 and totals[3]["pipeline_pass"] == 4


def test_exhaustive_range(capsys):
    code, _, _ = run(capsys, "exhaustive", "--max-n", "9")
    assert code == 1
