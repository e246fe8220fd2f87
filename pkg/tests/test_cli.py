"""Command line interface: JSON output and exit codes."""

from __future__ import annotations

import json

import pytest

from beltdec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_usage_error_exit_code(capsys):
    assert main(["no-such-command"]) == 2
    capsys.readouterr()
    assert main(["belts", "@cube"]) == 2  # missing --k
    capsys.readouterr()


def test_validate_catalog(capsys):
    code, data = run_json(capsys, "validate", "@cube")
    assert code == 0
    assert data == {"ok": True, "m": 6, "vertices": 8, "edges": 12, "schema": 1}


def test_validate_file(tmp_path, capsys):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"m": 4, "vertices": [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]}))
    code, data = run_json(capsys, "validate", str(f))
    assert code == 0 and data["m"] == 4
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"m": 4, "vertices": [[1, 2, 3]]}))
    code, data = run_json(capsys, "validate", str(bad))
    assert code == 1 and data["ok"] is False


def test_info(capsys):
    code, data = run_json(capsys, "info", "@dodecahedron")
    assert code == 0
    assert data["class"] == "pogorelov"
    code, data = run_json(capsys, "info", "@prism:6")
    assert data["class"] == "prism" and data["prism"]["k"] == 6


def test_belts(capsys):
    code, data = run_json(capsys, "belts", "@cube", "--k", "4")
    assert code == 0
    assert data["count"] == 3
    assert all(b["trivial"] for b in data["belts"])


def test_catalog(capsys):
    code, data = run_json(capsys, "catalog")
    assert code == 0 and "simplex" in data["names"]
    code, data = run_json(capsys, "catalog", "associahedron3")
    assert code == 0 and data["m"] == 9
    code, data = run_json(capsys, "catalog", "nonsense")
    assert code == 1


def test_decompose_prime(capsys):
    code, data = run_json(capsys, "decompose-prime", "@prism:3")
    assert code == 0
    assert data["belts"] == [[3, 4, 5]]
    assert [l["label"] for l in data["leaves"]] == ["simplex", "simplex"]
    code, out = run(capsys, "decompose-prime", "@prism:3", "--dot")
    assert code == 0 and out.startswith("graph prime {")


def test_analyze_identity(capsys):
    code, data = run_json(capsys, "analyze", "@cube", "@identity")
    assert code == 0
    assert data["orientable"] is True
    assert data["geometry"] == "R3"
    assert data["prime"]["is_sphere"] is False


def test_analyze_nonorientable_exits_1(tmp_path, capsys):
    f = tmp_path / "c.json"
    f.write_text(json.dumps({"r": 3, "cols": [4, 4, 1, 2, 1, 3]}))
    code, data = run_json(capsys, "analyze", "@cube", str(f))
    assert code == 1
    assert data["orientable"] is False
    assert "double cover" in data["hint"]


def test_analyze_search_small_cover(capsys):
    code, data = run_json(capsys, "analyze", "@cube", "@search-small-cover")
    assert code in (0, 1)
    assert data["schema"] == 1


def test_decompose_jsj(capsys):
    code, data = run_json(capsys, "decompose-jsj", "@associahedron3", "@identity")
    assert code == 0
    assert data["canonical_belts"] == []
    assert data["pieces"][0]["multiplicity"] == "8"
    assert data["pieces"][0]["boundary_per_copy"] == "12"
    assert all(t["count"] == "16" for t in data["tori"])
    code, out = run(capsys, "decompose-jsj", "@associahedron3", "@identity", "--dot")
    assert code == 0 and out.startswith("graph jsj {")


def test_coloring_bit_matrix_input(tmp_path, capsys):
    cols = [[0, 0, 1], [0, 0, 1], [1, 0, 0], [0, 1, 0], [1, 0, 0], [0, 1, 0]]
    f = tmp_path / "c.json"
    f.write_text(json.dumps({"r": 3, "columns": cols}))
    code, data = run_json(capsys, "analyze", "@cube", str(f))
    assert code == 0
    assert data["orientable"] is True
    assert data["rank"] == 3


def test_enumerate_colorings(capsys):
    code, data = run_json(capsys, "enumerate-colorings", "@simplex", "--rank", "3",
                          "--check-maximal")
    assert code == 0
    assert data["count"] == 1
    assert data["colorings"][0]["maximal"] is True
    code, data = run_json(capsys, "enumerate-colorings", "@cube", "--rank", "4",
                          "--limit", "3")
    assert data["count"] == 3


def test_oracle(capsys):
    code, data = run_json(capsys, "oracle", "@simplex", "@identity", "--check")
    assert code == 0
    assert data["euler"] == 0 and data["closed"] and data["orientable"]
    assert data["cells"] == ["8", "24", "32", "16"]
