from __future__ import annotations

import json

import pytest

from nasharcs.cli import main
from nasharcs.generators import an_graph, e6_graph
from nasharcs.graph import serialize_graph


@pytest.fixture()
def a3_file(tmp_path):
    path = tmp_path / "a3.json"
    path.write_text(json.dumps(serialize_graph(an_graph(3))))
    return str(path)


@pytest.fixture()
def e6_file(tmp_path):
    path = tmp_path / "e6.json"
    path.write_text(json.dumps(serialize_graph(e6_graph())))
    return str(path)


def run_json(argv, tmp_path):
    out = tmp_path / "out.json"
    code = main(argv + ["--out", str(out)])
    doc = json.loads(out.read_text()) if out.exists() else None
    return code, doc


def test_order_a3(a3_file, tmp_path):
    code, doc = run_json(["order", a3_file], tmp_path)
    assert code == 0
    assert len(doc["non_inclusions"]) == 6
    assert all(p["verdict"] == "incomparable" for p in doc["pairs"])


def test_order_dot_output(a3_file, tmp_path):
    dot = tmp_path / "h.dot"
    code = main(["order", a3_file, "--dot", str(dot), "--out", str(tmp_path / "o.json")])
    assert code == 0
    assert dot.read_text().startswith("digraph")


def test_certify_minimal_e6_rejected(e6_file, tmp_path, capsys):
    code, _ = run_json(["certify-minimal", e6_file], tmp_path)
    assert code == 2
    assert "NotMinimal" in capsys.readouterr().err


def test_certify_minimal_a3(a3_file, tmp_path):
    code, doc = run_json(["certify-minimal", a3_file], tmp_path)
    assert code == 0
    assert doc["open_pairs"] == []
    assert len(doc["pairs"]) == 6


def test_an_order(tmp_path):
    code, doc = run_json(["an-order", "--n", "4"], tmp_path)
    assert code == 0
    assert len(doc["pairs"]) == 12
    assert all(p["verdict"] == "incomparable" for p in doc["pairs"])


def test_analyze_report_flags(a3_file, tmp_path):
    code, doc = run_json(["analyze", a3_file], tmp_path)
    assert code == 0
    assert doc["negative_definite"] and doc["rational"] and doc["minimal"]
    assert doc["an"] == 3
    assert doc["fundamental_cycle"] == [1, 1, 1]
    assert doc["ray_basis"][0] == ["3/4", "1/2", "1/4"]
    assert "certificate" in doc


def test_analyze_roundtrip(a3_file, tmp_path):
    code, doc = run_json(["analyze", a3_file], tmp_path)
    assert code == 0
    embedded = tmp_path / "embedded.json"
    embedded.write_text(json.dumps(doc["graph"]))
    code2, doc2 = run_json(["analyze", str(embedded)], tmp_path)
    assert code2 == 0
    assert doc == doc2


def test_analyze_e6_not_minimal(e6_file, tmp_path):
    code, doc = run_json(["analyze", e6_file], tmp_path)
    assert code == 0
    assert doc["minimal"] is False
    assert doc["fundamental_cycle"] == [1, 2, 3, 2, 1, 2]
    assert "certificate" not in doc


def test_decompose(tmp_path):
    g = tmp_path / "b.json"
    g.write_text(
        json.dumps(
            {
                "vertices": [
                    {"id": "v1", "w": 3},
                    {"id": "v2", "w": 2},
                    {"id": "v3", "w": 2},
                ],
                "edges": [["v1", "v2"], ["v2", "v3"]],
            }
        )
    )
    dot = tmp_path / "sg.dot"
    out = tmp_path / "d.json"
    code = main(["decompose", str(g), "--x", "v1", "--y", "v3", "--dot", str(dot), "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["contracts_to_empty"] is True
    assert doc["m"] == 3
    assert "lightgrey" in dot.read_text()


def test_an_arcs(tmp_path):
    code, doc = run_json(
        ["an-arcs", "--n", "3", "--family", "2", "--samples", "5", "--seed", "9"],
        tmp_path,
    )
    assert code == 0
    assert doc["orders_match"] is True
    assert all(r["orders"] == {"x": 2, "y": 2, "z": 1} for r in doc["arcs"])
    assert doc["header"]["seed"] == 9


def test_an_arcs_separation(tmp_path):
    code, doc = run_json(
        [
            "an-arcs", "--n", "3", "--family", "1", "--against", "3",
            "--samples", "10", "--seed", "2",
        ],
        tmp_path,
    )
    assert code == 0
    assert doc["separation"]["passed"] is True


def test_missing_file_is_usage_error(tmp_path, capsys):
    code = main(["order", str(tmp_path / "nope.json")])
    assert code == 2


def test_malformed_graph_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [{"id": "a", "w": 0}], "edges": []}')
    assert main(["order", str(bad)]) == 2
    assert "BadWeight" in capsys.readouterr().err


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 2
