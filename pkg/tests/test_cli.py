"""Command-line subcommands and exit codes."""

import json

import pytest

from choosability_verifier.cli import EXIT_OK, EXIT_USAGE, build_parser, main, to_request
from choosability_verifier.graph import load_graph

from .conftest import graph_path


def test_faces(capsys):
    assert main(["faces", graph_path("tetrahedron")]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "V=4 E=6 F=4 V-E+F=2"


def test_faces_json(capsys):
    assert main(["faces", graph_path("cube"), "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["eulerCharacteristic"] == 2
    assert [f["degree"] for f in report["faces"]] == [4] * 6


def test_classify(capsys):
    assert main(["classify", graph_path("octahedron"), "1", "2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2 as a neighbor of 1: Weak, None"


def test_classify_non_edge_is_usage_error(capsys):
    assert main(["classify", graph_path("octahedron"), "1", "6"]) == EXIT_USAGE
    assert "not an edge" in capsys.readouterr().err


def test_match_one_config(capsys):
    assert main(["match", graph_path("cube"), "--config", "C2"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "12 matches"


def test_discharge_json(capsys):
    assert main(["discharge", graph_path("icosahedron"), "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["initialTotal"] == report["finalTotal"] == "-12"
    assert report["configsFound"] == {"C1": 30}
    assert len(report["negatives"]) == 12


def test_discharge_trace_goes_to_stdout(capsys):
    assert main(["discharge", graph_path("cube"), "--trace"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "R1: f0 -> v" in out
    assert "initial total -12, final total -12" in out


def test_discharge_disconnected(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text("1: 2\n2: 1\n3: 4\n4: 3\n", encoding="utf-8")
    assert main(["discharge", str(path)]) == EXIT_USAGE
    assert main(["discharge", str(path), "--per-component"]) == EXIT_OK


def test_explain(capsys):
    assert main(["explain", graph_path("cube"), "f:0"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("f0: face, d=4")
    assert out[1] == "charge 2 -> -2"


def test_verify_lemma(capsys):
    assert main(["verify-lemma", "star3"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("star3: PASS")


def test_verify_config_exhaustive(capsys):
    assert main(["verify-config", "C8", "--tier", "exhaustive", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "PASS"
    assert report["claims"][0]["claim"] == "C8"


def test_verify_config_sampled_config_under_exhaustive_tier(capsys):
    # sampled configurations produce nothing under the exhaustive tier
    assert main(["verify-config", "C5", "--tier", "exhaustive"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "overall: PASS"


def test_gen_writes_a_loadable_file(tmp_path):
    out = tmp_path / "g.txt"
    assert main(["gen", "--n", "20", "--seed", "4", "-o", str(out)]) == EXIT_OK
    g = load_graph(str(out))
    assert len(g) == 20
    assert g.max_degree <= 8


def test_gen_rejects_bad_parameters(capsys):
    assert main(["gen", "--n", "2"]) == EXIT_USAGE


def test_missing_file(tmp_path, capsys):
    assert main(["faces", str(tmp_path / "nope.txt")]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("error:")


def test_malformed_graph(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("1: 2\n2:\n", encoding="utf-8")
    assert main(["faces", str(path)]) == EXIT_USAGE
    assert "line 1" in capsys.readouterr().err


def test_unknown_config_is_rejected_by_argparse():
    with pytest.raises(SystemExit) as err:
        main(["match", graph_path("cube"), "--config", "C12"])
    assert err.value.code == 2


def test_to_request_keeps_options():
    args = build_parser().parse_args(["run-all", "--tier", "sampled", "--samples", "10"])
    req = to_request(args)
    assert req.subcommand == "run-all"
    assert req.input_path is None
    assert req.options["samples"] == 10
    assert req.options["tier"].value == "sampled"
