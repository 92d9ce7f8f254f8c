import json

import pytest

from symbreak.cli import main
from symbreak.graph_core import (
    complete_graph,
    cycle_graph,
    parse_graph6,
    path_graph,
    to_graph6,
)
from symbreak.transforms import subdivision_graph


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_transform_subdivision(capsys):
    s = to_graph6(cycle_graph(4))
    code, out, _ = run_cli(capsys, "transform", "--op", "subdivision", "--graph6", s)
    assert code == 0
    assert out.strip() == to_graph6(subdivision_graph(cycle_graph(4)))


def test_transform_labels_json(capsys):
    s = to_graph6(path_graph(3))
    code, out, _ = run_cli(capsys, "transform", "--op", "middle", "--graph6", s, "--labels")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    labels = json.loads(lines[1])
    assert labels["0"] == {"kind": "original", "source": [0]}
    assert labels["3"] == {"kind": "edge_vertex", "source": [0, 1]}


def test_transform_bad_graph6_is_input_error(capsys):
    code, _, err = run_cli(capsys, "transform", "--op", "line", "--graph6", "!!bad")
    assert code == 2
    assert "error:" in err


def test_aut_order_and_list(capsys):
    s = to_graph6(cycle_graph(4))
    code, out, _ = run_cli(capsys, "aut", "--graph6", s)
    assert code == 0
    assert out.strip() == "8"
    code, out, _ = run_cli(capsys, "aut", "--graph6", s, "--list")
    lines = out.strip().splitlines()
    assert lines[0] == "8" and len(lines) == 9
    assert lines[1].split() == ["0", "1", "2", "3"]


def test_invariant_json(capsys):
    s = to_graph6(cycle_graph(6))
    code, out, _ = run_cli(capsys, "invariant", "--which", "chi,D,chiD", "--graph6", s, "--witness")
    assert code == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    assert [l["kind"] for l in lines] == ["chi", "D", "chiD"]
    assert [l["value"] for l in lines] == [2, 2, 4]
    assert all(l["certified"] for l in lines)
    assert lines[1]["witness"]["vertices"] == {
        "0": 1, "1": 1, "2": 2, "3": 1, "4": 2, "5": 2,
    }


def test_invariant_edge_witness(capsys):
    s = to_graph6(path_graph(3))
    code, out, _ = run_cli(capsys, "invariant", "--which", "Dp", "--graph6", s, "--witness")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 2
    assert set(payload["witness"]["edges"]) == {"0,1", "1,2"}


def test_invariant_unknown_kind(capsys):
    code, _, err = run_cli(capsys, "invariant", "--which", "zeta", "--graph6", "Bw")
    assert code == 2 and "unknown invariant" in err


def test_invariant_reads_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(to_graph6(complete_graph(4)) + "\n"))
    code, out, _ = run_cli(capsys, "invariant", "--which", "chi")
    assert code == 0 and json.loads(out)["value"] == 4


def test_construct_exceptional(capsys):
    code, out, _ = run_cli(capsys, "construct", "--which", "exceptional", "--graph", "K3,3")
    assert code == 0
    payload = json.loads(out)
    assert payload["palette"] == 5
    assert payload["certification"] == {
        "proper": True, "distinguishing": True, "used_fallback": False,
    }
    assert payload["coloring"]["edges"]["0,6"] == 1


def test_construct_thm47_by_graph6(capsys):
    s = to_graph6(path_graph(4))
    code, out, _ = run_cli(capsys, "construct", "--which", "thm47", "--graph", s)
    assert code == 0
    payload = json.loads(out)
    assert payload["palette"] == 3
    assert payload["certification"]["proper"] and payload["certification"]["distinguishing"]


def test_construct_lift(capsys):
    code, out, _ = run_cli(capsys, "construct", "--which", "lift", "--graph", "K1,4")
    assert code == 0
    payload = json.loads(out)
    assert payload["palette"] == 2
    assert payload["certification"]["distinguishing"]


def test_construct_contract_violation_is_input_error(capsys):
    code, _, err = run_cli(capsys, "construct", "--which", "exceptional", "--graph", "P4")
    assert code == 2 and "error:" in err


def test_gen_and_verify_roundtrip(tmp_path, capsys):
    corpus_file = tmp_path / "n4.g6"
    code, _, err = run_cli(
        capsys, "gen", "--max-order", "4", "--min-order", "3", "--connected",
        "--out", str(corpus_file),
    )
    assert code == 0
    lines = [l for l in corpus_file.read_text().splitlines() if l and not l.startswith(">>")]
    assert len(lines) == 8
    report_file = tmp_path / "report.json"
    code, _, err = run_cli(
        capsys, "verify", "--theorem", "thm-3.3", "--corpus", str(corpus_file),
        "--out", str(report_file),
    )
    assert code == 0
    payload = json.loads(report_file.read_text())
    assert payload["summary"] == {
        "checked": 8, "passed": 8, "failed": 0, "paper_inconsistent": 0,
    }


def test_gen_to_stdout(capsys):
    code, out, _ = run_cli(capsys, "gen", "--max-order", "3", "--min-order", "3", "--connected")
    assert code == 0
    assert len(out.strip().splitlines()) == 2


def test_gen_order_cap_is_input_error(capsys):
    code, _, err = run_cli(capsys, "gen", "--max-order", "9")
    assert code == 2 and "builtin enumeration is limited" in err


def test_verify_builtin_exit_zero(capsys):
    code, out, err = run_cli(capsys, "verify", "--theorem", "lemma-2.4", "--builtin", "4")
    assert code == 0
    assert json.loads(out)["summary"]["failed"] == 0
    assert "lemma-2.4" in err  # human summary goes to stderr


def test_verify_unknown_theorem_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "thm-0.0", "--builtin", "3"])
    assert exc.value.code == 2


def test_verify_missing_corpus_file_is_input_error(capsys):
    code, _, err = run_cli(capsys, "verify", "--theorem", "thm-3.3", "--corpus", "/nonexistent.g6")
    assert code == 2


def test_verify_error_record_yields_exit_one(tmp_path, capsys):
    # a graph past the certification cap produces an error record, which
    # counts as a failure and flips the exit code
    from symbreak.graph_core import path_graph, write_graph6_file

    corpus_file = tmp_path / "toobig.g6"
    write_graph6_file(str(corpus_file), [path_graph(35)])
    code, out, _ = run_cli(
        capsys, "verify", "--theorem", "thm-3.3", "--corpus", str(corpus_file)
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["summary"]["failed"] == 1
    assert payload["records"][0]["status"] == "error"
    assert "ResourceCapError" in payload["records"][0]["note"]
    assert payload["counterexamples"] == [to_graph6(path_graph(35))]


def test_verify_tsv_output(tmp_path, capsys):
    out_file = tmp_path / "r.tsv"
    code, _, _ = run_cli(
        capsys, "verify", "--theorem", "lemma-2.4", "--builtin", "3",
        "--format", "tsv", "--out", str(out_file),
    )
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert lines[0].startswith("graph6\t")
    assert len(lines) == 3  # header + the two connected order-3 graphs
