import io
import json
import sys

import pytest

from seidelkit.cli import main


def run_cli(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr, sys.stdin
    sys.stdout, sys.stderr = out, err
    sys.stdin = io.StringIO(stdin_text)
    try:
        code = main(argv)
    finally:
        sys.stdout, sys.stderr, sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_gen_fixtures():
    code, out, _ = run_cli(["gen", "paw"])
    assert code == 0 and out.strip() == "Cx"
    code, out, _ = run_cli(["gen", "tadpole", "3", "4"])
    assert code == 0 and out.strip() == "ExCG"
    code, out, _ = run_cli(["gen", "half_join", "2", "3", "--a", "empty", "--b", "empty"])
    assert code == 0 and out.strip() == "DQ_"
    code, out, _ = run_cli(["gen", "path", "4"])
    assert code == 0 and out.strip() == "Ch"


def test_gen_errors_exit_two():
    code, _, err = run_cli(["gen", "cycle", "2"])
    assert code == 2 and err
    code, _, err = run_cli(["gen", "half_join", "3", "3"])
    assert code == 2 and err
    code, _, err = run_cli(["gen", "path"])
    assert code == 2


def test_switch_fixture():
    code, out, _ = run_cli(["switch", "--graph", "Cx", "--set", "0"])
    assert code == 0 and out.strip() == "CL"
    # empty set leaves the graph alone
    code, out, _ = run_cli(["switch", "--graph", "Cx"])
    assert code == 0 and out.strip() == "Cx"


def test_switch_stdin_lines():
    code, out, _ = run_cli(["switch", "--stdin", "--set", "0"], stdin_text="Cx\nCL\n")
    assert code == 0
    assert out.split() == ["CL", "Cx"]


def test_switch_rejects_garbage():
    code, _, err = run_cli(["switch", "--graph", "!!", "--set", "0"])
    assert code == 2 and err
    code, _, err = run_cli(["switch", "--graph", "Cx", "--set", "0,9"])
    assert code == 2 and err
    code, _, err = run_cli(["switch", "--graph", "Cx", "--set", "zero"])
    assert code == 2 and err


def test_iss_family_mode():
    code, out, _ = run_cli(["iss", "--graph", "Bw", "--mode", "family"])
    assert code == 0
    assert "2 identity switches" in out
    assert "000 []" in out
    assert "111 [0,1,2]" in out
    assert "closed under symmetric difference: yes" in out


def test_iss_family_reports_witness():
    # three-vertex path family is not closed
    code, out, _ = run_cli(["iss", "--graph", "Bo", "--mode", "family"])
    assert code == 0
    assert "closed under symmetric difference: no" in out


def test_iss_vertices_mode():
    code, out, _ = run_cli(["iss", "--graph", "Cx", "--mode", "vertices"])
    assert code == 0
    for v in range(4):
        assert f"vertex {v}: no" in out


def test_iss_edges_mode():
    code, out, _ = run_cli(["iss", "--graph", "Cx", "--mode", "edges"])
    assert code == 0
    assert "direct" in out and "cond_i" in out
    assert "(0,1)" in out and "(2,3)" in out


def test_census_jsonl_and_summary():
    code, out, _ = run_cli(["census", "--order", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "order 4: 3 classes"
    rows = [json.loads(x) for x in lines[:-1]]
    assert len(rows) == 3
    assert [r["rep_g6"] for r in rows] == ["C?", "C@", "CJ"]
    assert all(r["order"] == 4 for r in rows)


def test_census_out_file(tmp_path):
    target = tmp_path / "census4.jsonl"
    code, out, _ = run_cli(["census", "--order", "4", "--out", str(target)])
    assert code == 0
    rows = [json.loads(x) for x in target.read_text().splitlines()]
    assert len(rows) == 3
    assert "order 4: 3 classes" in out


def test_census_bounds():
    code, _, err = run_cli(["census", "--order", "9"])
    assert code == 2 and err
    code, _, err = run_cli(["census", "--order", "0"])
    assert code == 2 and err


def test_verify_pass_and_findings_file(tmp_path):
    target = tmp_path / "findings.jsonl"
    code, out, _ = run_cli(
        ["verify", "--suite", "iss", "--max-order", "5", "--out", str(target)]
    )
    assert code == 0
    assert "PASS" in out
    rows = [json.loads(x) for x in target.read_text().splitlines()]
    assert rows  # closure findings appear by order 4
    assert all(
        list(r.keys()) == ["claim-id", "graph6", "witness-masks", "detail"]
        for r in rows
    )


def test_verify_all_small():
    code, out, _ = run_cli(["verify", "--suite", "all", "--max-order", "3"])
    assert code == 0
    assert "PASS (0 violations" in out
    for name in ("algebra", "iso", "invariants", "iss", "edge-iss", "classes", "constructions"):
        assert f"[{name}]" in out


def test_verify_unknown_suite():
    code, _, err = run_cli(["verify", "--suite", "nonesuch", "--max-order", "3"])
    assert code == 2


def test_unknown_subcommand():
    code, _, _ = run_cli(["frobnicate"])
    assert code == 2
