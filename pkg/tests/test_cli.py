import json

import pytest

from resolvalg.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_simplify_command(capsys):
    code, out, _ = run_cli(capsys, "simplify", "R(2,0)")
    assert code == 0
    body = json.loads(out)
    assert body["text"] == "(-1/2*i)"
    assert body["term"] == [{"coeff": ["0", "-1/2"], "word": []}]


def test_simplify_merges(capsys):
    code, out, _ = run_cli(capsys, "simplify", "R(1,p1)*R(2,p1)")
    assert code == 0
    assert json.loads(out)["text"] == "-i*R(1,p1) + i*R(2,p1)"


def test_malformed_input_exits_2(capsys):
    code, _, err = run_cli(capsys, "simplify", "R(1,")
    assert code == 2
    assert "position" in err


def test_maximal_member(capsys):
    code, out, _ = run_cli(
        capsys,
        "ideal", "maximal", "--Z", "p1", "--phi", "0", "--expr", "R(1,q1)", "--dim", "2",
    )
    assert code == 0
    assert json.loads(out) == {"member": True}


def test_membership_verdict(capsys):
    code, out, _ = run_cli(
        capsys,
        "ideal", "member", "--dim", "2", "--Y", "p1", "--phi", "0",
        "--expr", "R(1,p1) + i",
    )
    assert code == 0
    assert json.loads(out)["verdict"]["status"] == "in_kernel"


def test_label_roundtrip_command(capsys):
    code, out, _ = run_cli(
        capsys, "label", "roundtrip", "--dim", "2", "--Y", "p1", "--phi", "3"
    )
    assert code == 0
    body = json.loads(out)
    assert body["reports"][0]["status"] == "pass"
    assert abs(body["reports"][0]["params"]["recovered_phi"][0] - 3.0) < 1e-6


def test_chain_command(capsys):
    code, out, _ = run_cli(capsys, "chain", "--dim", "4")
    assert code == 0
    body = json.loads(out)
    report = body["reports"][0]
    assert report["params"]["length"] == 3
    assert all(w["ok"] for w in report["params"]["witnesses"])


def test_check_relations_single_level_is_inconclusive(capsys):
    code, out, _ = run_cli(
        capsys,
        "check-relations", "--dim", "2", "--instances", "1", "--schedule", "16",
    )
    assert code == 3


def test_deterministic_output_for_fixed_seed(capsys):
    args = ["check-relations", "--dim", "2", "--instances", "2", "--schedule", "8,16"]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert (code1, out1) == (code2, out2)


def test_config_file_override(tmp_path, capsys, monkeypatch):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"schedule": [8, 16], "K0": 4}))
    monkeypatch.setenv("RESOLVALG_CONFIG", str(config))
    code, out, _ = run_cli(capsys, "check-relations", "--dim", "2", "--instances", "1")
    assert code == 0
    body = json.loads(out)
    sched = body["reports"][0]["params"]["schedule"]
    assert sched == [8, 16]
