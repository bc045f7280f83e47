"""Command line round trips and pinned text output."""

import json

import pytest

from braidcalc.cli import main
from braidcalc.moves import load_tower, replay
from braidcalc.templates import dump_template, make_cyclic
from braidcalc.words import BraidWord, parse_word


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eq(capsys):
    code, out, _ = run(capsys, "eq", "3: 1 2 1", "3: 2 1 2")
    assert code == 0
    assert out.strip() == "equal"
    code, out, _ = run(capsys, "eq", "2: 1", "2: -1", "--expect", "not-equal")
    assert code == 0
    assert out.strip() == "not-equal"
    code, out, _ = run(capsys, "eq", "2: 1", "2: -1", "--expect", "equal")
    assert code == 1
    code, _, err = run(capsys, "eq", "2: 1", "3: 1")
    assert code == 2 and "error" in err


def test_eq_json(capsys):
    code, out, _ = run(
        capsys, "eq", "2: 1 -1", "2:", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"equal": True}


def test_conj(capsys):
    code, out, _ = run(
        capsys, "conj", "3: 1", "3: 2", "--expect", "conjugate"
    )
    assert code == 0
    assert out.startswith("conjugate nodes=")
    code, out, _ = run(capsys, "conj", "3: 1", "3: -1")
    assert code == 0
    assert out.startswith("not-conjugate")
    code, out, _ = run(
        capsys, "conj", "3: 1", "3: -1", "--expect", "conjugate"
    )
    assert code == 1


def test_conj_json_reports_nodes(capsys):
    code, out, _ = run(
        capsys, "conj", "3: 1 1 2", "3: 2 1 1", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "conjugate"
    assert doc["nodes"] >= 0


def test_nf_pinned(capsys):
    code, out, _ = run(capsys, "nf", "3: 1 2 1")
    assert code == 0
    assert out.strip() == "3: D^1"
    code, out2, _ = run(capsys, "nf", "3: 2 1 2")
    assert out2 == out
    code, out, _ = run(capsys, "nf", "3: 1 1", "--format", "json")
    doc = json.loads(out)
    assert doc == {"index": 3, "power": 0, "factors": [[1], [1]]}


def test_invariants_pinned(capsys):
    code, out, _ = run(capsys, "invariants", "2: 1 1 1")
    assert code == 0
    assert out.strip() == "components=1 alexander=1 - t + t^2 sl=1"
    code, out, _ = run(capsys, "invariants", "2: 1 1")
    assert out.strip() == "components=2 alexander=1 - t sl=0"
    code, out, _ = run(capsys, "invariants", "2: 1 1 1", "--format", "json")
    doc = json.loads(out)
    assert doc == {
        "components": 1,
        "alexander": "1 - t + t^2",
        "self_linking": 1,
    }


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "nf", "3: 1 1 1 -2 4")
    assert code == 2
    assert "line 1" in err and "column" in err


def test_move(capsys):
    doc = json.dumps({"kind": "stabilize", "sign": 1})
    code, out, _ = run(capsys, "move", "2: 1 1 1", doc)
    assert code == 0
    assert parse_word(out.strip()) == BraidWord(3, (1, 1, 1, 2))
    doc = json.dumps({"kind": "destabilize", "sign": -1})
    code, _, err = run(capsys, "move", "2: 1 1 1", doc)
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "move", "2: 1", "{not json")
    assert code == 2


def test_replay_and_reduce_tower(tmp_path, capsys):
    out_path = tmp_path / "tower.json"
    code, out, _ = run(
        capsys, "reduce", "3: 1 -2", "--out", str(out_path)
    )
    assert code == 0
    assert out.strip() == "reduced n=3 len=2 -> n=1 len=0 nodes=3"
    tower = load_tower(str(out_path))
    assert replay(tower).ok
    assert tower.final == BraidWord(1, ())
    code, out, _ = run(capsys, "replay", str(out_path))
    assert code == 0
    assert out.startswith("replay ok")
    code, _, err = run(capsys, "replay", str(tmp_path / "missing.json"))
    assert code == 2


def test_reduce_inline_tower(capsys):
    code, out, _ = run(capsys, "reduce", "3: 1 -2")
    assert code == 0
    doc_line, summary = out.strip().split("\n")
    doc = json.loads(doc_line)
    assert doc["initial"] == "3: 1 -2"
    assert summary == "reduced n=3 len=2 -> n=1 len=0 nodes=3"


def test_expand_catalog_name(capsys):
    code, out, _ = run(
        capsys,
        "expand",
        "destabilize_pos",
        "--assign",
        "P=2: 1 1",
    )
    assert code == 0
    assert parse_word(out.strip()).index >= 2
    code, _, err = run(capsys, "expand", "no_such_template")
    assert code == 2


def test_expand_file(tmp_path, capsys):
    path = tmp_path / "cyclic.json"
    dump_template(make_cyclic(4), str(path))
    assigns = []
    for i in range(1, 5):
        assigns += ["--assign", f"B{i}=2:"]
    code, out, _ = run(capsys, "expand", str(path), "--side", "plus", *assigns)
    assert code == 0
    word = parse_word(out.strip())
    assert word == BraidWord(4, (3, 2, 1) * 4)
    code, _, err = run(capsys, "expand", str(path), "--side", "plus")
    assert code == 1  # missing assignments


def test_verify_template_pinned(capsys):
    code, out, _ = run(
        capsys, "verify-template", "exchange_w1", "--seed", "0"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "template=exchange_w1 seed=0 samples=25"
    assert lines[1] == "25/25 pass delta_b=0"
    code, out, _ = run(
        capsys,
        "verify-template",
        "destabilize_pos",
        "--samples",
        "5",
        "--seed",
        "3",
        "--format",
        "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] == 5 and doc["delta_b"] == 1
    assert all(s["ok"] for s in doc["samples"])


def test_verify_template_dir_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("BRAID_TEMPLATE_DIR", str(tmp_path))
    code, _, err = run(capsys, "verify-template", "exchange_w1")
    assert code == 2
    dump_template(make_cyclic(3), str(tmp_path / "only.json"))
    code, out, _ = run(capsys, "verify-template", "cyclic3", "--samples", "4")
    assert code == 0
    assert "4/4 pass" in out


def test_certify_pinned(capsys, tmp_path):
    code, out, _ = run(
        capsys, "certify", "destabilize_pos", "--min-last-count", "2"
    )
    assert code == 0
    assert out.strip() == "sigma_budget=1 required=2 certified=yes"
    code, out, _ = run(
        capsys, "certify", "destabilize_pos", "--min-last-count", "1"
    )
    assert code == 1
    assert out.strip() == "sigma_budget=1 required=1 certified=no"
    doc = {
        "n": 3,
        "weights": [1, 1, 1],
        "entries": [{"kind": "block", "id": "P", "span": 2, "pos": 2}],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "certify", str(path), "--min-last-count", "1")
    assert code == 1 and "error" in err


def test_census_command(tmp_path, capsys):
    doc = {
        "V": [{"a": 1, "b": 2, "count": 4}],
        "Ea": 4,
        "Eb": 4,
        "Es": 0,
    }
    path = tmp_path / "census.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "census", str(path))
    assert code == 0
    assert "annulus_residual=0" in out
    assert "vertex_residual=0 a_residual=0 b_residual=0" in out
    doc["Es"] = 1
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "census", str(path))
    assert code == 1
    code, _, err = run(capsys, "census", str(tmp_path / "nope.json"))
    assert code == 2


def test_reduce_rejects_bad_budget(capsys):
    with pytest.raises(SystemExit):
        main(["reduce"])
    capsys.readouterr()
    code, _, err = run(capsys, "reduce", "3: 1", "--max-index", "2")
    assert code == 2
