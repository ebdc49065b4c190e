import json

import pytest

from partasp.cli import main

PROGRAM_6 = """
p :- q, r.  q :- s, not x. t :- s. j :- r. m :- t. k :- j. n :- p. o :- n.
r :- not u, not v. w :- not v. a :- not b. b :- not a. s.
"""


@pytest.fixture
def prog6_file(tmp_path):
    path = tmp_path / "prog6.lp"
    path.write_text(PROGRAM_6)
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_json(prog6_file, capsys):
    code, out, _ = run(capsys, ["solve", prog6_file, "--query", "p", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 1
    assert set(doc["models"][0]["true"]) == {"r", "q", "p", "s", "t", "j", "m", "k", "n", "o", "w"}
    assert set(doc["models"][0]["false"]) == {"x", "u", "v"}


def test_solve_text_matches_json(prog6_file, capsys):
    code, text_out, _ = run(capsys, ["solve", prog6_file, "--query", "p"])
    assert code == 0
    code, json_out, _ = run(capsys, ["solve", prog6_file, "--query", "p", "--json"])
    doc = json.loads(json_out)
    for name in doc["models"][0]["true"]:
        assert f" {name}" in text_out or f": {name}" in text_out
    for name in doc["models"][0]["false"]:
        assert f"not {name}" in text_out


def test_solve_uses_file_query_directive(tmp_path, capsys):
    path = tmp_path / "q.lp"
    path.write_text("p :- not q. q :- not p. ?- q.\n")
    code, out, _ = run(capsys, ["solve", str(path), "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["models"][0]["true"] == ["q"]


def test_solve_no_model_exit_code(tmp_path, capsys):
    path = tmp_path / "p.lp"
    path.write_text("q :- not p. :- p.\n")
    code, out, _ = run(capsys, ["solve", str(path), "--query", "p"])
    assert code == 1
    assert "no model" in out


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.lp"
    path.write_text("ball(1..3).\n")
    code, _, err = run(capsys, ["solve", str(path), "--query", "p"])
    assert code == 2
    assert "interval" in err


def test_odd_loop_exit_code(tmp_path, capsys):
    path = tmp_path / "odd.lp"
    path.write_text("p :- not q. q :- not r. r :- not p.\n")
    code, _, err = run(capsys, ["solve", str(path), "--query", "p"])
    assert code == 2
    assert "odd loop" in err


def test_stable_even_loop(tmp_path, capsys):
    path = tmp_path / "even.lp"
    path.write_text("p :- not q. q :- not p.\n")
    code, out, _ = run(capsys, ["stable", str(path), "--json"])
    assert code == 0
    assert json.loads(out)["stable_models"] == [["p"], ["q"]]


def test_check_subcommand(capsys, monkeypatch):
    monkeypatch.setenv("DISCASP_SEED", "7")
    code, out, _ = run(capsys, ["check", "--programs", "25"])
    assert code == 0
    assert "PASS: all answers subset-sound" in out


def test_check_seed_changes_programs(capsys, monkeypatch):
    monkeypatch.setenv("DISCASP_SEED", "3")
    _, out_a, _ = run(capsys, ["check", "--programs", "5", "--json"])
    monkeypatch.setenv("DISCASP_SEED", "4")
    _, out_b, _ = run(capsys, ["check", "--programs", "5", "--json"])
    assert json.loads(out_a)["pass"] and json.loads(out_b)["pass"]


def test_check_single_program(prog6_file, capsys):
    code, out, _ = run(capsys, ["check", prog6_file, "--query", "p"])
    assert code == 0
    assert "PASS: all answers subset-sound" in out
    code, out, _ = run(capsys, ["check", prog6_file, "--json"])
    assert code == 0
    assert json.loads(out)["pass"]


def test_rcc_output(prog6_file, capsys):
    code, out, _ = run(capsys, ["rcc", prog6_file, "--query", "q", "--radius", "2", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["topic"] == "q" and doc["radius"] == 2
    atoms = {m["atom"] for m in doc["members"]}
    assert atoms == {"q", "s", "p", "x", "t", "r", "n"}


def test_rcc_explain(prog6_file, capsys):
    code, out, _ = run(capsys, ["rcc", prog6_file, "--query", "q", "--radius", "2",
                                "--explain", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert "paths" in doc and doc["paths"]["t"]


def test_byte_identical_reruns(prog6_file, capsys):
    _, first, _ = run(capsys, ["rcc", prog6_file, "--query", "q", "--radius", "3", "--json"])
    _, second, _ = run(capsys, ["rcc", prog6_file, "--query", "q", "--radius", "3", "--json"])
    assert first == second


def test_missing_file(capsys):
    code, _, err = run(capsys, ["solve", "/nonexistent.lp", "--query", "p"])
    assert code == 2
