import json
from pathlib import Path

import pytest

from lperm.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_json(capsys):
    code, out, _ = run(capsys, "parse", "--formula", DATA / "abelian.fol", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["text"] == "A f,g. [f, g] = 1" and "forall" in doc["ast"]


def test_relativize_matches_display(capsys):
    code, out, _ = run(capsys, "relativize", "--formula", DATA / "abelian.fol", "--h", "h")
    assert code == 0
    assert out.strip() == "A f,g. gamma(h, f) & gamma(h, g) -> (E h'. vartheta(h', h) & gamma(h', [f, g]))"


def test_example_nc_restricted(capsys):
    code, out, _ = run(capsys, "example-nc", "--spec", DATA / "wr2.json", "--json")
    assert code == 0 and json.loads(out)["verdict"] is False


def test_example_nc_default(capsys):
    code, out, _ = run(capsys, "example-nc", "--spec", DATA / "wr2_default.json", "--json")
    assert code == 0 and json.loads(out)["verdict"] is True


def test_example_nc_rejects_plq(capsys):
    code, _, err = run(capsys, "example-nc", "--spec", DATA / "z_plq.json")
    assert code == 2 and "Z towers" in err


def test_eval_both_modes(capsys):
    code, out, _ = run(capsys, "eval", "--spec", DATA / "plq.json", "--formula", DATA / "abelian.fol",
                       "--mode", "both", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["contradiction"] is False
    assert doc["results"]["oracle"]["verdict"] is False


def test_spine_and_colours(capsys):
    code, out, _ = run(capsys, "spine", "--spec", DATA / "wr2.json", "--json")
    assert code == 0 and [d["kind"] for d in json.loads(out)["levels"]] == ["Z", "Z"]
    code, out, _ = run(capsys, "colours", "--spec", DATA / "z_plq.json", "--json")
    levels = json.loads(out)["levels"]
    assert code == 0 and levels[0]["colours"]["abelian"] is False and levels[1]["colours"]["abelian"] is True


def test_props(capsys):
    code, out, _ = run(capsys, "props", "--spec", DATA / "wr2.json", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["hypotheses"]["controlled"] and doc["minimal_abelian"]["witness"]


def test_lemma31_json(capsys):
    code, out, _ = run(capsys, "lemma31", "--seed", 5, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["verified"] and doc["lhs"] != doc["rhs"]
    assert all("breakpoints" in doc[k] for k in ("h", "g", "f", "k", "w1", "w2"))


@pytest.mark.parametrize("argv", [
    ("lemma31", "--seed", "9", "--json"),
    ("example-nc", "--spec", str(DATA / "wr2.json"), "--seed", "3"),
    ("suite", "--only", "8,10", "--seed", "42"),
])
def test_byte_identical(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_suite_exit_codes(capsys):
    code, out, _ = run(capsys, "suite", "--only", "8", "--seed", "42")
    assert code == 0 and out.startswith("[PASS] criterion 8")
    code, out, _ = run(capsys, "suite", "--only", "6", "--seed", "42", "--json")
    assert code == 1 and json.loads(out)["results"][0]["passed"] is False


@pytest.mark.parametrize("doc", [
    {"family": "plq", "levels": ["Z"]},
    {"family": "wreath", "levels": ["Q"]},
    {"family": "wreath", "levels": ["Z"], "mode": "full"},
    {"family": "wreath", "levels": ["Z"], "colour": 1},
    {"family": "thompson"},
    [],
])
def test_spec_validation(capsys, tmp_path, doc):
    p = tmp_path / "spec.json"
    p.write_text(json.dumps(doc))
    code, _, err = run(capsys, "spine", "--spec", p)
    assert code == 2 and err


def test_usage_errors(capsys, tmp_path):
    bad = tmp_path / "bad.fol"
    bad.write_text("A f")
    assert run(capsys, "parse", "--formula", bad)[0] == 2
    assert run(capsys, "spine", "--spec", tmp_path / "missing.json")[0] == 2
    free = tmp_path / "free.fol"
    free.write_text("x = 1")
    assert run(capsys, "eval", "--spec", DATA / "plq.json", "--formula", free)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
