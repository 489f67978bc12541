import io
import json

import pytest

from mapcensus.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_rooted_csv():
    code, text = run("rooted", "--surface", "torus", "--r", "5", "--max-v", "2")
    assert code == 0
    assert text.splitlines() == ["v,count", "1,120", "2,125280"]


def test_rooted_klein():
    code, text = run("rooted", "--surface", "klein", "--r", "6", "--max-v", "1", "--format", "csv")
    assert text.splitlines()[1:] == ["1,42"]


def test_rooted_json():
    code, text = run("rooted", "--surface", "sphere", "--r", "4", "--max-v", "3", "--format", "json")
    records = json.loads(text)
    assert [int(r["value"]) for r in records] == [2, 9, 54]
    assert {r["family"] for r in records} == {"sigma.rooted.sphere.r4"}
    assert [r["index"] for r in records] == [1, 2, 3]
    assert all(isinstance(r["value"], str) for r in records)


def test_csv_and_json_agree():
    _, csv_text = run("rooted", "--surface", "torus", "--r", "5", "--max-v", "10")
    _, json_text = run("rooted", "--surface", "torus", "--r", "5", "--max-v", "10", "--format", "json")
    csv_values = [int(line.split(",")[1]) for line in csv_text.splitlines()[1:]]
    assert csv_values == [int(r["value"]) for r in json.loads(json_text)]
    assert csv_values[-1] == 68747100051073934332046868480


@pytest.mark.parametrize("r,max_v,expected", [(4, 4, [1, 4, 23, 185]), (6, 2, [3, 81]), (5, 1, [15]), (3, 2, [1, 5])])
def test_sensed(r, max_v, expected):
    code, text = run("sensed", "--r", str(r), "--max-v", str(max_v))
    assert code == 0
    assert [int(line.split(",")[1]) for line in text.splitlines()[1:]] == expected


def test_sensed_integrality_failure(monkeypatch, capsys):
    import mapcensus.cli as cli
    from mapcensus.bigmath import exact_div

    monkeypatch.setattr(cli, "sensed_value", lambda r, v: exact_div(7, 2))
    code, _ = run("sensed", "--r", "7", "--max-v", "1")
    assert code == 1
    assert "non-exact division" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["rooted", "--surface", "mars", "--r", "4", "--max-v", "2"],
    ["rooted", "--surface", "torus", "--r", "2", "--max-v", "2"],
    ["rooted", "--surface", "torus", "--r", "4", "--max-v", "0"],
    ["sensed", "--r", "4", "--max-v", "x"],
    ["verify", "everything"],
    [],
])
def test_usage_errors(argv):
    code, _ = run(*argv)
    assert code == 2


def test_verify_tables():
    code, text = run("verify", "tables")
    lines = text.splitlines()
    assert code == 0
    assert sum(line.startswith("PASS") for line in lines) == 160
    assert lines[-1] == "160 passed, 0 failed"


def test_verify_crosscheck():
    code, text = run("verify", "crosscheck")
    assert code == 0
    assert "PASS t.r4.cell.20.4 20 expected=8501284530 got=8501284530" in text


def test_verify_oracle():
    code, text = run("verify", "oracle", "--quiet")
    assert code == 0
    assert text.strip().endswith("0 failed")
    code, text = run("verify", "oracle", "--budget-darts", "6")
    assert "PASS oracle.sensed.g1.r3 2 expected=1 got=1" in text


def test_verify_reports_mismatch(monkeypatch):
    import mapcensus.verify as verify
    from mapcensus.golden import GoldenValue

    monkeypatch.setattr(verify, "golden_values", lambda: (GoldenValue("rooted.torus", 4, 1, 2),))
    code, text = run("verify", "tables")
    assert code == 1
    assert "FAIL tau.rooted.torus.r4 1 expected=2 got=1" in text


def test_cache_commands(tmp_path):
    code, text = run("cache", "store", "--r", "4", "--max-v", "5", "--cache-dir", str(tmp_path))
    assert code == 0 and (tmp_path / "r4.tsv").exists()
    code, text = run("cache", "load", "--r", "4", "--cache-dir", str(tmp_path))
    assert code == 0 and "t\tn_max=10" in text
    code, _ = run("cache", "load", "--r", "5", "--cache-dir", str(tmp_path))
    assert code == 1


def test_rooted_with_cache_dir(tmp_path):
    code, text = run("rooted", "--surface", "projective", "--r", "6", "--max-v", "3", "--cache-dir", str(tmp_path))
    assert text.splitlines()[1:] == ["1,22", "2,864", "3,40512"]
    assert (tmp_path / "r6.tsv").exists()
    code, again = run("rooted", "--surface", "projective", "--r", "6", "--max-v", "3", "--cache-dir", str(tmp_path))
    assert again == text
