import csv
import io
import json

import pytest

from arrowpoly.cli import build_report, fuzz, main, report_to_csv, report_to_json
from arrowpoly.fixtures import table_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_arrow_normalized(capsys):
    code, out, _ = run(capsys, "arrow", "--normalized", "O1+U2+O3-U1+O2+U3-")
    assert code == 0
    assert out.strip() == "A^-8 - A^-8*K1^2 + K1^2"


def test_arrow_json(capsys):
    code, out, _ = run(capsys, "arrow", "--json", "")
    assert code == 0
    assert json.loads(out) == [{"coeff": 1, "a_exp": 0, "k": {}}]


def test_oddwrithe(capsys):
    assert run(capsys, "oddwrithe", "O1+O2+U1+U2+")[:2] == (0, "2\n")


def test_oddwrithe_link(capsys):
    code, _, err = run(capsys, "oddwrithe", "O1+;U1+")
    assert code == 2
    assert "NotAKnot" in err


def test_colorability_unknot(capsys):
    code, out, _ = run(capsys, "colorability", "")
    assert code == 0
    assert json.loads(out) == {"verdict": "Colorable", "witness": [0]}


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "arrow", "O1+U1-")
    assert code == 2
    assert "SignMismatch" in err
    assert run(capsys, "arrow", "O1+X2")[0] == 2


def test_too_large_exit(capsys):
    assert run(capsys, "arrow", "--max-crossings", "2", "O1+U2+O3+U1+O2+U3+")[0] == 3


def test_table_fixture(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, err = run(capsys, "table", str(table_path("virtual.tsv")), "-o", str(out))
    assert code == 0
    report = json.loads(out.read_text())
    assert len(report["rows"]) == 10
    assert report["errors"] == []
    assert "summary:" in err


def test_table_empty(tmp_path, capsys):
    src = tmp_path / "empty.tsv"
    src.write_text("# nothing\n\n")
    code, out, err = run(capsys, "table", str(src), "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["name,writhe,odd_writhe,arrow_poly,as_set,verdict,obstructions"]
    assert "empty" in err


def test_table_reports_bad_lines():
    lines = ["a\tO1+U1+\n", "b\tO1+U2+\n", "no tab here\n", "a\tO1-U1-\n"]
    report = build_report(lines)
    assert [r["name"] for r in report["rows"]] == ["a"]
    assert [e["line"] for e in report["errors"]] == [2, 3, 4]
    rows = list(csv.DictReader(io.StringIO(report_to_csv(report))))
    assert [r["verdict"] for r in rows] == ["Colorable", "Error", "Error", "Error"]
    assert rows[1]["obstructions"].startswith("line 2: DanglingCrossing")


def test_csv_json_agree():
    lines = table_path("virtual.tsv").read_text().splitlines()
    report = build_report(lines)
    by_json = {r["name"]: r for r in json.loads(report_to_json(report))["rows"]}
    for r in csv.DictReader(io.StringIO(report_to_csv(report))):
        j = by_json[r["name"]]
        assert r["arrow_poly"] == j["arrow_poly"]
        assert r["verdict"] == j["verdict"]["verdict"]
        assert int(r["writhe"]) == j["writhe"]


def test_table_is_deterministic(monkeypatch):
    lines = table_path("virtual.tsv").read_text().splitlines()
    monkeypatch.setenv("ARROWPOLY_THREADS", "1")
    one = report_to_json(build_report(lines))
    monkeypatch.setenv("ARROWPOLY_THREADS", "4")
    assert report_to_json(build_report(lines)) == one


def test_fuzz_clean(capsys):
    code, out, _ = run(capsys, "fuzz", "--walks", "5", "--steps", "5", "--seed", "1")
    assert code == 0
    assert json.loads(out)["failures"] == []


def test_fuzz_deterministic():
    assert fuzz(3, 4, 8, 7) == fuzz(3, 4, 8, 7)
