from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from mvhodge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def coeffs(series):
    return [c[0]["re"] if c else "0/1" for c in series["coeffs"]]


def test_hurwitz_single_row(capsys):
    code, out, _ = run(capsys, "hurwitz", "--max-weight", "1")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows == [{"g": 0, "mu": [1], "r": 0, "H": "1/1", "method": "burnside"}]


def test_hurwitz_all_methods(capsys):
    code, out, _ = run(capsys, "hurwitz", "--max-weight", "3", "--max-genus", "1", "--method", "all", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    h03 = [r for r in rows if r["g"] == "0" and r["mu"] == "3"]
    assert {r["method"] for r in h03} == {"burnside", "oracle", "cutjoin"}
    assert {r["H"] for r in h03} == {"1/1"}


def test_hurwitz_cross_check_section(capsys):
    code, out, _ = run(capsys, "hurwitz", "--max-weight", "6", "--max-genus", "2", "--method", "all")
    data = json.loads(out)
    assert code == 0
    assert data["crossCheck"]["disagreements"] == []
    assert data["crossCheck"]["infeasible"]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hurwitz", "--max-weight", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["series", "--target", "V"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["series", "--target", "nope"])
    assert exc.value.code == 2


def test_series_targets(capsys):
    _, out, _ = run(capsys, "series", "--target", "V", "--partition", "1", "--order", "4")
    s = json.loads(out)["series"]
    assert s["minExp"] == -1
    assert coeffs(s)[:5] == ["1/1", "0/1", "1/24", "0/1", "7/5760"]
    _, out, _ = run(capsys, "series", "--target", "Phi", "--max-weight", "2", "--order", "5")
    s = json.loads(out)["series"]["2"]
    assert s["minExp"] == 1 and coeffs(s) == ["1/2", "0/1", "1/12", "0/1", "1/240"]
    _, out, _ = run(capsys, "series", "--target", "limit-lambda-g", "--partition", "1", "--order", "4")
    assert coeffs(json.loads(out)["series"]) == ["1/1", "0/1", "1/24", "0/1", "7/5760"]
    for target in ("R", "limit-elsv"):
        code, out, _ = run(capsys, "series", "--target", target, "--max-weight", "3", "--order", "4")
        assert code == 0 and "1.1" in json.loads(out)["series"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "bernoulli", "--max-genus", "10"],
        ["verify", "--suite", "mumford", "--max-genus", "6"],
        ["verify", "--suite", "mv-cutjoin", "--max-weight", "6"],
    ],
)
def test_verify_examples(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    reports = json.loads(out)
    assert reports and all(r["passed"] for r in reports)


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "g-minus-1", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and {r["result"] for r in rows} == {"pass"}


def test_failure_exit_code(capsys, monkeypatch):
    from mvhodge import verify
    from mvhodge.identities import IdentityReport

    def broken(cfg):
        return [IdentityReport("forced", {"g": 1}, 1, 2, False, detail="left != right")]

    monkeypatch.setitem(verify._SUITE_FUNCS, "cubic", broken)
    code, _, err = run(capsys, "verify", "--suite", "cubic")
    assert code == 1
    assert "first failure: forced" in err


def test_output_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("MVHODGE_OUTPUT_DIR", str(tmp_path))
    assert main(["hurwitz", "--max-weight", "2", "--format", "csv"]) == 0
    assert (tmp_path / "hurwitz.csv").read_text().startswith("g,mu,r,H,method\n")
    out = tmp_path / "sub" / "x.json"
    assert main(["verify", "--suite", "cubic", "--output", str(out)]) == 0
    assert json.loads(out.read_text())


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "mvhodge", "hurwitz", "--max-weight", "1", "--format", "csv"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[1] == "0,1,0,1/1,burnside"
