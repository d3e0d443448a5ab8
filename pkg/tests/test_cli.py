import json

import pytest

from impactdisc.cli import main


@pytest.fixture
def step_csv(tmp_path):
    p = tmp_path / "step.csv"
    assert main(["synth", "--family", "step", "--n", "6", "--levels", "0,10",
                 "--noise-sd", "0", "--seed", "1", "--out", str(p)]) == 0
    return p


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr()


def test_synth_writes_series(step_csv):
    assert step_csv.read_text().splitlines() == [
        "x,y", "1.0,0.0", "2.0,0.0", "3.0,0.0", "4.0,10.0", "5.0,10.0", "6.0,10.0"]


@pytest.mark.parametrize("method", ["dp", "brute"])
@pytest.mark.parametrize("objective", ["lsqm", "ladm"])
def test_discretize(capsys, step_csv, method, objective):
    code, out = run(capsys, ["discretize", "--input", str(step_csv), "--x-col", "x",
                             "--y-col", "y", "--k", "2", "--objective", objective,
                             "--method", method])
    assert code == 0
    d = json.loads(out.out)
    assert d["cut_points"] == [3.0]
    assert d["total_cost"] == 0.0
    assert d["solver"] == method


def test_discretize_csv_to_file(tmp_path, step_csv):
    out = tmp_path / "r.csv"
    assert main(["discretize", "--input", str(step_csv), "--x-col", "0", "--y-col", "1",
                 "--k", "3", "--format", "csv", "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("kind,index,lo,hi")
    assert lines[-1].startswith("summary,3,0,6")


def test_curve(capsys, step_csv):
    code, out = run(capsys, ["curve", "--input", str(step_csv), "--x-col", "x", "--y-col", "y",
                             "--k-max", "3", "--objective", "lsqm"])
    assert code == 0
    assert json.loads(out.out)["curve"] == [{"k": 1, "cost": 150.0}, {"k": 2, "cost": 0.0},
                                            {"k": 3, "cost": 0.0}]


@pytest.mark.parametrize("method, edges", [("equal-width", [3.5]), ("equal-frequency", [3.0])])
def test_baseline(capsys, step_csv, method, edges):
    code, out = run(capsys, ["baseline", "--input", str(step_csv), "--x-col", "x",
                             "--y-col", "y", "--k", "2", "--method", method])
    assert code == 0
    assert json.loads(out.out)["edges"] == edges


def test_compare(capsys):
    code, out = run(capsys, ["compare", "--cuts-a", "50", "--cuts-b", "48,60"])
    d = json.loads(out.out)
    assert code == 0
    assert d["score"] == 0.5 and d["label"] == "Medium"
    code, out = run(capsys, ["compare", "--cuts-a", "50", "--cuts-b", "48,60", "--tolerance", "0"])
    assert json.loads(out.out)["label"] == "No match"


def test_oracle_check(capsys):
    code, out = run(capsys, ["oracle-check", "--n", "7", "--k", "3", "--trials", "5", "--seed", "2"])
    assert code == 0
    assert json.loads(out.out)["passed"] is True


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["discretize", "--k", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["curve", "--input", "f", "--x-col", "x", "--y-col", "y", "--k-max", "2",
              "--objective", "median"])
    assert info.value.code == 2


def test_k_zero_is_usage_error(capsys, step_csv):
    code, out = run(capsys, ["discretize", "--input", str(step_csv), "--x-col", "x",
                             "--y-col", "y", "--k", "0"])
    assert code == 2


def test_data_error_exit_code(capsys, tmp_path):
    code, out = run(capsys, ["discretize", "--input", str(tmp_path / "nope.csv"), "--x-col", "x",
                             "--y-col", "y", "--k", "2"])
    assert code == 3
    assert "no such file" in out.err


def test_capacity_exit_codes(capsys, step_csv):
    code, _ = run(capsys, ["discretize", "--input", str(step_csv), "--x-col", "x", "--y-col", "y",
                           "--k", "7"])
    assert code == 4
    code, _ = run(capsys, ["discretize", "--input", str(step_csv), "--x-col", "x", "--y-col", "y",
                           "--k", "3", "--method", "brute", "--cap", "5"])
    assert code == 4
