import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from simspec import checks, cli
from simspec.report import VerificationReport

GOLDEN = Path(__file__).parent / "golden"
PATH = "[[1, 2], [2, 3]]"
FIXTURES = Path(checks.__file__).parent / "fixtures"


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("kind", ["L", "D", "H", "g", "LmG"])
def test_matrix_matches_golden(kind, capsys):
    code, out, _ = run(["matrix", "--kind", kind, "-k", "1", "--inline", PATH], capsys)
    assert code == 0
    assert out == (GOLDEN / f"path_{kind}.json").read_text()


def test_matrix_csv(capsys):
    code, out, _ = run(["matrix", "--kind", "R", "-k", "1", "--inline", PATH, "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert [rows[i][i] for i in range(9)] == ["-1", "-1", "-1", "1", "1", "1", "1", "1", "1"]


def test_info(capsys):
    code, out, _ = run(["info", "--inline", PATH], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["fvector"] == [3, 2] and data["chi"] == 1 and data["wu"] == -1
    assert data["betti"] == {"hodge": [1, 0], "combinatorial": [1, 0]}
    code, out, _ = run(["info", "--inline", "[[1, 2, 3]]"], capsys)
    assert "combinatorial" not in json.loads(out)["betti"]


def test_refine_default_once(capsys):
    code, out, _ = run(["refine", "--inline", PATH], capsys)
    assert json.loads(out) == [[1], [2], [3], [4], [5], [1, 4], [2, 4], [2, 5], [3, 5]]
    code, out, _ = run(["refine", "-k", "0", "--inline", PATH], capsys)
    assert json.loads(out) == [[1], [2], [3], [1, 2], [2, 3]]


def test_spectrum(capsys):
    code, out, _ = run(["spectrum", "--operator", "H", "-k", "1", "--inline", PATH], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["inertia"] == {"p": 8, "n": 0, "z": 1}
    assert data["eigenvalues"][0] == 3.61803 and data["eigenvalues"][-1] == 0.0
    assert data["multiplicities"] == {"-1": 0, "0": 1, "1": 0}
    code, out, _ = run(["spectrum", "--operator", "L", "-k", "1", "--inline", PATH, "--exact", "1", "1/2", "-1"], capsys)
    assert json.loads(out)["multiplicities"] == {"-1": 0, "1/2": 0, "1": 1}
    code, out, _ = run(["spectrum", "-k", "1", "--inline", PATH, "--exact=-1/2"], capsys)
    assert json.loads(out)["multiplicities"] == {"-1/2": 0}
    code, out, _ = run(["spectrum", "--operator", "H1", "-k", "1", "--inline", PATH, "--format", "csv"], capsys)
    assert out.splitlines()[0] == "eigenvalue" and len(out.splitlines()) == 5


def test_betti_all_figure_eight(capsys):
    code, out, _ = run(["betti", "--method", "all", "-k", "1", str(FIXTURES / "figure_eight.json")], capsys)
    data = json.loads(out)
    assert code == 0
    assert {d["method"] for d in data} == {"hodge", "kirchhoff", "hodge-spectrum", "connection", "combinatorial"}
    assert all(d["betti"] == [1, 2] for d in data)


def test_betti_precondition_exit_2(capsys):
    code, out, err = run(["betti", "--method", "connection", "--inline", PATH], capsys)
    assert code == 2 and out == "" and "refinement" in err


def test_verify_hydrogen_on_refined_path(capsys):
    code, out, _ = run(["verify", "--check", "hydrogen", "-k", "1", "--inline", PATH], capsys)
    (report,) = json.loads(out)
    assert code == 0
    assert report["pass"] and report["details"]["max-abs-diff"] == 0


def test_verify_all_on_fixtures(capsys):
    code, out, _ = run(["verify", "--check", "all"], capsys)
    data = json.loads(out)
    assert code == 0
    assert [d["check"] for d in data] == sorted(checks.CHECK_NAMES)
    assert all(d["pass"] for d in data)


def test_verify_all_skips_inapplicable(capsys):
    code, out, _ = run(["verify", "--check", "all", "--inline", "[[1, 2, 3]]"], capsys)
    names = [d["check"] for d in json.loads(out)]
    assert code == 0
    assert "hydrogen" not in names and "functional-eq" not in names and "green-star" in names


def test_verify_failure_exit_1(capsys, monkeypatch):
    def broken(K):
        return VerificationReport("energy", False, {"sum": "g", "expected": 1, "actual": 2})

    monkeypatch.setitem(checks.GENERAL, "energy", broken)
    code, out, _ = run(["verify", "--check", "energy", "--inline", PATH], capsys)
    (report,) = json.loads(out)
    assert code == 1
    assert report["pass"] is False and report["witness"]["actual"] == 2


def test_random_and_seed_env(capsys, monkeypatch):
    code, out, _ = run(["random", "--n", "4", "--m", "6", "--seed", "42"], capsys)
    assert code == 0 and json.loads(out) == [[1], [2], [3], [4], [1, 2], [1, 3]]
    monkeypatch.setenv("SIMSPEC_SEED", "42")
    _, again, _ = run(["random", "--n", "4", "--m", "6", "--seed", "7"], capsys)
    assert again == out
    monkeypatch.setenv("SIMSPEC_SEED", "x")
    code, _, err = run(["random", "--n", "4", "--m", "6"], capsys)
    assert code == 2 and "SIMSPEC_SEED" in err


def test_experiment_b2(capsys):
    code, out, _ = run(["experiment", "b2", "--trials", "2", "--n", "5", "--m", "5", "--seed", "3"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 2


def test_stdin_and_edges(capsys, monkeypatch):
    code, out, _ = run(["info", "-"], capsys, stdin=PATH, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["fvector"] == [3, 2]
    code, out, _ = run(["info", "-", "--input-format", "edges"], capsys, stdin="1 2\n2 3\n", monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["fvector"] == [3, 2]


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["info", "--inline", "[[1, 2]"], "line 1 column"),
        (["info", "--inline", "[[0]]"], "positive"),
        (["info"], "no input"),
        (["info", "/nonexistent.json"], "cannot read"),
        (["matrix", "--kind", "Y", "-k", "1", "--inline", "[[1, 2, 3]]"], "parity"),
        (["matrix", "--kind", "R", "--inline", PATH], "Barycentric"),
        (["matrix", "--kind", "Q", "--inline", PATH], "unknown operator"),
        (["verify", "--check", "functional-eq", "--inline", "[[1, 2, 3]]"], "dimension"),
        (["random", "--n", "0", "--m", "3"], ">= 1"),
    ],
)
def test_input_errors_exit_2(argv, fragment, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2 and out == ""
    assert fragment in err


def test_unknown_option_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.run(["info", "--bogus"])
    assert exc.value.code == 2


def test_console_script_deterministic():
    cmd = [sys.executable, "-m", "simspec.cli", "spectrum", "--operator", "L", "-k", "2", "--inline", PATH]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["inertia"]["p"] - json.loads(a)["inertia"]["n"] == 1
