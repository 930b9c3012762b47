"""Command line contract: exit codes, determinism, schemas, failure diffs."""

import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from affine_verma import cli, singular

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def load_schema(name):
    with open(SCHEMA_DIR / name) as fh:
        return json.load(fh)


def run_cli(*argv, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "affine_verma.cli", *argv],
        capture_output=True, text=True, env=full_env)


def main_json(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


# ---- exit codes -----------------------------------------------------------------


def test_usage_errors_exit_two(capsys):
    cases = [
        ["dump-algebra", "--type", "B", "--l", "3"],
        ["dump-algebra", "--type", "E", "--l", "4"],
        ["verify", "triality", "--l", "5"],
        ["verify", "singular", "--l", "4"],
        ["verify", "unknown", "--l", "4"],
        ["verify", "embedding"],
        ["verify", "all", "--l-range", "6..4"],
        ["verify", "all", "--l-range", "2..4"],
        ["verify", "singular", "--type", "B", "--l", "4", "--jobs", "0"],
        ["verify", "admissible", "--l", "4", "--mode-bound", "0"],
    ]
    for argv in cases:
        assert cli.main(argv) == 2, argv
        capsys.readouterr()


def test_passing_checks_exit_zero(capsys):
    code, rep = main_json(capsys, "verify", "singular", "--type", "B",
                          "--l", "4")
    assert code == 0 and rep["passed"] is True
    code, rep = main_json(capsys, "verify", "triality", "--l", "4")
    assert code == 0 and rep["passed"] is True


def test_corrupted_vector_fails_with_monomial_diff(capsys, monkeypatch):
    true_families = singular.term_families

    def corrupted(alg):
        if alg.kind != "D":
            return true_families(alg)
        fams = [list(f) for f in true_families(alg)]
        coeff, factors = fams[0][0]
        fams[0][0] = (coeff * 3, factors)
        return tuple(fams)

    monkeypatch.setattr(singular, "term_families", corrupted)
    code, rep = main_json(capsys, "verify", "singular", "--type", "D",
                          "--l", "4")
    assert code == 1
    assert rep["passed"] is False
    failing = [op for op in rep["operators"] if not op["kills"]]
    assert failing
    for op in failing:
        assert op["residual"], "diff must list surviving monomials"
        for term in op["residual"]:
            assert term["monomial"]

    # the same corruption surfaces through the aggregate run
    code = cli.main(["verify", "all", "--l-range", "4..4", "--jobs", "1"])
    out = json.loads(capsys.readouterr().out)
    assert code == 1
    assert out["passed"] is False
    bad = {(s["check"], s["type"]) for s in out["summary"] if not s["passed"]}
    # the embedding certificate consumes the vector, so it breaks too
    assert bad == {("singular", "D"), ("embedding", None)}


# ---- determinism ----------------------------------------------------------------


def test_byte_identical_runs():
    first = run_cli("verify", "conformal", "--l", "4")
    second = run_cli("verify", "conformal", "--l", "4")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.strip()


def test_parallel_matches_sequential():
    seq = run_cli("verify", "all", "--l-range", "4..4", "--jobs", "1")
    par = run_cli("verify", "all", "--l-range", "4..4", "--jobs", "2")
    assert seq.returncode == par.returncode == 0
    assert seq.stdout == par.stdout


def test_fraction_rendering(capsys):
    code, rep = main_json(capsys, "verify", "conformal", "--l", "5")
    assert code == 0
    assert rep["level"] == "-7/2"
    assert rep["central_charge_B"] == "-35"


# ---- dump-algebra ---------------------------------------------------------------


def test_dump_round_trip(capsys):
    code, dump = main_json(capsys, "dump-algebra", "--type", "D", "--l", "4")
    assert code == 0
    assert dump["dim"] == 28
    assert len(dump["basis"]) == 28
    blob = json.dumps(dump, sort_keys=True, indent=2) + "\n"
    assert json.loads(blob) == dump
    code2, dump2 = main_json(capsys, "dump-algebra", "--type", "D",
                             "--l", "4")
    assert dump2 == dump


def test_dump_matches_schema(capsys):
    schema = load_schema("dump_algebra.schema.json")
    for kind in ("B", "D"):
        code, dump = main_json(capsys, "dump-algebra", "--type", kind,
                               "--l", "4")
        assert code == 0
        jsonschema.validate(dump, schema)


# ---- schemas for verify ---------------------------------------------------------


@pytest.mark.parametrize("argv", [
    ["verify", "singular", "--type", "B", "--l", "4"],
    ["verify", "singular", "--type", "D", "--l", "4", "--strict"],
    ["verify", "embedding", "--l", "4"],
    ["verify", "conformal", "--l", "4"],
    ["verify", "admissible", "--l", "4"],
    ["verify", "triality", "--l", "4"],
    ["verify", "appendix", "--l", "4"],
    ["verify", "all", "--l-range", "4..4", "--jobs", "1"],
])
def test_verify_reports_match_schema(capsys, argv):
    schema = load_schema("verify_report.schema.json")
    code, rep = main_json(capsys, *argv)
    assert code == 0
    jsonschema.validate(rep, schema)


# ---- flags ----------------------------------------------------------------------


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = cli.main(["verify", "embedding", "--l", "4",
                     "--out", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    rep = json.loads(target.read_text())
    assert rep["check"] == "embedding"


def test_human_rendering(capsys):
    code = cli.main(["verify", "all", "--l-range", "4..4", "--jobs", "1",
                     "--human"])
    out = capsys.readouterr().out
    assert code == 0
    assert "overall: pass" in out
    assert "singular" in out and "triality" in out
    code = cli.main(["verify", "conformal", "--l", "4", "--human"])
    out = capsys.readouterr().out
    assert code == 0
    assert "passed: True" in out


def test_mode_bound_env_and_flag_priority():
    env_run = run_cli("verify", "admissible", "--l", "4",
                      env={"AFFINE_VERMA_MODE_BOUND": "25"})
    assert env_run.returncode == 0
    assert json.loads(env_run.stdout)["mode_bound"] == 25
    flag_run = run_cli("verify", "admissible", "--l", "4",
                       "--mode-bound", "30",
                       env={"AFFINE_VERMA_MODE_BOUND": "25"})
    assert json.loads(flag_run.stdout)["mode_bound"] == 30


def test_verify_all_default_range(capsys):
    # --l N is accepted as a one-rank range
    code, rep = main_json(capsys, "verify", "all", "--l", "4", "--jobs", "1")
    assert code == 0
    assert rep["l_values"] == [4]
    # triality included exactly at rank 4
    checks = [(s["check"], s["l"]) for s in rep["summary"]]
    assert ("triality", 4) in checks


def test_verify_all_range_contents(capsys):
    code, rep = main_json(capsys, "verify", "all", "--l-range", "4..5",
                          "--jobs", "1")
    assert code == 0
    per_l = {}
    for s in rep["summary"]:
        per_l.setdefault(s["l"], []).append(s["check"])
    assert set(per_l) == {4, 5}
    for l, names in per_l.items():
        expect = {"singular", "embedding", "conformal", "admissible",
                  "appendix"}
        if l == 4:
            expect.add("triality")
        assert set(names) == expect
        assert names.count("singular") == 2
    assert len(rep["reports"]) == len(rep["summary"])
