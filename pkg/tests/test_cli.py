"""Command-line behavior: formats, exit codes, report schema."""

import json

import pytest

from altdes import cli
from altdes.cli import ResultRow, main, parse_poly_value
from altdes.polynomials import BiPolyTQ, IntPoly
from altdes.recurrences import five_term, quadratic_tq


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_alt_text(capsys):
    code, out, err = run(capsys, "compute", "alt", "--n", "5")
    assert code == 0 and err == ""
    assert out == "16 + 26t + 36t^2 + 26t^3 + 16t^4\n"


def test_compute_variants(capsys):
    code, out, _ = run(capsys, "compute", "simsun", "--n", "4")
    assert code == 0 and out == "1 + 11t + 4t^2\n"
    code, out, _ = run(capsys, "compute", "gamma", "--n", "5")
    assert code == 0 and out == "16 + 19x + 4x^2\n"
    code, out, _ = run(capsys, "compute", "gamma", "--n", "4", "--q")
    assert code == 0
    assert out.splitlines() == [
        "qgamma n=4 k=0 = 5",
        "qgamma n=4 k=1 = 2 + 4q + 2q^2",
    ]
    code, out, _ = run(capsys, "compute", "two-sided", "--n", "3")
    assert code == 0 and out == "1 + t^2 + 2st + s^2 + s^2t^2\n"


def test_compute_alt_q_json_roundtrip(capsys):
    code, out, _ = run(capsys, "compute", "alt", "--n", "6", "--q", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"command", "parameters", "results", "elapsed_ms"}
    assert report["command"] == "compute"
    assert report["parameters"] == {"table": "alt", "n": 6, "q": True}
    (row,) = report["results"]
    assert row["status"] == "pass"
    assert parse_poly_value(row["value"]) == quadratic_tq(6)


def test_json_univariate_roundtrip(capsys):
    code, out, _ = run(capsys, "compute", "alt", "--n", "7", "--format", "json")
    report = json.loads(out)
    assert report["results"][0]["value"] == list(five_term(7))
    assert parse_poly_value(report["results"][0]["value"]) == five_term(7)
    assert parse_poly_value([]) == IntPoly.zero()
    bi = [{"t_exp": 1, "q_exp": 2, "coeff": -3}]
    assert parse_poly_value(bi) == BiPolyTQ({(1, 2): -3})


def test_factor_outputs(capsys):
    code, out, _ = run(capsys, "factor", "--n", "6", "--format", "json")
    assert code == 0
    values = {r["name"]: r.get("value") for r in json.loads(out)["results"]}
    assert values["e_hat"] == [61, -87, 66, -82, 129, -82, 66, -87, 61]
    statuses = {r["name"]: r["status"] for r in json.loads(out)["results"]}
    assert statuses["e_hat_palindromic"] == "pass"
    assert statuses["constant_term_is_euler"] == "pass"
    code, out, _ = run(capsys, "factor", "--n", "3")
    assert out.splitlines() == [
        "g_n = 1 + q",
        "e_hat = 2 - q + 2q^2",
        "e_hat_palindromic: pass",
        "constant_term_is_euler: pass",
    ]


def test_oracle_output_and_csv(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "4", "--stat", "altdes")
    assert code == 0 and out == "altdes n=4 = 5 + 7t + 7t^2 + 5t^3\n"
    code, out, _ = run(capsys, "oracle", "--n", "3", "--stat", "maj",
                       "--format", "csv")
    assert out.splitlines() == [
        "name,exponent,coefficient",
        "maj n=3,0,1",
        "maj n=3,1,2",
        "maj n=3,2,2",
        "maj n=3,3,1",
    ]


def test_csv_bivariate(capsys):
    code, out, _ = run(capsys, "compute", "alt", "--n", "2", "--q",
                       "--format", "csv")
    # the name field holds a comma, so the csv writer quotes it
    assert out.splitlines() == [
        "name,t_exp,q_exp,coefficient",
        '"alt n=2 (t,q)",0,0,1',
        '"alt n=2 (t,q)",1,1,1',
    ]


def test_verify_text_and_exit(capsys):
    code, out, _ = run(capsys, "verify", "eq1", "--max-n", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "4/4 passed"
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "double-count", "--max-n", "3",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "name,status,witness"
    assert len(lines) == 4


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "thm3.1", "--max-n", "5",
                       "--format", "json")
    report = json.loads(out)
    assert report["command"] == "verify"
    assert report["parameters"]["token"] == "thm3.1"
    assert report["parameters"]["max_n"] == 5
    for row in report["results"]:
        assert row["status"] == "pass"
        assert "witness" not in row


def test_verify_failure_has_witness_and_exit_one(capsys, monkeypatch):
    rows = [ResultRow("forced", "fail", witness="broken")]
    monkeypatch.setitem(cli.VERIFY_HANDLERS, "eq1", (3, lambda m, c: rows))
    code, out, _ = run(capsys, "verify", "eq1", "--format", "json")
    assert code == 1
    report = json.loads(out)
    assert report["results"][0]["witness"] == "broken"


def test_finding_exits_one(capsys, monkeypatch):
    rows = [ResultRow("open case", "finding", witness="counterexample n=3")]
    monkeypatch.setitem(cli.VERIFY_HANDLERS, "conj5.1", (3, lambda m, c: rows))
    code, out, _ = run(capsys, "verify", "conj5.1")
    assert code == 1
    assert out.splitlines()[0].startswith("FINDING")


def test_usage_errors(capsys):
    assert run(capsys, "verify", "nosuch")[0] == 2
    assert run(capsys, "compute", "simsun", "--n", "3", "--q")[0] == 2
    assert run(capsys, "compute", "alt")[0] == 2
    assert run(capsys, "verify", "eq1", "--max-n", "0")[0] == 2
    assert run(capsys, "oracle", "--n", "3", "--stat", "des")[0] == 2
    code, _, err = run(capsys, "oracle", "--n", "30", "--stat", "altmaj")
    assert code == 2 and "exceeds" in err
    assert run(capsys, "compute", "alt", "--n", "3", "--jobs", "0")[0] == 2
    assert run(capsys, "factor", "--n", "1")[0] == 2


def test_brute_max_flag_and_env(capsys, monkeypatch):
    code, _, err = run(capsys, "compute", "two-sided", "--n", "6",
                       "--brute-max", "5")
    assert code == 2 and "exceeds" in err
    monkeypatch.setenv("ALTDES_BRUTE_MAX", "5")
    assert run(capsys, "compute", "two-sided", "--n", "6")[0] == 2
    assert run(capsys, "compute", "two-sided", "--n", "5")[0] == 0
    monkeypatch.setenv("ALTDES_BRUTE_MAX", "many")
    assert run(capsys, "compute", "two-sided", "--n", "3")[0] == 2
    # an explicit flag wins over the environment
    monkeypatch.setenv("ALTDES_BRUTE_MAX", "4")
    assert run(capsys, "compute", "two-sided", "--n", "6",
               "--brute-max", "7")[0] == 0


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "eq2", "--max-n", "6",
                       "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    report = json.loads(target.read_text())
    assert report["parameters"]["max_n"] == 6


def test_reports_are_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "thm4.5", "--max-n", "8", "--format", "csv")
    _, b, _ = run(capsys, "verify", "thm4.5", "--max-n", "8", "--format", "csv")
    assert a == b
    _, ja, _ = run(capsys, "verify", "thm4.5", "--max-n", "8", "--format", "json")
    _, jb, _ = run(capsys, "verify", "thm4.5", "--max-n", "8", "--format", "json")
    da, db = json.loads(ja), json.loads(jb)
    da.pop("elapsed_ms"), db.pop("elapsed_ms")
    assert da == db


def test_jobs_flag_passes_through(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "6", "--stat", "altdes",
                       "--jobs", "2")
    assert code == 0
    assert out == "altdes n=6 = 61 + 117t + 182t^2 + 182t^3 + 117t^4 + 61t^5\n"


def test_every_token_has_a_handler():
    assert set(cli.VERIFY_TOKENS) == set(cli.VERIFY_HANDLERS)
    for token, (default_max, handler) in cli.VERIFY_HANDLERS.items():
        assert default_max >= 1 and callable(handler)
