import json

import pytest

from scripts.cli import main


@pytest.fixture(autouse=True)
def no_budget_override(monkeypatch):
    monkeypatch.delenv("WORKBENCH_BUDGET", raising=False)


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_eval_over_the_naturals(capsys):
    code, report = run_json(capsys, "eval", "forall x. x < 5 -> x < 6")
    assert code == 0
    assert set(report) == {"command", "status", "result"}
    assert report["result"]["verdict"] == "true"
    code, report = run_json(capsys, "eval", "1 + 1 = 0")
    assert (code, report["result"]["verdict"]) == (0, "false")


def test_eval_with_an_assignment(capsys):
    code, report = run_json(capsys, "eval", "x + y = 5", "--assign", "x=2", "--assign", "y=3")
    assert (code, report["result"]["verdict"]) == (0, "true")


def test_eval_reports_unknown(capsys):
    code, report = run_json(capsys, "eval", "exists x. ~(x = x)", "--budget", "8,4")
    assert code == 2
    assert report["status"] == "unknown"
    assert "budget exhausted" in report["result"]["reason"]


def test_eval_over_a_structure(capsys, data_dir):
    code = main(["eval", "forall x. exists y. E(x, y)", "--structure", str(data_dir / "three_cycle.json")])
    out = capsys.readouterr().out
    assert code == 0
    assert ": true" in out and out.rstrip().endswith("status: ok")


def test_errors_exit_with_one(capsys):
    assert main(["eval", "x = $"]) == 1
    assert capsys.readouterr().err.startswith("error:")
    assert main(["eval", "x = y", "--assign", "x"]) == 1
    assert main(["eval", "0 = 0", "--budget", "0,0"]) == 1
    assert main(["backforth", "missing.json", "missing.json"]) == 1


def test_formula_from_a_file(capsys, tmp_path):
    path = tmp_path / "formula.txt"
    path.write_text("exists x. x + x = 6\n")
    code, report = run_json(capsys, "eval", f"@{path}")
    assert (code, report["result"]["verdict"]) == (0, "true")


def test_liar(capsys):
    code, report = run_json(capsys, "liar", "x = x")
    assert code == 0
    assert report["command"] == "liar"


def test_presburger_commands(capsys):
    code, report = run_json(capsys, "presburger", "decide", "forall x. exists y. x = y + y | x = y + y + 1")
    assert (code, report["result"]["value"]) == (0, True)
    code, report = run_json(capsys, "presburger", "eliminate", "exists y. x = y + y + y + 1")
    assert "div(3" in report["result"]["eliminated"]
    code, report = run_json(capsys, "presburger", "period", "exists y. x = y + y", "--verify", "100")
    assert (report["result"]["threshold"], report["result"]["period"]) == (0, 2)
    code, report = run_json(capsys, "presburger", "refute", "evens", "--bound", "500")
    assert code == 0 and not report["result"]["refuted"]
    assert main(["presburger", "refute", "primes"]) == 1


def test_disagree(capsys, data_dir):
    code, report = run_json(capsys, "disagree", str(data_dir / "three_cycle.json"),
                            str(data_dir / "three_cycle_subset.json"))
    result = report["result"]
    assert code == 0
    assert result["orbits"] == [[0, 1, 2]]
    assert result["witness"] == {"pi": [2, 0, 1], "s": 0, "t": 1, "fixed_params": []}
    assert result["image"] == [2]
    assert len(result["expansions"]) == 2
    code, report = run_json(capsys, "disagree", str(data_dir / "three_cycle.json"),
                            str(data_dir / "three_cycle_subset.json"), "--params", "0")
    assert report["result"]["definable"]


def test_backforth(capsys, data_dir):
    code, report = run_json(capsys, "backforth", str(data_dir / "linear_order.json"),
                            str(data_dir / "linear_order_flipped.json"))
    assert report["result"] == {"isomorphic": True, "mapping": [1, 0]}


def test_force(capsys):
    code, report = run_json(capsys, "force", 'contains("11")', "never()", "--bound", "4", "--section", "0")
    assert code == 0
    assert report["result"]["condition"] == "11"
    assert [row["status"] for row in report["result"]["statuses"]] == ["met", "sealed"]
    assert report["result"]["section"]["bits"][0] == 1


def test_henkin(capsys):
    code, report = run_json(capsys, "henkin", "--depth", "1", "--size-cap", "3")
    assert code == 0
    assert report["result"]["term_model"]["classes"] == [["0"], ["1"]]


def test_hierarchy(capsys):
    code, report = run_json(capsys, "hierarchy", "0 = 0", "--levels", "0,1")
    assert code == 0
    assert [row["level"] for row in report["result"]["rows"]] == [0, 1]


def test_suite_command(capsys):
    code, report = run_json(capsys, "suite", "--filter", "forcing")
    assert code == 0
    assert report["result"]["criteria"][0]["criterion"] == "forcing-skeleton"
