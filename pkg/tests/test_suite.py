import re

import pandas as pd
import pytest

from scripts.config import RunConfig
from scripts.suite import CRITERIA, RIGS, run_suite, suite_exit_code


@pytest.fixture
def config():
    return RunConfig(command="suite")


def test_every_criterion_is_registered():
    assert len(CRITERIA) == 10
    assert "flip-truth-bit" in RIGS


@pytest.mark.parametrize("selection", ["forcing", "periodicity", "back-and-forth"])
def test_cheap_criteria_pass(config, selection):
    table = run_suite(config, selection)
    assert len(table) == 1
    assert table["status"].iloc[0] == "pass", table["detail"].iloc[0]
    assert suite_exit_code(table) == 0


@pytest.fixture
def reduced():
    return RunConfig(command="suite", henkin_depth=1)


@pytest.mark.parametrize("selection", [
    "tarski", "evaluator-oracle", "presburger-soundness", "definability", "henkin-fragment", "hierarchy-coherence",
])
def test_criteria_pass_at_a_reduced_setting(reduced, selection):
    table = run_suite(reduced, selection)
    assert len(table) == 1
    assert table["status"].iloc[0] == "pass", table["detail"].iloc[0]


def test_diagonal_laws_hold_where_determined(reduced):
    table = run_suite(reduced, "diagonal-laws")
    assert table["status"].iloc[0] in ("pass", "undetermined"), table["detail"].iloc[0]
    assert " 0 law violations" in table["detail"].iloc[0]


def test_henkin_fragment_is_fully_decided(reduced):
    detail = run_suite(reduced, "henkin")["detail"].iloc[0]
    assert re.search(r"; 0 of [1-9]\d* enumerated sentences undetermined;", detail), detail


def test_rigged_truth_set_fails(config):
    table = run_suite(config, "tarski", rig="flip-truth-bit")
    assert list(table["status"]) == ["fail"]
    assert "1 truth sets rejected" in table["detail"].iloc[0]
    assert suite_exit_code(table) == 1


def test_results_repeat(config):
    assert run_suite(config, "forcing").equals(run_suite(config, "forcing"))


def test_unknown_rig(config):
    with pytest.raises(ValueError, match="unknown rig"):
        run_suite(config, rig="flip-everything")


def test_exit_codes():
    def table(*statuses):
        return pd.DataFrame({"criterion": [f"c{i}" for i in range(len(statuses))], "status": list(statuses),
                             "detail": [""] * len(statuses)})
    assert suite_exit_code(table("pass", "pass")) == 0
    assert suite_exit_code(table("pass", "undetermined")) == 2
    assert suite_exit_code(table("undetermined", "fail")) == 1
    assert suite_exit_code(run_suite(RunConfig(), "no-such-criterion")) == 0
