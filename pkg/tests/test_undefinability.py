import pytest

from scripts.arithmetization import encode, liar
from scripts.satisfaction import Budget
from scripts.syntax import ARITHMETIC_CODED, FreeVariableError, UnknownSymbolError, parse_formula
from scripts.undefinability import tarski_demonstrate

BUDGET = Budget(witness_bound=32, depth_bound=8)


@pytest.mark.parametrize("text", ["x = x", "exists y. x = y + y", "x < 1000", "~(x = 0)"])
def test_candidates_disagree_on_their_liar(text):
    phi = parse_formula(text, ARITHMETIC_CODED)
    report = tarski_demonstrate(phi, BUDGET)
    assert report.disagreement is True
    assert report.sigma == liar(phi)
    assert report.sigma_code == encode(report.sigma)
    assert report.conclusion.startswith("disagreement")


def test_unsearchable_candidate_is_unknown():
    phi = parse_formula("exists y. ~(y = y) & x = x", ARITHMETIC_CODED)
    report = tarski_demonstrate(phi, BUDGET)
    assert report.disagreement is None
    record = report.to_record()
    assert record["conclusion"].startswith("unknown")
    assert record["sigma_verdict"] == "unknown"


def test_record_shape():
    report = tarski_demonstrate(parse_formula("x = x", ARITHMETIC_CODED), BUDGET)
    record = report.to_record()
    assert set(record) == {"candidate", "sigma", "sigma_code", "sigma_verdict", "candidate_verdict", "conclusion"}
    assert record["candidate"] == "x = x"
    assert record["sigma_verdict"] == "false" and record["candidate_verdict"] == "true"


def test_candidate_must_be_unary():
    with pytest.raises(FreeVariableError):
        tarski_demonstrate(parse_formula("x = y", ARITHMETIC_CODED), BUDGET)


def test_candidate_outside_the_language():
    sig = ARITHMETIC_CODED.extend(relations=(("T", 1),))
    with pytest.raises(UnknownSymbolError):
        tarski_demonstrate(parse_formula("T(x)", sig), BUDGET)
