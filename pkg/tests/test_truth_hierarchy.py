import pytest

from scripts.arithmetization import encode, quote
from scripts.satisfaction import Budget
from scripts.syntax import Not, Rel, parse_formula
from scripts.truth_hierarchy import (
    LevelError, check_level, coherence_check, dereference_chain, dereference_witness, eval_level,
    formula_level, language_level, level_liar, level_verdicts, sentence_of_level, tr_index, tr_name,
)

BUDGET = Budget(witness_bound=16, depth_bound=8)


def test_language_levels():
    assert language_level(0).relation_arity("Tr0") is None
    sig = language_level(2)
    assert sig.relation_arity("Tr0") == 1 and sig.relation_arity("Tr1") == 1
    assert sig.relation_arity("Tr2") is None
    assert sig.level == 2
    with pytest.raises(LevelError):
        language_level(5)
    with pytest.raises(LevelError):
        language_level(2, max_level=1)


def test_tr_names():
    assert tr_name(3) == "Tr3"
    assert tr_index("Tr12") == 12
    assert tr_index("Tr01") is None and tr_index("T0") is None


def test_formula_level():
    phi = parse_formula("Tr0(5) & ~Tr2(7)", language_level(3))
    assert formula_level(phi) == 3
    assert formula_level(parse_formula("0 = 0")) == 0
    with pytest.raises(LevelError):
        check_level(phi, 2)


def test_truth_of_quoted_sentences():
    true_code, false_code = encode(parse_formula("0 < 1")), encode(parse_formula("1 < 0"))
    assert eval_level(Rel("Tr0", (quote(parse_formula("0 < 1")),)), 1, budget=BUDGET).is_true
    assert eval_level(Rel("Tr0", (quote(parse_formula("1 < 0")),)), 1, budget=BUDGET).is_false
    assert true_code != false_code


def test_non_codes_are_not_true():
    assert eval_level(parse_formula("Tr0(5)", language_level(1)), 1, budget=BUDGET).is_false
    # a code of a level-1 sentence is not a level-0 sentence
    inner = Rel("Tr0", (quote(parse_formula("0 = 0")),))
    assert eval_level(Rel("Tr0", (quote(inner),)), 1, budget=BUDGET).is_false
    assert sentence_of_level(encode(inner), 0) is None
    assert sentence_of_level(encode(inner), 1) == inner


def test_open_formulas_are_not_sentences():
    assert sentence_of_level(encode(parse_formula("x = 0")), 0) is None


@pytest.mark.parametrize("k", [1, 2, 3])
def test_dereference_sentences_are_true(k):
    assert eval_level(dereference_chain(k), k, budget=BUDGET).is_true
    assert eval_level(dereference_witness(k), k, budget=BUDGET).is_true
    assert formula_level(dereference_chain(k)) == k


@pytest.mark.parametrize("k", [1, 2, 3])
def test_level_liar_is_true(k):
    sigma = level_liar(k)
    assert formula_level(sigma) == k
    assert eval_level(sigma, k, budget=BUDGET).is_true


def test_level_liar_needs_a_truth_predicate():
    with pytest.raises(LevelError):
        level_liar(0)


def test_dereference_costs_depth():
    shallow = Budget(witness_bound=16, depth_bound=1)
    assert eval_level(dereference_chain(3), 3, budget=shallow).is_unknown


def test_coherence_between_levels():
    corpus = [parse_formula(t) for t in ["0 = 0", "1 < 0", "exists x. x < 3 & 1 < x", "forall x. x < 2 -> x < 3"]]
    corpus.append(dereference_chain(1))
    report = coherence_check(1, 3, corpus, BUDGET)
    assert report.disagreements == 0
    assert report.unknowns == 0
    assert list(report.table.columns) == ["sentence", "code", "level_1", "level_3", "status"]
    assert set(report.to_record()) == {"j", "k", "disagreements", "unknowns", "rows"}


def test_coherence_needs_ordered_levels():
    with pytest.raises(LevelError):
        coherence_check(2, 1, [], BUDGET)


def test_coherence_rejects_higher_sentences():
    with pytest.raises(LevelError):
        coherence_check(0, 2, [dereference_chain(1)], BUDGET)


def test_level_verdicts_skip_lower_levels():
    rows = level_verdicts(level_liar(2), range(4), BUDGET)
    assert [row["level"] for row in rows] == [2, 3]
    assert all(row["verdict"] == "true" for row in rows)
    assert level_verdicts(Not(parse_formula("0 = 1")), [0], BUDGET)[0]["verdict"] == "true"
