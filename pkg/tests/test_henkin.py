import pytest

from scripts.henkin import (
    HenkinState, OracleInconsistencyError, SentenceEnumerator, WitnessRecord, abstract_witnesses, constant_oracle,
    henkin_extend, incomplete_sentences, missing_witnesses, oracle_agreement, presburger_oracle, standardize,
    term_model,
)
from scripts.presburger import decide
from scripts.syntax import PRESBURGER, Const, Eq, Exists, Not, Rel, Var, formula_size, is_sentence, numeral, parse_formula


@pytest.fixture(scope="module")
def one_round():
    return henkin_extend(presburger_oracle(), depth=1, size_cap=4)


def test_enumerator_starts_with_atoms():
    sentences = SentenceEnumerator(PRESBURGER).sentences(3)
    assert len(sentences) == 8
    assert parse_formula("0 < 1", PRESBURGER) in sentences
    assert all(is_sentence(phi) for phi in sentences)


def test_enumerator_order_and_quantifiers():
    sentences = SentenceEnumerator(PRESBURGER).sentences(4)
    sizes = [formula_size(phi) for phi in sentences]
    assert sizes == sorted(sizes)
    assert len(sentences) == 8 + 8 + 18
    assert parse_formula("exists x. 1 < x", PRESBURGER) in sentences


def test_atoms_only():
    state = henkin_extend(presburger_oracle(), depth=1, size_cap=3)
    assert state.witness_records == ()
    assert state.accepts(parse_formula("0 < 1", PRESBURGER))
    assert state.accepts(Not(parse_formula("1 = 0", PRESBURGER)))
    model = term_model(state, presburger_oracle())
    assert model.classes == [(Const("0"),), (Const("1"),)]


def test_completion_is_complete_and_witnessed(one_round):
    assert incomplete_sentences(one_round) == []
    assert missing_witnesses(one_round) == []
    assert len(one_round.witness_records) == 11
    assert one_round.constant_pool[0] == "c0"


def test_least_witness_values(one_round):
    values = {record.existential: record.value for record in one_round.witness_records}
    assert values[parse_formula("exists x. 1 < x", PRESBURGER)] == 2
    assert values[parse_formula("exists x. x = 1", PRESBURGER)] == 1
    assert values[parse_formula("exists x. x = x", PRESBURGER)] == 0


def test_document(one_round):
    document = one_round.to_document()
    assert document["depth"] == 1 and document["size_cap"] == 4
    assert len(document["witnesses"]) == len(document["constant_pool"]) == 11
    assert "0 < 1" in document["accepted"]


def test_term_model_decides_atoms(one_round):
    model = term_model(one_round, presburger_oracle())
    assert model.evaluate(parse_formula("exists x. 1 < x", PRESBURGER)).is_true
    assert model.evaluate(parse_formula("0 < 1", PRESBURGER)).is_true
    assert model.evaluate(parse_formula("1 < 0", PRESBURGER)).is_false
    assert model.evaluate(parse_formula("0 + 1 = 1", PRESBURGER)).is_true
    assert model.evaluate(parse_formula("0 + 1 < 0", PRESBURGER)).is_false
    assert model.evaluate(parse_formula("exists x. x < x", PRESBURGER)).is_false
    assert model.evaluate(parse_formula("exists x. ~(x = x)", PRESBURGER)).is_false
    assert model.evaluate(parse_formula("1 + 1 + 1 = 0", PRESBURGER)).is_unknown
    assert model.to_document()["partial"]


def test_oracle_agreement(one_round):
    sentences = [parse_formula(text, PRESBURGER) for text in
                 ["0 < 1", "~(1 < 0)", "exists x. 1 < x", "1 + 1 + 1 = 0"]]
    table = oracle_agreement(one_round, presburger_oracle(), sentences)
    assert list(table.columns) == ["sentence", "term_model", "oracle", "status"]
    assert "disagree" not in set(table["status"])
    assert table["status"].iloc[-1] == "unknown"


def test_abstraction_of_unresolved_witnesses():
    record = WitnessRecord("c0", parse_formula("exists x. 1 < x", PRESBURGER))
    assert decide(abstract_witnesses(Eq(Const("c0"), numeral(2)), [record]))
    assert not decide(abstract_witnesses(Eq(Const("c0"), numeral(3)), [record]))
    resolved = WitnessRecord("c0", record.existential, 2)
    assert abstract_witnesses(Rel("<", (Const("1"), Const("c0"))), [resolved]) == \
        Rel("<", (Const("1"), numeral(2)))


@pytest.mark.parametrize("value, both", [(True, True), (False, False)])
def test_inconsistent_oracles(value, both):
    with pytest.raises(OracleInconsistencyError, match="validates both" if both else "validates neither"):
        henkin_extend(constant_oracle(value), depth=1, size_cap=3)


def test_bad_parameters():
    with pytest.raises(ValueError):
        henkin_extend(presburger_oracle(), depth=-1, size_cap=3)


def test_enumerated_fragment_is_decided(one_round):
    table = oracle_agreement(one_round, presburger_oracle(), SentenceEnumerator(PRESBURGER).sentences(5))
    assert set(table["status"]) == {"agree"}


def test_classes_are_the_values(one_round):
    model = term_model(one_round, presburger_oracle())
    assert model.size == 3
    two = model.term_class(parse_formula("1 + 1 = 0", PRESBURGER).left)
    witness = one_round.witnesses[parse_formula("exists x. 1 < x", PRESBURGER)]
    assert two == model.class_of[Const(witness)]


def test_empty_state():
    model = term_model(HenkinState(PRESBURGER), presburger_oracle())
    assert model.size == 0
    assert model.evaluate(parse_formula("forall x. x = x", PRESBURGER)).is_true


def test_standardize():
    assert standardize(parse_formula("exists x. exists y. y < 0", PRESBURGER)) == \
        parse_formula("exists x. x < 0", PRESBURGER)
    assert standardize(parse_formula("forall y. exists z. z = y", PRESBURGER)) == \
        Not(Exists(0, Not(Exists(1, Eq(Var(1), Var(0))))))
