import numpy as np
import pytest

from scripts.arithmetization import encode
from scripts.generators import FormulaGenerator, arithmetic_sentences, random_structure
from scripts.satisfaction import (
    FALSE, TRUE, Budget, FiniteStructure, NaturalsEvaluator, StructureError, TruthValue3,
    UnassignedVariableError, check_truth_conditions, element_const, eval_expanded, eval_finite,
    eval_nat, exact_truth_set, real_violations, subsentence_closure, violations_table,
)
from scripts.syntax import ARITHMETIC_CODED, Not, Signature, parse_formula

GRAPH = Signature(constants=("c",), functions=(("f", 1),), relations=(("E", 2), ("P", 1)))


def test_eval_finite(three_cycle):
    sig = three_cycle.named_signature
    assert eval_finite(three_cycle, parse_formula("forall x. exists y. E(x, y)", sig))
    assert not eval_finite(three_cycle, parse_formula("exists x. E(x, x)", sig))
    assert eval_finite(three_cycle, parse_formula("E(_e2, _e0)", sig))
    assert eval_finite(three_cycle, parse_formula("E(x, y)", sig), {0: 1, 1: 2})


def test_unassigned_variables(three_cycle):
    phi = parse_formula("E(x, y)", three_cycle.named_signature)
    with pytest.raises(UnassignedVariableError):
        eval_finite(three_cycle, phi, {0: 0})


def test_functions_and_constants():
    S = FiniteStructure.from_tables(2, GRAPH, constants={"c": 1},
                                    functions={"f": {(0,): 1, (1,): 0}},
                                    relations={"E": [], "P": [(0,)]})
    assert eval_finite(S, parse_formula("P(f(c))", GRAPH))
    assert eval_finite(S, parse_formula("forall x. f(f(x)) = x", GRAPH))


def test_bad_structures():
    with pytest.raises(StructureError):
        FiniteStructure(0, Signature())
    with pytest.raises(StructureError):
        FiniteStructure.from_tables(2, GRAPH, constants={"c": 0}, functions={"f": {(0,): 1}},
                                    relations={"E": [], "P": []})
    with pytest.raises(StructureError):
        FiniteStructure.from_document({"signature": {}})
    with pytest.raises(StructureError):
        FiniteStructure(2, Signature(functions=(("f", 1),)), functions={"f": np.array([0, 2])})


def test_document_form(three_cycle, data_dir):
    from scripts.utils import Utils
    loaded = FiniteStructure.from_document(Utils().load_document(data_dir / "three_cycle.json"))
    assert loaded.relation_tuples("E") == three_cycle.relation_tuples("E")
    again = FiniteStructure.from_document(loaded.to_document())
    assert again.size == 3 and again.signature == loaded.signature


def test_expansion_oracle_agrees(three_cycle):
    sig = three_cycle.named_signature
    for text in ["forall x. exists y. E(x, y) & ~E(y, x)", "exists x. forall y. ~E(y, x)",
                 "forall x. forall y. E(x, y) -> ~(x = y)", "exists x. E(x, _e1) | E(_e1, x)"]:
        phi = parse_formula(text, sig)
        assert eval_finite(three_cycle, phi) == eval_expanded(three_cycle, phi)


def test_kleene_connectives():
    unknown = TruthValue3.unknown("budget")
    assert (TRUE & unknown).is_unknown
    assert (FALSE & unknown) is FALSE
    assert (TRUE | unknown) is TRUE
    assert (~unknown).is_unknown
    assert str(~TRUE) == "false"


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        Budget(0, 4)


def test_eval_nat_bounded_and_pinned(small_budget):
    assert eval_nat(parse_formula("exists x. x + x = 6"), budget=small_budget).is_true
    # pinned by the equation: no natural solves 2x = 7
    assert eval_nat(parse_formula("exists x. x + x = 7"), budget=small_budget).is_false
    assert eval_nat(parse_formula("exists x. x < 3 & x = 5"), budget=small_budget).is_false
    assert eval_nat(parse_formula("forall x. x < 5 -> x < 6"), budget=small_budget).is_true


def test_eval_nat_reports_exhaustion(small_budget):
    verdict = eval_nat(parse_formula("exists x. ~(x = x)"), budget=small_budget)
    assert verdict.is_unknown
    assert "budget exhausted" in verdict.reason


def test_eval_nat_witness_past_the_bound():
    budget = Budget(witness_bound=10, depth_bound=4)
    assert eval_nat(parse_formula("exists x. 10 < x * x"), budget=budget).is_true
    assert eval_nat(parse_formula("exists x. 200 < x * x"), budget=budget).is_unknown


def test_eval_nat_depth_bound():
    budget = Budget(witness_bound=4, depth_bound=1)
    assert eval_nat(parse_formula("exists x. exists y. x = y"), budget=budget).is_unknown


def test_eval_nat_coding_functions():
    assert eval_nat(parse_formula("pair(1, 1) = 4", ARITHMETIC_CODED)).is_true
    assert eval_nat(parse_formula("sub(7, 3) = 7", ARITHMETIC_CODED)).is_true


def test_exact_truth_set_passes_the_audit(three_cycle):
    sig = three_cycle.named_signature
    corpus = subsentence_closure([parse_formula("exists x. E(x, x) | E(_e0, _e1)", sig),
                                  parse_formula("forall x. ~E(x, x)", sig)], three_cycle, full=True)
    truth = exact_truth_set(three_cycle, corpus, full=True)
    assert real_violations(check_truth_conditions(truth, three_cycle, corpus)) == []


def test_flipped_membership_is_caught(three_cycle):
    sig = three_cycle.named_signature
    sentence = parse_formula("exists x. E(x, x) | E(_e0, _e1)", sig)
    corpus = subsentence_closure([sentence], three_cycle, full=True)
    truth = exact_truth_set(three_cycle, corpus, full=True)
    violations = real_violations(check_truth_conditions(truth ^ {encode(sentence)}, three_cycle, corpus))
    assert [v.clause for v in violations] == ["disjunction"]
    atom = parse_formula("E(_e0, _e1)", sig)
    violations = real_violations(check_truth_conditions(truth ^ {encode(atom)}, three_cycle, corpus))
    assert "atomic" in {v.clause for v in violations}
    table = violations_table(violations)
    assert list(table.columns) == ["clause", "code", "sentence", "expected", "found", "status"]


def test_existential_instances_use_element_names(three_cycle):
    phi = parse_formula("exists x. E(x, x)", three_cycle.named_signature)
    closure = subsentence_closure([phi], three_cycle)
    assert parse_formula("E(_e2, _e2)", three_cycle.named_signature) in closure
    assert element_const(2).name == "_e2"


def test_audit_over_the_naturals(small_budget):
    true_atom = parse_formula("0 = 0", ARITHMETIC_CODED)
    corpus = [Not(true_atom)]
    evaluator = NaturalsEvaluator(small_budget)
    assert real_violations(check_truth_conditions({encode(true_atom)}, evaluator, corpus)) == []
    violations = real_violations(check_truth_conditions({encode(true_atom), encode(Not(true_atom))},
                                                        evaluator, corpus))
    assert [v.clause for v in violations] == ["negation"]


def test_audit_rejects_non_codes(three_cycle):
    with pytest.raises(ValueError):
        check_truth_conditions({2}, three_cycle, [])


def test_larger_budgets_never_overturn_a_verdict():
    corpus = arithmetic_sentences(11, 40) + [parse_formula(text) for text in [
        "exists x. 10 < x * x", "exists x. 200 < x * x", "exists x. exists y. x = y + 1",
        "forall x. exists y. x < y", "exists x. ~(x = x)"]]
    budgets = [Budget(4, 2), Budget(16, 4), Budget(64, 8), Budget(256, 16)]
    for phi in corpus:
        settled = None
        for budget in budgets:
            verdict = eval_nat(phi, budget=budget)
            if settled is not None:
                assert verdict.status is settled
            elif verdict.is_determined:
                settled = verdict.status


@pytest.mark.parametrize("seed", range(4))
def test_passing_candidates_agree(seed):
    rng = np.random.default_rng(seed)
    gen = FormulaGenerator(GRAPH, rng=rng)
    S = random_structure(rng, GRAPH, int(rng.integers(1, 4)))
    corpus = subsentence_closure([gen.formula(3) for _ in range(3)], S, full=True)
    codes = [encode(phi) for phi in corpus]
    exact = exact_truth_set(S, corpus, full=True)
    expanded = {encode(phi) for phi in corpus if eval_expanded(S, phi)}
    candidates = [exact, expanded] + [exact ^ {codes[int(k)]} for k in rng.integers(len(codes), size=8)]
    passing = [c for c in candidates if not real_violations(check_truth_conditions(c, S, corpus))]
    assert len(passing) >= 2
    assert all(c == passing[0] for c in passing)


def test_empty_candidate_misses_a_true_atom(three_cycle, small_budget):
    atom = parse_formula("0 = 0", ARITHMETIC_CODED)
    violations = real_violations(check_truth_conditions(set(), NaturalsEvaluator(small_budget), [atom]))
    assert [(v.clause, v.expected, v.found) for v in violations] == [("atomic", True, False)]
    edge = parse_formula("E(_e0, _e1)", three_cycle.named_signature)
    assert [v.clause for v in check_truth_conditions(set(), three_cycle, [edge])] == ["atomic"]
