import numpy as np

from scripts.generators import (
    GRAPH, RELATIONAL, FormulaGenerator, all_subsets, arithmetic_sentences, code_predicates, cycle,
    level_corpus, linear_order, permuted_copy, presburger_corpus, presburger_open_corpus, structure_family,
)
from scripts.model_tools import is_isomorphism
from scripts.syntax import format_formula, free_vars, is_sentence
from scripts.truth_hierarchy import formula_level


def test_seeded_corpora_repeat():
    first = [format_formula(phi) for phi in presburger_corpus(7, 20)]
    assert first == [format_formula(phi) for phi in presburger_corpus(7, 20)]
    assert first != [format_formula(phi) for phi in presburger_corpus(8, 20)]
    left, right = structure_family(3, 5, 4), structure_family(3, 5, 4)
    assert all(a.to_document() == b.to_document() for a, b in zip(left, right))


def test_generated_sentences_are_closed():
    gen = FormulaGenerator(GRAPH, seed=1)
    assert all(is_sentence(gen.sentence(4)) for _ in range(50))
    assert all(is_sentence(phi) for phi in arithmetic_sentences(2, 30))
    assert all(free_vars(phi) == {0} or not free_vars(phi) for phi in code_predicates())


def test_level_corpus_stays_in_level():
    for j in range(3):
        assert all(formula_level(phi) <= j for phi in level_corpus(4, j, 20))


def test_permuted_copy_is_an_isomorphic_copy():
    rng = np.random.default_rng(0)
    for S in structure_family(5, 10, 5, GRAPH) + structure_family(6, 10, 5, RELATIONAL):
        perm = rng.permutation(S.size)
        assert is_isomorphism(S, permuted_copy(S, perm), perm)


def test_named_structures():
    assert cycle(3).relation_tuples("E") == [(0, 1), (1, 2), (2, 0)]
    assert len(linear_order(4).relation_tuples("E")) == 6
    assert len(all_subsets(3)) == 8 and frozenset() in all_subsets(3)


def test_open_presburger_corpus():
    corpus = presburger_open_corpus(5, 40)
    assert len(corpus) == 40
    assert all(free_vars(phi) <= {0, 1} for phi in corpus)
    assert any(free_vars(phi) for phi in corpus)
    assert [format_formula(phi) for phi in corpus] == [format_formula(phi) for phi in presburger_open_corpus(5, 40)]
