import numpy as np
import pytest

from scripts.generators import FormulaGenerator, random_structure
from scripts.satisfaction import NATURALS, eval_finite, eval_term
from scripts.syntax import (
    ARITHMETIC, ARITHMETIC_CODED, And, App, ArityError, Const, Eq, Exists, Forall, FormulaSyntaxError,
    Implies, Numeral, Or, Rel, Signature, SignatureError, UnknownSymbolError, Var, canonicalize,
    expand_numerals, format_formula, formula_size, free_vars, from_tree, is_canonical, is_sentence,
    numeral, parse_formula, parse_term, quantifier_depth, substitute, to_tree, variable_index,
    variable_name,
)

GRAPH = Signature(constants=("c",), functions=(("f", 1),), relations=(("E", 2), ("P", 1)))


def test_variable_names():
    assert [variable_name(i) for i in range(5)] == ["x", "y", "z", "v3", "v4"]
    assert variable_index("v0") == 0
    assert variable_index("w") is None
    assert variable_index("v01") is None


def test_quantifiers_nest():
    phi = parse_formula("forall x. exists y. x < y")
    assert phi == Forall(0, Exists(1, Rel("<", (Var(0), Var(1)))))


def test_quantifier_body_extends_right():
    phi = parse_formula("exists x. x = 0 & x = 1")
    assert isinstance(phi, Exists)
    assert isinstance(phi.body, And)


def test_connective_precedence():
    phi = parse_formula("x = 0 & y = 0 | z = 0")
    assert isinstance(phi, Or) and isinstance(phi.left, And)
    chain = parse_formula("x = 0 -> y = 0 -> z = 0")
    assert isinstance(chain, Implies) and isinstance(chain.right, Implies)


def test_numerals():
    assert parse_term("3") == Numeral(3)
    assert numeral(0) == Const("0") and numeral(1) == Const("1")
    with pytest.raises(ValueError):
        Numeral(1)
    assert expand_numerals(Eq(Numeral(2), Const("0"))) == Eq(App("+", (Const("1"), Const("1"))), Const("0"))


def test_products_bind_tighter_than_sums():
    t = parse_term("x + y * z")
    assert t == App("+", (Var(0), App("*", (Var(1), Var(2)))))


@pytest.mark.parametrize("text", [
    "forall x. exists y. x < y",
    "~(exists x. x = 0) | 0 = 1",
    "(exists x. x = 0) & 1 = 1",
    "x = 0 -> (y = 0 -> z = 0)",
    "(x = 0 -> y = 0) -> z = 0",
    "~~(x + 1) * y = 7",
    "exists v3. v3 = x + y + z",
])
def test_format_reparses(text):
    phi = parse_formula(text)
    assert parse_formula(format_formula(phi)) == phi


def test_user_symbols():
    phi = parse_formula("forall x. P(x) -> E(f(x), c)", GRAPH)
    assert phi == Forall(0, Implies(Rel("P", (Var(0),)), Rel("E", (App("f", (Var(0),)), Const("c")))))


def test_unknown_symbols():
    with pytest.raises(UnknownSymbolError):
        parse_formula("f(x) = 0")
    with pytest.raises(UnknownSymbolError):
        parse_formula("x = c")
    with pytest.raises(UnknownSymbolError):
        parse_formula("sub(x, x) = 0", ARITHMETIC)
    assert parse_formula("sub(x, x) = 0", ARITHMETIC_CODED)


def test_arity_errors():
    with pytest.raises(ArityError):
        parse_formula("E(x) ", GRAPH)
    with pytest.raises(ArityError):
        parse_formula("f(x, x) = c", GRAPH)


def test_syntax_errors_carry_a_position():
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse_formula("x = ")
    assert isinstance(excinfo.value, ValueError)
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse_formula("x = 0 $ y = 0")
    assert excinfo.value.column == 7


def test_bad_signatures():
    with pytest.raises(SignatureError):
        Signature(constants=("c", "c"))
    with pytest.raises(SignatureError):
        Signature(constants=("x",))
    with pytest.raises(SignatureError):
        Signature(functions=(("f", 0),))


def test_free_variables():
    phi = parse_formula("exists y. x < y & y < z")
    assert free_vars(phi) == {0, 2}
    assert not is_sentence(phi)
    assert is_sentence(parse_formula("forall x. x = x"))


def test_substitution_avoids_capture():
    phi = Exists(1, Eq(Var(0), Var(1)))
    assert substitute(phi, 0, Var(1)) == Exists(2, Eq(Var(1), Var(2)))


def test_substitution_leaves_bound_occurrences():
    phi = And(Eq(Var(0), Const("0")), Exists(0, Eq(Var(0), Const("1"))))
    result = substitute(phi, 0, Const("1"))
    assert result == And(Eq(Const("1"), Const("0")), Exists(0, Eq(Var(0), Const("1"))))


def test_size_counts_numerals_unfolded():
    assert formula_size(Eq(Numeral(2), Const("0"))) == 5
    assert formula_size(parse_formula("exists x. ~(x = 0)")) == 5
    assert quantifier_depth(parse_formula("forall x. exists y. x < y | exists z. z = 0")) == 3
    assert quantifier_depth(parse_formula("(forall x. x = x) & exists y. y = 0")) == 1


def test_canonical_fragment():
    phi = parse_formula("forall x. x = 0 | 0 < x -> exists y. x = y + 1")
    canonical = canonicalize(phi)
    assert is_canonical(canonical)
    assert not is_canonical(phi)
    assert free_vars(canonical) == free_vars(phi)


def test_tree_form():
    phi = parse_formula("forall x. E(x, f(c)) | ~P(x)", GRAPH)
    tree = to_tree(phi)
    assert tree["tag"] == "forall" and tree["var"] == 0
    assert from_tree(tree) == phi
    with pytest.raises(ValueError):
        from_tree({"tag": "xor"})


@pytest.mark.parametrize("seed", range(4))
def test_random_formulas_reparse(seed):
    gen = FormulaGenerator(ARITHMETIC, seed=seed)
    for _ in range(50):
        phi = gen.formula(6, (0, 1, 2), term_depth=2)
        assert parse_formula(format_formula(phi)) == phi


def test_numerals_denote_their_value():
    assert all(eval_term(NATURALS, numeral(n)) == n for n in range(10_001))
    for n in range(300):
        assert eval_term(NATURALS, expand_numerals(Eq(numeral(n), Const("0"))).left) == n


@pytest.mark.parametrize("seed", range(3))
def test_substitution_commutes_with_evaluation(seed):
    rng = np.random.default_rng(seed)
    gen = FormulaGenerator(GRAPH, rng=rng)
    for _ in range(40):
        S = random_structure(rng, GRAPH, int(rng.integers(1, 5)))
        phi = gen.formula(4, (0, 1, 2))
        t = gen.term(2, (1,))
        assignment = {v: int(rng.integers(S.size)) for v in range(3)}
        moved = {**assignment, 0: eval_term(S, t, assignment)}
        assert eval_finite(S, substitute(phi, 0, t), assignment) == eval_finite(S, phi, moved)
