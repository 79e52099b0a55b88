"""
Seeded corpora: random formulas, finite structures, bounded Presburger sentences,
code predicates for the diagonal laws and level corpora for the truth hierarchy.
Everything is a pure function of the seed.
"""
import logging
from typing import List, Optional, Sequence

import numpy as np

from scripts.arithmetization import quote
from scripts.satisfaction import FiniteStructure
from scripts.syntax import (
    ARITHMETIC, ARITHMETIC_CODED, PRESBURGER, And, App, Const, Eq, Exists, Forall, Formula,
    Implies, Not, Or, Rel, Signature, Term, Var, numeral, parse_formula,
)
from scripts.truth_hierarchy import tr_name

logger = logging.getLogger(__name__)

GRAPH = Signature(constants=("c",), functions=(("f", 1),), relations=(("E", 2), ("P", 1)))
RELATIONAL = Signature(relations=(("E", 2), ("P", 1)))

CODE_PREDICATES = (
    "x = x",
    "~(x = x)",
    "exists y. x = y + y",
    "exists y. x = y + y + 1",
    "x < 5",
    "0 < x",
    "x = 0",
    "exists y. x = y + y + y",
    "exists y. x = 3 * y",
    "exists y. x = y + y + y + y",
    "exists y. x = y + y & exists z. y = z + z",
    "~(exists y. x = y + y)",
    "(exists y. x = y + y) | x = 1",
    "x = 1 + 1",
    "1 < x & exists y. x = y + y",
    "exists y. x = y + 1",
    "exists y. x = y + 5",
    "forall y. y < 3 -> ~(x = y)",
    "exists y. y < 10 & x = y + y",
    "exists y. x = 5 * y + 1",
)


def code_predicates() -> List[Formula]:
    """Predicates of v0 used to exercise the diagonal and liar laws."""
    return [parse_formula(text, ARITHMETIC_CODED) for text in CODE_PREDICATES]


class FormulaGenerator:
    """Random terms and formulas over a signature; variables come from the enclosing quantifiers."""

    def __init__(self, signature: Signature, seed: int = 0, rng: Optional[np.random.Generator] = None,
                 variables: int = 3):
        self.signature = signature
        self.rng = rng if rng is not None else np.random.default_rng(seed)
        self.variables = variables

    def _pick(self, items: Sequence):
        return items[int(self.rng.integers(len(items)))]

    def term(self, depth: int, scope: Sequence[int] = ()) -> Term:
        leaves: List[Term] = [Const(c) for c in self.signature.constants] + [Var(v) for v in scope]
        if depth <= 0 or not self.signature.functions or (leaves and self.rng.random() < 0.5):
            if not leaves:
                raise ValueError("signature has no closed terms")
            return self._pick(leaves)
        name, arity = self._pick(self.signature.functions)
        return App(name, tuple(self.term(depth - 1, scope) for _ in range(arity)))

    def atom(self, scope: Sequence[int] = (), term_depth: int = 1) -> Formula:
        options = ["eq"] + [name for name, _ in self.signature.relations]
        choice = self._pick(options)
        if choice == "eq":
            return Eq(self.term(term_depth, scope), self.term(term_depth, scope))
        arity = self.signature.relation_arity(choice)
        return Rel(choice, tuple(self.term(term_depth, scope) for _ in range(arity)))

    def formula(self, depth: int, scope: Sequence[int] = (), term_depth: int = 1) -> Formula:
        if depth <= 0 or self.rng.random() < 0.2:
            return self.atom(scope, term_depth)
        kind = int(self.rng.integers(7))
        if kind == 0:
            return Not(self.formula(depth - 1, scope, term_depth))
        if kind in (1, 2, 3):
            node = (And, Or, Implies)[kind - 1]
            return node(self.formula(depth - 1, scope, term_depth), self.formula(depth - 1, scope, term_depth))
        # variables may be rebound, which exercises shadowing
        var = int(self.rng.integers(self.variables))
        node = Exists if kind in (4, 5) else Forall
        return node(var, self.formula(depth - 1, tuple(sorted(set(scope) | {var})), term_depth))

    def sentence(self, depth: int, term_depth: int = 1) -> Formula:
        return self.formula(depth, (), term_depth)


def random_structure(rng: np.random.Generator, signature: Signature, size: int,
                     density: float = 0.4) -> FiniteStructure:
    constants = {name: int(rng.integers(size)) for name in signature.constants}
    functions = {name: rng.integers(size, size=(size,) * arity) for name, arity in signature.functions}
    relations = {name: rng.random((size,) * arity) < density for name, arity in signature.relations}
    return FiniteStructure(size, signature, constants, functions, relations)


def structure_family(seed: int, count: int, max_size: int, signature: Signature = GRAPH,
                     min_size: int = 1) -> List[FiniteStructure]:
    rng = np.random.default_rng(seed)
    return [random_structure(rng, signature, int(rng.integers(min_size, max_size + 1)))
            for _ in range(count)]


def all_subsets(size: int) -> List[frozenset]:
    return [frozenset(a for a in range(size) if mask >> a & 1) for mask in range(1 << size)]


def bounded_presburger_sentence(rng: np.random.Generator, depth: int, bound: int,
                                scope: Sequence[int] = ()) -> Formula:
    """A Presburger sentence whose quantifiers are guarded by v < bound."""
    gen = FormulaGenerator(PRESBURGER, rng=rng)
    if depth <= 0 or rng.random() < 0.25:
        left, right = gen.term(2, scope), gen.term(2, scope)
        return Eq(left, right) if rng.random() < 0.5 else Rel("<", (left, right))
    kind = int(rng.integers(5))
    if kind == 0:
        return Not(bounded_presburger_sentence(rng, depth - 1, bound, scope))
    if kind == 1:
        return And(bounded_presburger_sentence(rng, depth - 1, bound, scope),
                   bounded_presburger_sentence(rng, depth - 1, bound, scope))
    if kind == 2:
        return Or(bounded_presburger_sentence(rng, depth - 1, bound, scope),
                  bounded_presburger_sentence(rng, depth - 1, bound, scope))
    var = len(scope)
    guard = Rel("<", (Var(var), numeral(bound)))
    body = bounded_presburger_sentence(rng, depth - 1, bound, tuple(scope) + (var,))
    if kind == 3:
        return Exists(var, And(guard, body))
    return Forall(var, Implies(guard, body))


def presburger_corpus(seed: int, count: int, depth: int = 3, bound: int = 6) -> List[Formula]:
    rng = np.random.default_rng(seed)
    return [bounded_presburger_sentence(rng, depth, bound) for _ in range(count)]


def presburger_open_corpus(seed: int, count: int, depth: int = 3, free: Sequence[int] = (0, 1)) -> List[Formula]:
    """Presburger formulas with unguarded quantifiers whose free variables lie in free."""
    gen = FormulaGenerator(PRESBURGER, seed=seed)
    return [gen.formula(depth, free, term_depth=2) for _ in range(count)]


def arithmetic_sentences(seed: int, count: int, depth: int = 3) -> List[Formula]:
    """Closed sentences of plain arithmetic with bounded quantifiers, so the naturals decide them."""
    rng = np.random.default_rng(seed)
    gen = FormulaGenerator(ARITHMETIC, rng=rng)
    out = []
    for _ in range(count):
        phi = bounded_presburger_sentence(rng, depth, int(rng.integers(2, 6)))
        if rng.random() < 0.3:
            phi = And(phi, gen.atom((), 2))
        out.append(phi)
    return out


def level_corpus(seed: int, j: int, count: int) -> List[Formula]:
    """Sentences of level j: plain arithmetic plus Tr_i applied to quoted lower sentences."""
    rng = np.random.default_rng(seed)
    base = arithmetic_sentences(seed, count)
    out: List[Formula] = []
    for phi in base:
        if j == 0 or rng.random() < 0.4:
            out.append(phi)
            continue
        i = int(rng.integers(j))
        inner = phi
        for level in range(i):
            if rng.random() < 0.5:
                inner = Rel(tr_name(level), (quote(inner),))
        atom = Rel(tr_name(i), (quote(inner),))
        out.append(Not(atom) if rng.random() < 0.3 else atom)
    return out


# symmetric structures, where most subsets are not definable

def cycle(n: int) -> FiniteStructure:
    return FiniteStructure.from_tables(n, RELATIONAL, relations={"E": [(a, (a + 1) % n) for a in range(n)], "P": []})


def antichain(n: int) -> FiniteStructure:
    return FiniteStructure.from_tables(n, RELATIONAL, relations={"E": [], "P": []})


def linear_order(n: int) -> FiniteStructure:
    return FiniteStructure.from_tables(n, RELATIONAL,
                                       relations={"E": [(a, b) for a in range(n) for b in range(a + 1, n)], "P": []})


def permuted_copy(S: FiniteStructure, permutation: Sequence[int]) -> FiniteStructure:
    """The isomorphic copy of S in which element a is renamed permutation[a]."""
    perm = np.asarray(permutation, dtype=np.int64)
    inverse = np.argsort(perm)
    functions = {name: perm[table[np.ix_(*[inverse] * table.ndim)]] for name, table in S.functions.items()}
    relations = {name: table[np.ix_(*[inverse] * table.ndim)] for name, table in S.relations.items()}
    constants = {name: int(perm[value]) for name, value in S.constants.items()}
    return FiniteStructure(S.size, S.signature, constants, functions, relations)
