"""
Henkin completion of a decidable theory over a finite fragment, and its term model.

Sentences of the witness-extended signature are considered in a fixed order (size,
then canonical text); each is accepted or refuted by the oracle, and every accepted
existential gets a fresh constant naming its least witness.  The oracle only speaks
the base language, so witness constants are replaced by numerals when their value
is known and otherwise abstracted into existentially quantified variables
constrained by their defining instances.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Any, Callable, Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

import pandas as pd

from scripts import presburger
from scripts.satisfaction import FALSE, TRUE, TruthValue3
from scripts.syntax import (
    PRESBURGER, And, App, Const, Eq, Exists, Formula, Implies, Not, Numeral, Or, Rel,
    Signature, Term, Var, closed_terms, constants_of, format_formula, format_term, formula_size,
    free_vars, map_terms, numeral, replace_constant_in, substitute, term_size,
)
from scripts.utils import Utils, log_decorator

logger = logging.getLogger(__name__)

WITNESS_PREFIX = "c"
RESOLVE_LIMIT = 64
# abstraction variables live far above any bound variable of an enumerated sentence
_FRESH_BASE = 1000


class OracleInconsistencyError(ValueError):
    def __init__(self, sigma: Formula, negation: Formula, both: bool = True):
        self.sigma = sigma
        self.negation = negation
        verdict = "validates both" if both else "validates neither of"
        super().__init__(f"oracle {verdict} {format_formula(sigma)} and {format_formula(negation)}")


@dataclass(frozen=True)
class TheoryOracle:
    signature: Signature
    decide: Callable[[Formula], bool]
    name: str = "oracle"


def presburger_oracle() -> TheoryOracle:
    return TheoryOracle(PRESBURGER, presburger.decide, "presburger")


def constant_oracle(value: bool) -> TheoryOracle:
    """An oracle answering value on every sentence; inconsistent (or empty) by design of the caller."""
    return TheoryOracle(PRESBURGER, lambda sentence: value, f"constant-{str(value).lower()}")


def witness_name(k: int) -> str:
    return f"{WITNESS_PREFIX}{k}"


@dataclass(frozen=True)
class WitnessRecord:
    constant: str
    existential: Exists
    value: Optional[int] = None

    def defining(self, var: int) -> Formula:
        """The body holds at var and at no smaller value."""
        body, bound = self.existential.body, self.existential.var
        smaller = var + 1
        below = Exists(smaller, And(Rel("<", (Var(smaller), Var(var))), substitute(body, bound, Var(smaller))))
        return And(substitute(body, bound, Var(var)), Not(below))

    def instance(self) -> Formula:
        return substitute(self.existential.body, self.existential.var, Const(self.constant))

    def to_record(self) -> Dict[str, Any]:
        return {"constant": self.constant, "existential": format_formula(self.existential),
                "value": self.value}


def abstract_witnesses(sigma: Formula, witnesses: Sequence[WitnessRecord]) -> Formula:
    """sigma rewritten into the base language, equivalent to it under the witness definitions."""
    index = {record.constant: k for k, record in enumerate(witnesses)}

    def resolve(phi: Formula) -> Formula:
        for name in constants_of(phi):
            k = index.get(name)
            if k is not None and witnesses[k].value is not None:
                phi = replace_constant_in(phi, name, numeral(witnesses[k].value))
        return phi

    phi = resolve(sigma)
    while True:
        pending = sorted(index[name] for name in constants_of(phi) if name in index)
        if not pending:
            return phi
        k = pending[-1]
        var = _FRESH_BASE + 2 * k
        record = witnesses[k]
        phi = Exists(var, And(resolve(record.defining(var)),
                              replace_constant_in(phi, record.constant, Var(var))))


@dataclass(frozen=True)
class HenkinState:
    signature: Signature
    accepted: Tuple[Formula, ...] = ()
    witness_records: Tuple[WitnessRecord, ...] = ()
    considered: Tuple[Formula, ...] = ()
    depth: int = 0
    size_cap: int = 0

    @property
    def witnesses(self) -> Dict[Formula, str]:
        return {record.existential: record.constant for record in self.witness_records}

    @property
    def constant_pool(self) -> Tuple[str, ...]:
        return tuple(record.constant for record in self.witness_records)

    @property
    def extended_signature(self) -> Signature:
        return self.signature.extend(constants=self.constant_pool)

    def accepts(self, phi: Formula) -> bool:
        return phi in self._accepted_set

    @cached_property
    def _accepted_set(self) -> FrozenSet[Formula]:
        return frozenset(self.accepted)

    def witness_values(self) -> Dict[str, Optional[int]]:
        return {record.constant: record.value for record in self.witness_records}

    def to_document(self) -> Dict[str, Any]:
        return {"depth": self.depth,
                "size_cap": self.size_cap,
                "accepted": [format_formula(phi) for phi in self.accepted],
                "witnesses": [record.to_record() for record in self.witness_records],
                "constant_pool": list(self.constant_pool)}


class SentenceEnumerator:
    """
    Closed sentences over atoms, negation, conjunction and existentials, with the
    quantifier at nesting depth d binding variable d.
    """

    def __init__(self, signature: Signature):
        self.signature = signature
        self._terms: Dict[Tuple[int, int], List[Term]] = {}
        self._formulas: Dict[Tuple[int, int], List[Formula]] = {}

    def terms(self, size: int, scope: int) -> List[Term]:
        key = (size, scope)
        if key not in self._terms:
            out: List[Term] = []
            if size == 1:
                out.extend(Const(name) for name in self.signature.constants)
                out.extend(Var(i) for i in range(scope))
            else:
                for name, arity in self.signature.functions:
                    out.extend(App(name, args) for args in self._arguments(size - 1, arity, scope))
            self._terms[key] = out
        return self._terms[key]

    def _arguments(self, total: int, arity: int, scope: int) -> Iterator[Tuple[Term, ...]]:
        if arity == 0:
            if total == 0:
                yield ()
            return
        for first in range(1, total - arity + 2):
            for head in self.terms(first, scope):
                for rest in self._arguments(total - first, arity - 1, scope):
                    yield (head,) + rest

    def formulas(self, size: int, scope: int) -> List[Formula]:
        key = (size, scope)
        if key in self._formulas:
            return self._formulas[key]
        out: List[Formula] = []
        if size >= 3:
            out.extend(Eq(*args) for args in self._arguments(size - 1, 2, scope))
        for name, arity in self.signature.relations:
            if size - 1 >= arity:
                out.extend(Rel(name, args) for args in self._arguments(size - 1, arity, scope))
        if size >= 2:
            out.extend(Not(body) for body in self.formulas(size - 1, scope))
            out.extend(Exists(scope, body) for body in self.formulas(size - 1, scope + 1))
        for left_size in range(1, size - 1):
            for left in self.formulas(left_size, scope):
                for right in self.formulas(size - 1 - left_size, scope):
                    out.append(And(left, right))
        self._formulas[key] = out
        return out

    def sentences(self, size_cap: int) -> List[Formula]:
        found = [phi for size in range(1, size_cap + 1) for phi in self.formulas(size, 0)]
        return sorted(found, key=lambda phi: (formula_size(phi), format_formula(phi)))


class _Construction:

    def __init__(self, oracle: TheoryOracle, resolve_limit: int):
        self.oracle = oracle
        self.resolve_limit = resolve_limit
        self.accepted: List[Formula] = []
        self.accepted_set: set = set()
        self.records: List[WitnessRecord] = []
        self.considered: List[Formula] = []

    def validate(self, sigma: Formula) -> bool:
        return bool(self.oracle.decide(abstract_witnesses(sigma, self.records)))

    def consider(self, sigma: Formula) -> None:
        self.considered.append(sigma)
        negation = Not(sigma)
        if sigma in self.accepted_set or negation in self.accepted_set:
            return
        yes, no = self.validate(sigma), self.validate(negation)
        if yes == no:
            raise OracleInconsistencyError(sigma, negation, both=yes)
        self.accept(sigma if yes else negation)

    def accept(self, phi: Formula) -> None:
        if phi in self.accepted_set:
            return
        self.accepted.append(phi)
        self.accepted_set.add(phi)
        if isinstance(phi, Exists):
            record = WitnessRecord(witness_name(len(self.records)), phi, self.least_witness(phi))
            self.records.append(record)
            instance = record.instance()
            if not self.validate(instance):
                raise OracleInconsistencyError(phi, Not(instance), both=False)
            self.accept(instance)

    def least_witness(self, phi: Exists) -> Optional[int]:
        for n in range(self.resolve_limit + 1):
            if self.validate(substitute(phi.body, phi.var, numeral(n))):
                return n
        return None


@log_decorator
def henkin_extend(oracle: TheoryOracle, depth: int, size_cap: int,
                  resolve_limit: int = RESOLVE_LIMIT) -> HenkinState:
    """
    Run depth rounds; round r considers every closed sentence up to size_cap over the
    base signature plus the witness constants allocated in earlier rounds.
    """
    if depth < 0 or size_cap < 0:
        raise ValueError("depth and size_cap must be natural numbers")
    run = _Construction(oracle, resolve_limit)
    for round_ in range(depth):
        signature = oracle.signature.extend(constants=tuple(r.constant for r in run.records))
        sentences = SentenceEnumerator(signature).sentences(size_cap)
        logger.info(f"henkin round {round_}: {len(sentences)} sentences over "
                    f"{len(signature.constants)} constants")
        for sigma in sentences:
            run.consider(sigma)
    return HenkinState(oracle.signature, tuple(run.accepted), tuple(run.records),
                       tuple(run.considered), depth, size_cap)


def incomplete_sentences(state: HenkinState) -> List[Formula]:
    """Considered sentences for which not exactly one of sigma, ~sigma is accepted."""
    return [sigma for sigma in state.considered
            if state.accepts(sigma) == state.accepts(Not(sigma))]


def missing_witnesses(state: HenkinState) -> List[Formula]:
    """Accepted existentials without an accepted witness instance."""
    witnesses = state.witnesses
    out = []
    for phi in state.accepted:
        if not isinstance(phi, Exists):
            continue
        constant = witnesses.get(phi)
        if constant is None or not state.accepts(substitute(phi.body, phi.var, Const(constant))):
            out.append(phi)
    return out


# term model

def _term_key(t: Term) -> Tuple[int, str]:
    return term_size(t), format_term(t)


def standardize(phi: Formula, depth: int = 0, names: Optional[Mapping[int, int]] = None) -> Formula:
    """
    The enumerator's form of a sentence: vacuous quantifiers dropped, forall written
    as ~exists~, and the quantifier at nesting depth d binding variable d.
    """
    names = dict(names or {})
    if isinstance(phi, (Eq, Rel)):
        return map_terms(phi, lambda t: _rename(t, names))
    if isinstance(phi, Not):
        return Not(standardize(phi.body, depth, names))
    if isinstance(phi, (And, Or, Implies)):
        return type(phi)(standardize(phi.left, depth, names), standardize(phi.right, depth, names))
    if phi.var not in free_vars(phi.body):
        return standardize(phi.body, depth, names)
    names[phi.var] = depth
    body = standardize(phi.body, depth + 1, names)
    if isinstance(phi, Exists):
        return Exists(depth, body)
    return Not(Exists(depth, Not(body)))


def _rename(t: Term, names: Mapping[int, int]) -> Term:
    if isinstance(t, Var):
        return Var(names.get(t.index, t.index))
    if isinstance(t, App):
        return App(t.name, tuple(_rename(a, names) for a in t.args))
    return t


def _generic(var: int) -> int:
    # stands for an arbitrary element; only reflexive equalities are decided about it
    return -1 - var


class TermModel:
    """
    Closed terms of the accepted sentences (up to the size cap) quotiented by the
    theory's equalities.  Equality, relations and operations on the classes are
    decided by the oracle, so every atom over the quotient has a value; an operation
    whose value falls outside the quotient is undefined.  A quantifier is settled by
    a class, by an arbitrary element, or by the accepted sentences (the model
    satisfies exactly what the completion accepts); otherwise it is unknown.
    """

    def __init__(self, state: HenkinState, oracle: TheoryOracle):
        self.state = state
        self.oracle = oracle
        domain = set()
        for phi in state.accepted:
            domain.update(t for t in closed_terms(phi) if term_size(t) <= state.size_cap)
        self.terms: List[Term] = sorted(domain, key=_term_key)
        groups: List[List[Term]] = []
        for t in self.terms:
            for group in groups:
                if self._holds(Eq(group[0], t)):
                    group.append(t)
                    break
            else:
                groups.append([t])
        self.classes: List[Tuple[Term, ...]] = [tuple(g) for g in groups]
        self.class_of: Dict[Term, int] = {t: i for i, g in enumerate(self.classes) for t in g}
        self.functions: Dict[Tuple[str, Tuple[int, ...]], Optional[int]] = {}
        for name, arity in state.extended_signature.functions:
            for args in product(range(self.size), repeat=arity):
                self.functions[(name, args)] = self._locate(App(name, tuple(map(self.representative, args))))
        self.relations: Dict[Tuple[str, Tuple[int, ...]], bool] = {}
        for name, arity in state.extended_signature.relations:
            for args in product(range(self.size), repeat=arity):
                self.relations[(name, args)] = self._holds(Rel(name, tuple(map(self.representative, args))))
        undefined = sum(value is None for value in self.functions.values())
        if undefined:
            logger.info(f"term model: {undefined} operation values fall outside the {self.size} classes")

    def _holds(self, sigma: Formula) -> bool:
        return bool(self.oracle.decide(abstract_witnesses(sigma, self.state.witness_records)))

    def _locate(self, t: Term) -> Optional[int]:
        for i, group in enumerate(self.classes):
            if self._holds(Eq(t, group[0])):
                return i
        return None

    @property
    def size(self) -> int:
        return len(self.classes)

    def representative(self, i: int) -> Term:
        return self.classes[i][0]

    def term_class(self, t: Term, env: Optional[Mapping[int, int]] = None) -> Optional[int]:
        """The class denoted by t, None where the quotient leaves it undefined, negative for an arbitrary element."""
        env = env or {}
        if t in self.class_of:
            return self.class_of[t]
        if isinstance(t, Var):
            return env.get(t.index)
        if isinstance(t, Numeral):
            return self.term_class(t.unfold(), env)
        if isinstance(t, App):
            args = tuple(self.term_class(a, env) for a in t.args)
            if any(a is None or a < 0 for a in args):
                return None
            return self.functions.get((t.name, args))
        return None

    def evaluate(self, sigma: Formula, env: Optional[Mapping[int, int]] = None) -> TruthValue3:
        return self._eval(sigma, dict(env or {}))

    def _eval(self, phi: Formula, env: Dict[int, int]) -> TruthValue3:
        if isinstance(phi, Eq):
            a, b = self.term_class(phi.left, env), self.term_class(phi.right, env)
            if a is None or b is None:
                return TruthValue3.unknown("term outside the quotient")
            if a == b:
                return TRUE
            if a < 0 or b < 0:
                return TruthValue3.unknown("equality with an arbitrary element")
            return FALSE
        if isinstance(phi, Rel):
            args = tuple(self.term_class(a, env) for a in phi.args)
            if any(a is None for a in args):
                return TruthValue3.unknown("term outside the quotient")
            if any(a < 0 for a in args):
                return TruthValue3.unknown(f"{phi.name} of an arbitrary element")
            return TruthValue3.of(self.relations[(phi.name, args)])
        if isinstance(phi, Not):
            return ~self._eval(phi.body, env)
        if isinstance(phi, And):
            return self._eval(phi.left, env) & self._eval(phi.right, env)
        if isinstance(phi, Or):
            return self._eval(phi.left, env) | self._eval(phi.right, env)
        if isinstance(phi, Implies):
            return ~self._eval(phi.left, env) | self._eval(phi.right, env)
        return self._quantifier(phi, env)

    def _quantifier(self, phi: Formula, env: Dict[int, int]) -> TruthValue3:
        settles = TRUE if isinstance(phi, Exists) else FALSE
        saved = env.get(phi.var)
        determined = True
        try:
            for i in list(range(self.size)) + [_generic(phi.var)]:
                env[phi.var] = i
                verdict = self._eval(phi.body, env)
                if verdict.status is settles.status:
                    return settles
                determined = determined and not verdict.is_unknown
        finally:
            if saved is None:
                env.pop(phi.var, None)
            else:
                env[phi.var] = saved
        if determined:
            return ~settles
        return self._accepted_verdict(phi, env)

    def _accepted_verdict(self, phi: Formula, env: Mapping[int, int]) -> TruthValue3:
        free = free_vars(phi)
        if any(env.get(v) is None or env[v] < 0 for v in free):
            return TruthValue3.unknown("quantifier over an arbitrary element")
        sentence = phi
        for v in free:
            sentence = substitute(sentence, v, self.representative(env[v]))
        sentence = standardize(sentence)
        if self.state.accepts(sentence):
            return TRUE
        if self.state.accepts(Not(sentence)):
            return FALSE
        return TruthValue3.unknown("the quantifier lies outside the completed fragment")

    def to_document(self) -> Dict[str, Any]:
        rep = lambda i: format_term(self.representative(i))
        return {"classes": [[format_term(t) for t in group] for group in self.classes],
                "functions": [{"symbol": name, "args": [rep(a) for a in args],
                               "value": None if value is None else rep(value)}
                              for (name, args), value in sorted(self.functions.items())],
                "relations": [{"symbol": name, "args": [rep(a) for a in args], "holds": value}
                              for (name, args), value in sorted(self.relations.items())],
                "partial": any(value is None for value in self.functions.values())}


@log_decorator
def term_model(state: HenkinState, oracle: TheoryOracle) -> TermModel:
    return TermModel(state, oracle)


@log_decorator
def oracle_agreement(state: HenkinState, oracle: TheoryOracle, sentences: Sequence[Formula],
                     model: Optional[TermModel] = None) -> pd.DataFrame:
    """Term-model verdicts against the oracle; status is agree, disagree or unknown."""
    model = model or TermModel(state, oracle)
    rows = []
    for sigma in sentences:
        verdict = model.evaluate(sigma)
        truth = bool(oracle.decide(abstract_witnesses(sigma, state.witness_records)))
        if verdict.is_unknown:
            status = "unknown"
        else:
            status = "agree" if verdict.is_true == truth else "disagree"
        rows.append({"sentence": Utils.shorten(format_formula(sigma)), "term_model": str(verdict),
                     "oracle": str(truth).lower(), "status": status})
    table = Utils.table(rows, ["sentence", "term_model", "oracle", "status"])
    disagreements = int((table["status"] == "disagree").sum()) if not table.empty else 0
    if disagreements:
        logger.error(f"term model disagrees with the oracle on {disagreements} sentences")
    return table
