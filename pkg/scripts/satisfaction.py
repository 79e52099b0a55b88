"""
Tarskian satisfaction: exact evaluation over finite structures, budgeted
three-valued evaluation over the natural numbers, and an auditor that checks a
candidate set of coded sentences against the recursive truth clauses.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, reduce
from typing import (Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence,
                    Set, Tuple, Union)

import numpy as np
import pandas as pd

from scripts.arithmetization import decode, encode, pair, sub_total
from scripts.syntax import (
    ARITHMETIC_CODED, And, Const, Eq, Exists, Forall, Formula, Implies, Not, Numeral, Or,
    Rel, Signature, Term, UnknownSymbolError, Var, check_formula, format_formula, free_vars,
    is_sentence, numeral, substitute, term_vars,
)
from scripts.utils import Utils, log_decorator

logger = logging.getLogger(__name__)

ELEMENT_PREFIX = "_e"
Assignment = Mapping[int, Any]


class StructureError(ValueError):
    pass


class UnassignedVariableError(ValueError):
    pass


def element_name(k: int) -> str:
    return f"{ELEMENT_PREFIX}{k}"


def element_const(k: int) -> Const:
    """The constant naming domain element k in element-named expansions."""
    return Const(element_name(k))


def _element_index(name: str) -> Optional[int]:
    if name.startswith(ELEMENT_PREFIX) and name[len(ELEMENT_PREFIX):].isdigit():
        return int(name[len(ELEMENT_PREFIX):])
    return None


# finite structures

@dataclass(frozen=True, eq=False)
class FiniteStructure:
    """
    A structure with domain {0, ..., size - 1}.

    Function tables are integer arrays of shape (size,) * arity and relation
    tables boolean arrays of the same shape; both are read-only.
    """
    size: int
    signature: Signature
    constants: Mapping[str, int] = field(default_factory=dict)
    functions: Mapping[str, np.ndarray] = field(default_factory=dict)
    relations: Mapping[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        if self.size < 1:
            raise StructureError("a structure needs a non-empty domain")
        for name in self.signature.constants:
            if name not in self.constants:
                raise StructureError(f"constant {name!r} has no interpretation")
            if not 0 <= self.constants[name] < self.size:
                raise StructureError(f"constant {name!r} lies outside the domain")
        functions, relations = {}, {}
        for name, arity in self.signature.functions:
            if name not in self.functions:
                raise StructureError(f"function {name!r} has no table")
            table = np.array(self.functions[name], dtype=np.int64)
            if table.shape != (self.size,) * arity:
                raise StructureError(f"table of {name!r} is not total over the domain")
            if table.size and (table.min() < 0 or table.max() >= self.size):
                raise StructureError(f"table of {name!r} leaves the domain")
            table.setflags(write=False)
            functions[name] = table
        for name, arity in self.signature.relations:
            if name not in self.relations:
                raise StructureError(f"relation {name!r} has no interpretation")
            table = np.array(self.relations[name], dtype=bool)
            if table.shape != (self.size,) * arity:
                raise StructureError(f"relation {name!r} has the wrong shape")
            table.setflags(write=False)
            relations[name] = table
        object.__setattr__(self, "constants", {n: int(self.constants[n]) for n in self.signature.constants})
        object.__setattr__(self, "functions", functions)
        object.__setattr__(self, "relations", relations)

    @classmethod
    def from_tables(cls, size: int, signature: Signature, constants: Mapping[str, int] = None,
                    functions: Mapping[str, Mapping[Tuple[int, ...], int]] = None,
                    relations: Mapping[str, Iterable[Sequence[int]]] = None) -> "FiniteStructure":
        """Build from function maps {args: value} and relation tuple lists."""
        function_tables = {}
        for name, arity in signature.functions:
            table = np.full((size,) * arity, -1, dtype=np.int64)
            for args, value in (functions or {}).get(name, {}).items():
                table[tuple(args)] = value
            if (table < 0).any():
                raise StructureError(f"table of {name!r} is not total over the domain")
            function_tables[name] = table
        relation_tables = {}
        for name, arity in signature.relations:
            table = np.zeros((size,) * arity, dtype=bool)
            for args in (relations or {}).get(name, ()):
                args = tuple(args)
                if len(args) != arity or not all(0 <= a < size for a in args):
                    raise StructureError(f"tuple {args} of {name!r} lies outside the domain")
                table[args] = True
            relation_tables[name] = table
        return cls(size, signature, dict(constants or {}), function_tables, relation_tables)

    @classmethod
    def from_document(cls, doc: Mapping[str, Any]) -> "FiniteStructure":
        """
        Load the structured document form:
        {"size", "signature", "constants", "functions": {f: [[args..., value]]},
        "relations": {R: [[args...]]}}.
        """
        try:
            size = int(doc["size"])
        except KeyError:
            raise StructureError("structure document has no size") from None
        if "signature" in doc:
            signature = Signature.from_document(doc["signature"])
        else:
            signature = _infer_signature(doc)
        functions = {name: {tuple(entry[:-1]): entry[-1] for entry in entries}
                     for name, entries in doc.get("functions", {}).items()}
        return cls.from_tables(size, signature, doc.get("constants", {}), functions,
                               doc.get("relations", {}))

    def to_document(self) -> Dict[str, Any]:
        functions = {}
        for name, table in self.functions.items():
            functions[name] = [list(args) + [int(table[args])] for args in np.ndindex(table.shape)]
        return {"size": self.size,
                "signature": self.signature.to_document(),
                "constants": dict(self.constants),
                "functions": functions,
                "relations": {name: [list(t) for t in self.relation_tuples(name)] for name in self.relations}}

    def relation_tuples(self, name: str) -> List[Tuple[int, ...]]:
        return sorted(tuple(int(i) for i in idx) for idx in np.argwhere(self.relations[name]))

    def with_relation(self, name: str, tuples: Iterable[Sequence[int]], arity: int = 1) -> "FiniteStructure":
        """Expansion by one new relation symbol."""
        signature = self.signature.extend(relations=((name, arity),))
        table = np.zeros((self.size,) * arity, dtype=bool)
        for args in tuples:
            table[tuple(args)] = True
        relations = dict(self.relations)
        relations[name] = table
        return FiniteStructure(self.size, signature, self.constants, self.functions, relations)

    @cached_property
    def named_signature(self) -> Signature:
        """The signature plus a constant for every element."""
        extra = [element_name(k) for k in range(self.size) if not self.signature.has_constant(element_name(k))]
        return self.signature.extend(constants=extra)

    # model interface shared with the naturals

    def constant(self, name: str) -> int:
        if name in self.constants:
            return self.constants[name]
        index = _element_index(name)
        if index is not None and index < self.size:
            return index
        raise UnknownSymbolError(f"unknown constant {name!r}")

    def apply(self, name: str, args: Tuple[int, ...]) -> int:
        if name not in self.functions:
            raise UnknownSymbolError(f"unknown function symbol {name!r}")
        return int(self.functions[name][args])

    def holds(self, name: str, args: Tuple[int, ...]) -> bool:
        if name not in self.relations:
            raise UnknownSymbolError(f"unknown relation symbol {name!r}")
        return bool(self.relations[name][args])

    def numeral_value(self, n: int) -> int:
        # a_1 = 1, a_{k+1} = 1 + a_k; the sequence is eventually periodic
        one = self.constant("1")
        seen: Dict[int, int] = {}
        value, k = one, 1
        while k < n:
            if value in seen:
                period = k - seen[value]
                for _ in range((n - k) % period):
                    value = self.apply("+", (one, value))
                return value
            seen[value] = k
            value = self.apply("+", (one, value))
            k += 1
        return value


def _infer_signature(doc: Mapping[str, Any]) -> Signature:
    functions = []
    for name, entries in doc.get("functions", {}).items():
        if not entries:
            raise StructureError(f"cannot infer the arity of {name!r} from an empty table")
        functions.append((name, len(entries[0]) - 1))
    relations = []
    for name, tuples in doc.get("relations", {}).items():
        if not tuples:
            raise StructureError(f"cannot infer the arity of {name!r}; give a signature")
        relations.append((name, len(tuples[0])))
    return Signature(tuple(doc.get("constants", {})), tuple(functions), tuple(relations))


class StandardModel:
    """The natural numbers with +, *, <, and the coding functions sub and pair."""

    def constant(self, name: str) -> int:
        if name == "0":
            return 0
        if name == "1":
            return 1
        raise UnknownSymbolError(f"unknown constant {name!r}")

    def apply(self, name: str, args: Tuple[int, ...]) -> int:
        if name == "+":
            return args[0] + args[1]
        if name == "*":
            return args[0] * args[1]
        if name == "sub":
            return sub_total(args[0], args[1])
        if name == "pair":
            return pair(args[0], args[1])
        raise UnknownSymbolError(f"unknown function symbol {name!r}")

    def holds(self, name: str, args: Tuple[int, ...]) -> bool:
        if name == "<":
            return args[0] < args[1]
        raise UnknownSymbolError(f"unknown relation symbol {name!r}")

    def numeral_value(self, n: int) -> int:
        return n


NATURALS = StandardModel()
Model = Union[FiniteStructure, StandardModel]


def eval_term(model: Any, t: Term, assignment: Optional[Assignment] = None) -> Any:
    """The value of t under the assignment, by structural recursion."""
    if isinstance(model, NaturalsEvaluator):
        model = model.model
    assignment = assignment or {}
    if isinstance(t, Var):
        if t.index not in assignment:
            raise UnassignedVariableError(f"variable v{t.index} is unassigned")
        return assignment[t.index]
    if isinstance(t, Const):
        return model.constant(t.name)
    if isinstance(t, Numeral):
        return model.numeral_value(t.value)
    return model.apply(t.name, tuple(eval_term(model, a, assignment) for a in t.args))


# exact evaluation over finite structures

def _require_assigned(phi: Formula, assignment: Assignment) -> None:
    missing = sorted(free_vars(phi) - set(assignment))
    if missing:
        raise UnassignedVariableError(f"free variables {missing} are unassigned")


def _holds(S: FiniteStructure, phi: Formula, env: Dict[int, int]) -> bool:
    if isinstance(phi, Eq):
        return eval_term(S, phi.left, env) == eval_term(S, phi.right, env)
    if isinstance(phi, Rel):
        return S.holds(phi.name, tuple(eval_term(S, a, env) for a in phi.args))
    if isinstance(phi, Not):
        return not _holds(S, phi.body, env)
    if isinstance(phi, And):
        return _holds(S, phi.left, env) and _holds(S, phi.right, env)
    if isinstance(phi, Or):
        return _holds(S, phi.left, env) or _holds(S, phi.right, env)
    if isinstance(phi, Implies):
        return not _holds(S, phi.left, env) or _holds(S, phi.right, env)
    test = any if isinstance(phi, Exists) else all
    return test(_holds(S, phi.body, {**env, phi.var: a}) for a in range(S.size))


@log_decorator
def eval_finite(S: FiniteStructure, phi: Formula, assignment: Optional[Assignment] = None) -> bool:
    """Standard Tarski semantics; quantifiers range over the whole domain."""
    assignment = dict(assignment or {})
    check_formula(phi, S.named_signature)
    _require_assigned(phi, assignment)
    return _holds(S, phi, assignment)


def expand_quantifiers(S: FiniteStructure, phi: Formula) -> Formula:
    """Replace every quantifier by the finite disjunction or conjunction of its element instances."""
    if isinstance(phi, (Eq, Rel)):
        return phi
    if isinstance(phi, Not):
        return Not(expand_quantifiers(S, phi.body))
    if isinstance(phi, (And, Or, Implies)):
        return type(phi)(expand_quantifiers(S, phi.left), expand_quantifiers(S, phi.right))
    connective = Or if isinstance(phi, Exists) else And
    instances = [expand_quantifiers(S, substitute(phi.body, phi.var, element_const(k))) for k in range(S.size)]
    return reduce(connective, instances)


def _ground_holds(S: FiniteStructure, phi: Formula) -> bool:
    if isinstance(phi, Eq):
        return eval_term(S, phi.left) == eval_term(S, phi.right)
    if isinstance(phi, Rel):
        return S.holds(phi.name, tuple(eval_term(S, a) for a in phi.args))
    if isinstance(phi, Not):
        return not _ground_holds(S, phi.body)
    if isinstance(phi, And):
        return _ground_holds(S, phi.left) and _ground_holds(S, phi.right)
    if isinstance(phi, Or):
        return _ground_holds(S, phi.left) or _ground_holds(S, phi.right)
    if isinstance(phi, Implies):
        return not _ground_holds(S, phi.left) or _ground_holds(S, phi.right)
    raise ValueError("expanded formula still contains a quantifier")


def eval_expanded(S: FiniteStructure, phi: Formula, assignment: Optional[Assignment] = None) -> bool:
    """The quantifier-expansion oracle: name assigned elements, expand, evaluate the ground result."""
    assignment = dict(assignment or {})
    _require_assigned(phi, assignment)
    for var in sorted(free_vars(phi)):
        phi = substitute(phi, var, element_const(assignment[var]))
    return _ground_holds(S, expand_quantifiers(S, phi))


# three-valued evaluation over the naturals

class TruthStatus(Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TruthValue3:
    status: TruthStatus
    reason: str = ""

    @property
    def is_true(self) -> bool:
        return self.status is TruthStatus.TRUE

    @property
    def is_false(self) -> bool:
        return self.status is TruthStatus.FALSE

    @property
    def is_unknown(self) -> bool:
        return self.status is TruthStatus.UNKNOWN

    @property
    def is_determined(self) -> bool:
        return self.status is not TruthStatus.UNKNOWN

    @classmethod
    def of(cls, value: bool) -> "TruthValue3":
        return TRUE if value else FALSE

    @classmethod
    def unknown(cls, reason: str) -> "TruthValue3":
        return cls(TruthStatus.UNKNOWN, reason)

    # Kleene strong connectives
    def __invert__(self) -> "TruthValue3":
        if self.is_unknown:
            return self
        return FALSE if self.is_true else TRUE

    def __and__(self, other: "TruthValue3") -> "TruthValue3":
        if self.is_false:
            return self
        if other.is_false:
            return other
        return self if self.is_unknown else other

    def __or__(self, other: "TruthValue3") -> "TruthValue3":
        if self.is_true:
            return self
        if other.is_true:
            return other
        return self if self.is_unknown else other

    def __str__(self) -> str:
        return self.status.value


TRUE = TruthValue3(TruthStatus.TRUE)
FALSE = TruthValue3(TruthStatus.FALSE)


@dataclass(frozen=True)
class Budget:
    witness_bound: int = 64
    depth_bound: int = 16

    def __post_init__(self):
        if self.witness_bound < 1 or self.depth_bound < 1:
            raise ValueError("budget bounds must be positive")


def conjuncts(phi: Formula) -> List[Formula]:
    """Top-level conjuncts, reading ~~a, ~(a | b) and ~(a -> b) conjunctively."""
    if isinstance(phi, And):
        return conjuncts(phi.left) + conjuncts(phi.right)
    if isinstance(phi, Not):
        body = phi.body
        if isinstance(body, Not):
            return conjuncts(body.body)
        if isinstance(body, Or):
            return conjuncts(Not(body.left)) + conjuncts(Not(body.right))
        if isinstance(body, Implies):
            return conjuncts(body.left) + conjuncts(Not(body.right))
    return [phi]


class NaturalsEvaluator:
    """
    Budgeted evaluation over the naturals.

    An existential is true once a witness is found and false only when its
    candidate set is provably complete: a conjunct v < t bounds it, or a linear
    conjunct s = t pins it.  Everything else past the witness bound is unknown.
    """

    def __init__(self, budget: Optional[Budget] = None, model: Optional[StandardModel] = None,
                 signature: Signature = ARITHMETIC_CODED):
        self.budget = budget or Budget()
        self.model = model or NATURALS
        self.signature = signature

    def evaluate(self, phi: Formula, assignment: Optional[Assignment] = None) -> TruthValue3:
        assignment = dict(assignment or {})
        _require_assigned(phi, assignment)
        return self._eval(phi, assignment, 0)

    def term(self, t: Term, env: Assignment) -> int:
        return eval_term(self.model, t, env)

    def relation(self, name: str, values: Tuple[int, ...], depth: int) -> TruthValue3:
        return TruthValue3.of(self.model.holds(name, values))

    def _eval(self, phi: Formula, env: Dict[int, int], depth: int) -> TruthValue3:
        if isinstance(phi, Eq):
            return TruthValue3.of(self.term(phi.left, env) == self.term(phi.right, env))
        if isinstance(phi, Rel):
            return self.relation(phi.name, tuple(self.term(a, env) for a in phi.args), depth)
        if isinstance(phi, Not):
            return ~self._eval(phi.body, env, depth)
        if isinstance(phi, And):
            left = self._eval(phi.left, env, depth)
            return left if left.is_false else left & self._eval(phi.right, env, depth)
        if isinstance(phi, Or):
            left = self._eval(phi.left, env, depth)
            return left if left.is_true else left | self._eval(phi.right, env, depth)
        if isinstance(phi, Implies):
            left = ~self._eval(phi.left, env, depth)
            return left if left.is_true else left | self._eval(phi.right, env, depth)
        if isinstance(phi, Forall):
            return ~self._exists(phi.var, Not(phi.body), env, depth)
        return self._exists(phi.var, phi.body, env, depth)

    def _exists(self, var: int, body: Formula, env: Dict[int, int], depth: int) -> TruthValue3:
        if depth >= self.budget.depth_bound:
            return TruthValue3.unknown(f"budget exhausted at quantifier depth {depth}")
        candidates, exhaustive = self.candidates(var, body, env)
        pending = None
        for n in candidates:
            verdict = self._eval(body, {**env, var: n}, depth + 1)
            if verdict.is_true:
                return verdict
            if verdict.is_unknown and pending is None:
                pending = verdict
        if pending is not None:
            return pending
        if exhaustive:
            return FALSE
        return TruthValue3.unknown(
            f"budget exhausted at quantifier depth {depth}: no witness up to {self.budget.witness_bound}")

    def candidates(self, var: int, body: Formula, env: Dict[int, int]) -> Tuple[Iterable[int], bool]:
        """Witness candidates for var and whether they are provably all of them."""
        bound = None
        for phi in conjuncts(body):
            if isinstance(phi, Eq):
                pinned = self._pinned(var, phi, env)
                if pinned is not None:
                    return pinned, True
            elif (isinstance(phi, Rel) and phi.name == "<" and phi.args[0] == Var(var)
                  and var not in term_vars(phi.args[1])):
                try:
                    value = self.term(phi.args[1], env)
                except UnassignedVariableError:
                    continue
                bound = value if bound is None else min(bound, value)
        limit = self.budget.witness_bound + 1
        if bound is not None and bound <= limit:
            return range(bound), True
        return range(limit if bound is None else min(bound, limit)), False

    def _pinned(self, var: int, phi: Eq, env: Dict[int, int]) -> Optional[List[int]]:
        left = self._linear(phi.left, var, env)
        right = self._linear(phi.right, var, env)
        if left is None or right is None:
            return None
        a, b = left[0] - right[0], right[1] - left[1]
        if a == 0:
            return None
        if b % a or b // a < 0:
            return []
        return [b // a]

    def _linear(self, t: Term, var: int, env: Dict[int, int]) -> Optional[Tuple[int, int]]:
        # (a, b) with t = a * var + b, or None
        if var not in term_vars(t):
            try:
                return 0, self.term(t, env)
            except UnassignedVariableError:
                return None
        if isinstance(t, Var):
            return 1, 0
        if t.name == "+":
            left, right = self._linear(t.args[0], var, env), self._linear(t.args[1], var, env)
            if left is None or right is None:
                return None
            return left[0] + right[0], left[1] + right[1]
        if t.name == "*":
            left, right = self._linear(t.args[0], var, env), self._linear(t.args[1], var, env)
            if left is None or right is None or (left[0] and right[0]):
                return None
            return left[0] * right[1] + right[0] * left[1], left[1] * right[1]
        return None


@log_decorator
def eval_nat(phi: Formula, assignment: Optional[Assignment] = None, budget: Optional[Budget] = None) -> TruthValue3:
    """Three-valued truth of phi over the naturals under the budget."""
    evaluator = NaturalsEvaluator(budget)
    check_formula(phi, evaluator.signature)
    return evaluator.evaluate(phi, assignment)


# the truth-condition auditor

CLAUSES = ("atomic", "negation", "conjunction", "disjunction", "implication", "existential", "universal")


@dataclass(frozen=True)
class Violation:
    clause: str
    code: int
    text: str
    expected: bool
    found: bool
    status: str = "violation"

    def to_record(self) -> Dict[str, Any]:
        return {"clause": self.clause, "code": str(self.code), "sentence": self.text,
                "expected": self.expected, "found": self.found, "status": self.status}


def _instances(phi: Formula, model: Any) -> List[Formula]:
    if isinstance(model, FiniteStructure):
        terms = [element_const(k) for k in range(model.size)]
    else:
        terms = [numeral(n) for n in range(model.budget.witness_bound + 1)]
    return [substitute(phi.body, phi.var, t) for t in terms]


def immediate_subsentences(phi: Formula, model: Any) -> List[Formula]:
    if isinstance(phi, (Eq, Rel)):
        return []
    if isinstance(phi, Not):
        return [phi.body]
    if isinstance(phi, (And, Or, Implies)):
        return [phi.left, phi.right]
    return _instances(phi, model)


def subsentence_closure(corpus: Iterable[Formula], model: Any, full: bool = False) -> List[Formula]:
    """The corpus plus immediate subsentences (one step, or all the way down when full)."""
    out: List[Formula] = []
    seen: Set[Formula] = set()
    frontier = [phi for phi in corpus]
    for phi in frontier:
        if phi not in seen:
            seen.add(phi)
            out.append(phi)
    rounds = 0
    while frontier and (full or rounds < 1):
        next_frontier = []
        for phi in frontier:
            for child in immediate_subsentences(phi, model):
                if child not in seen:
                    seen.add(child)
                    out.append(child)
                    next_frontier.append(child)
        frontier = next_frontier
        rounds += 1
    return out


def _as_formula(item: Union[int, Formula]) -> Formula:
    return decode(item) if isinstance(item, int) else item


def _clause_expected(phi: Formula, member: Callable[[Formula], bool]) -> Tuple[str, Optional[bool]]:
    if isinstance(phi, Not):
        return "negation", not member(phi.body)
    if isinstance(phi, And):
        return "conjunction", member(phi.left) and member(phi.right)
    if isinstance(phi, Or):
        return "disjunction", member(phi.left) or member(phi.right)
    if isinstance(phi, Implies):
        return "implication", not member(phi.left) or member(phi.right)
    return ("existential" if isinstance(phi, Exists) else "universal"), None


@log_decorator
def check_truth_conditions(candidate: Iterable[int], model: Any, corpus: Iterable[Union[int, Formula]],
                           budget: Optional[Budget] = None) -> List[Violation]:
    """
    Audit a candidate truth set against the Tarski clauses on the one-step closure of
    the corpus.  model is a FiniteStructure, or a NaturalsEvaluator (None means the
    naturals under the given budget).  Over the naturals a quantifier clause that
    would need a witness past the bound is reported as "unverified".
    """
    if model is None:
        model = NaturalsEvaluator(budget)
    members = set()
    for c in candidate:
        decode(c)
        members.add(int(c))
    sentences = [_as_formula(item) for item in corpus]
    for phi in sentences:
        if not is_sentence(phi):
            raise ValueError(f"corpus entry {format_formula(phi)} is not a sentence")
    closed = subsentence_closure(sentences, model)
    codes = {phi: encode(phi) for phi in closed}
    present = set(closed)

    def member(phi: Formula) -> bool:
        return codes[phi] in members

    violations = []
    finite = isinstance(model, FiniteStructure)
    for phi in closed:
        found = member(phi)
        text = format_formula(phi)
        if isinstance(phi, (Eq, Rel)):
            if finite:
                expected = TruthValue3.of(_holds(model, phi, {}))
            else:
                expected = model.evaluate(phi)
            if expected.is_unknown:
                violations.append(Violation("atomic", codes[phi], text, found, found, "unverified"))
            elif expected.is_true != found:
                violations.append(Violation("atomic", codes[phi], text, expected.is_true, found))
            continue
        children = immediate_subsentences(phi, model)
        if not all(child in present for child in children):
            continue
        clause, expected = _clause_expected(phi, member)
        if expected is not None:
            if expected != found:
                violations.append(Violation(clause, codes[phi], text, expected, found))
            continue
        flags = [member(child) for child in children]
        if clause == "existential":
            expected = any(flags)
            if expected != found:
                status = "unverified" if found and not finite else "violation"
                violations.append(Violation(clause, codes[phi], text, expected, found, status))
        else:
            expected = all(flags)
            if expected != found:
                status = "unverified" if not found and not finite else "violation"
                violations.append(Violation(clause, codes[phi], text, expected, found, status))
    return violations


def real_violations(violations: Iterable[Violation]) -> List[Violation]:
    return [v for v in violations if v.status == "violation"]


def violations_table(violations: Iterable[Violation]) -> pd.DataFrame:
    return Utils.table([v.to_record() for v in violations],
                       ["clause", "code", "sentence", "expected", "found", "status"])


def exact_truth_set(S: FiniteStructure, corpus: Iterable[Union[int, Formula]], full: bool = False) -> Set[int]:
    """Codes of the true sentences of the (one-step or full) closure of the corpus."""
    closed = subsentence_closure([_as_formula(item) for item in corpus], S, full)
    return {encode(phi) for phi in closed if _holds(S, phi, {})}
