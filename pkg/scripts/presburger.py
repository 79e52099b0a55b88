"""
Presburger arithmetic over the naturals: translation into linear form, Cooper-style
quantifier elimination, decision, periodicity certificates for unary definable sets,
and periodicity refutation of candidate sets.

Elimination works over the integers; every quantified variable is relativized to
the naturals by a guard x >= 0 before its quantifier is removed.  Free variables
are read as naturals.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np
import pandas as pd

from scripts.syntax import (
    And, App, Const, Eq, Exists, Forall, Formula, FreeVariableError, Implies, Not, Numeral, Or,
    PRESBURGER, Rel, Term, Var, format_formula, numeral, substitute,
)
from scripts.utils import Utils, log_decorator

logger = logging.getLogger(__name__)

# the output grammar: ground products and divisibility atoms div(d, t)
PRESBURGER_OUTPUT = PRESBURGER.extend(functions=(("*", 2),), relations=(("div", 2),))
NOT_A_PROOF = "periodicity refutation is evidence, not proof, of non-definability"


class NonLinearError(ValueError):
    pass


class CertificateError(ValueError):
    pass


# linear terms and atoms

@dataclass(frozen=True)
class LinearTerm:
    """sum of coeff * v_var over coeffs, plus const; coeffs sorted by variable, no zeros."""
    coeffs: Tuple[Tuple[int, int], ...] = ()
    const: int = 0

    @classmethod
    def of(cls, coeffs: Mapping[int, int], const: int = 0) -> "LinearTerm":
        return cls(tuple(sorted((v, a) for v, a in coeffs.items() if a)), const)

    @classmethod
    def variable(cls, v: int) -> "LinearTerm":
        return cls(((v, 1),), 0)

    @classmethod
    def constant(cls, c: int) -> "LinearTerm":
        return cls((), c)

    def coeff(self, v: int) -> int:
        return dict(self.coeffs).get(v, 0)

    @property
    def variables(self) -> FrozenSet[int]:
        return frozenset(v for v, _ in self.coeffs)

    @property
    def is_ground(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LinearTerm") -> "LinearTerm":
        merged = dict(self.coeffs)
        for v, a in other.coeffs:
            merged[v] = merged.get(v, 0) + a
        return LinearTerm.of(merged, self.const + other.const)

    def __neg__(self) -> "LinearTerm":
        return self.scale(-1)

    def __sub__(self, other: "LinearTerm") -> "LinearTerm":
        return self + (-other)

    def scale(self, k: int) -> "LinearTerm":
        return LinearTerm.of({v: a * k for v, a in self.coeffs}, self.const * k)

    def shift(self, c: int) -> "LinearTerm":
        return LinearTerm(self.coeffs, self.const + c)

    def without(self, v: int) -> "LinearTerm":
        return LinearTerm(tuple((u, a) for u, a in self.coeffs if u != v), self.const)

    def with_coeff(self, v: int, a: int) -> "LinearTerm":
        merged = dict(self.coeffs)
        merged[v] = a
        return LinearTerm.of(merged, self.const)

    def substitute(self, v: int, t: "LinearTerm") -> "LinearTerm":
        a = self.coeff(v)
        return self.without(v) + t.scale(a) if a else self

    def evaluate(self, env: Mapping[int, int]) -> int:
        return self.const + sum(a * env[v] for v, a in self.coeffs)


@dataclass(frozen=True)
class Comparison:
    """term op 0 with op one of "=", "<", "<="."""
    term: LinearTerm
    op: str


@dataclass(frozen=True)
class Divisibility:
    """d | term, or its negation."""
    d: int
    term: LinearTerm
    negated: bool = False

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("divisibility moduli are positive")


@dataclass(frozen=True)
class Truth:
    value: bool


@dataclass(frozen=True)
class LNot:
    body: "LinearFormula"


@dataclass(frozen=True)
class LAnd:
    items: Tuple["LinearFormula", ...]


@dataclass(frozen=True)
class LOr:
    items: Tuple["LinearFormula", ...]


@dataclass(frozen=True)
class LExists:
    var: int
    body: "LinearFormula"


@dataclass(frozen=True)
class LForall:
    var: int
    body: "LinearFormula"


LinearAtom = Union[Comparison, Divisibility]
LinearFormula = Union[Comparison, Divisibility, Truth, LNot, LAnd, LOr, LExists, LForall]
TOP, BOTTOM = Truth(True), Truth(False)


def linear_free_vars(phi: LinearFormula) -> FrozenSet[int]:
    if isinstance(phi, (Comparison, Divisibility)):
        return phi.term.variables
    if isinstance(phi, Truth):
        return frozenset()
    if isinstance(phi, LNot):
        return linear_free_vars(phi.body)
    if isinstance(phi, (LAnd, LOr)):
        return frozenset().union(*(linear_free_vars(p) for p in phi.items))
    return linear_free_vars(phi.body) - {phi.var}


def is_quantifier_free(phi: LinearFormula) -> bool:
    if isinstance(phi, (LExists, LForall)):
        return False
    if isinstance(phi, LNot):
        return is_quantifier_free(phi.body)
    if isinstance(phi, (LAnd, LOr)):
        return all(is_quantifier_free(p) for p in phi.items)
    return True


def atoms_of(phi: LinearFormula) -> List[LinearAtom]:
    if isinstance(phi, (Comparison, Divisibility)):
        return [phi]
    if isinstance(phi, Truth):
        return []
    if isinstance(phi, LNot):
        return atoms_of(phi.body)
    if isinstance(phi, (LAnd, LOr)):
        return [a for p in phi.items for a in atoms_of(p)]
    return atoms_of(phi.body)


# translation from the workbench grammar

def _linear_term(t: Term) -> LinearTerm:
    if isinstance(t, Var):
        return LinearTerm.variable(t.index)
    if isinstance(t, Const):
        if t.name in ("0", "1"):
            return LinearTerm.constant(int(t.name))
        raise NonLinearError(f"constant {t.name!r} is not Presburger")
    if isinstance(t, Numeral):
        return LinearTerm.constant(t.value)
    if t.name == "+":
        return _linear_term(t.args[0]) + _linear_term(t.args[1])
    if t.name == "*":
        left, right = _linear_term(t.args[0]), _linear_term(t.args[1])
        if left.is_ground:
            return right.scale(left.const)
        if right.is_ground:
            return left.scale(right.const)
        raise NonLinearError("product of two non-ground terms")
    raise NonLinearError(f"function symbol {t.name!r} is not Presburger")


def _translate(phi: Formula) -> LinearFormula:
    if isinstance(phi, Eq):
        return Comparison(_linear_term(phi.left) - _linear_term(phi.right), "=")
    if isinstance(phi, Rel):
        if phi.name == "<" and len(phi.args) == 2:
            return Comparison(_linear_term(phi.args[0]) - _linear_term(phi.args[1]), "<")
        if phi.name == "div" and len(phi.args) == 2:
            modulus = _linear_term(phi.args[0])
            if not modulus.is_ground or modulus.const < 1:
                raise NonLinearError("div needs a positive ground modulus")
            return Divisibility(modulus.const, _linear_term(phi.args[1]))
        raise NonLinearError(f"relation {phi.name!r} is not Presburger")
    if isinstance(phi, Not):
        return LNot(_translate(phi.body))
    if isinstance(phi, And):
        return LAnd((_translate(phi.left), _translate(phi.right)))
    if isinstance(phi, Or):
        return LOr((_translate(phi.left), _translate(phi.right)))
    if isinstance(phi, Implies):
        return LOr((LNot(_translate(phi.left)), _translate(phi.right)))
    if isinstance(phi, Exists):
        return LExists(phi.var, _translate(phi.body))
    return LForall(phi.var, _translate(phi.body))



@log_decorator
def to_linear(phi: Formula) -> LinearFormula:
    """Translate a formula over {0, 1, +, <, =} (plus ground products and div) into linear form."""
    return _translate(phi)


def _as_linear(phi: Union[Formula, LinearFormula]) -> LinearFormula:
    if isinstance(phi, (Comparison, Divisibility, Truth, LNot, LAnd, LOr, LExists, LForall)):
        return phi
    return _translate(phi)


# rendering back into the grammar

def _sum_term(parts: List[Tuple[int, int]], const: int) -> Term:
    terms: List[Term] = []
    for v, a in parts:
        terms.append(Var(v) if a == 1 else App("*", (numeral(a), Var(v))))
    if const or not terms:
        terms.append(numeral(const))
    return reduce(lambda left, right: App("+", (left, right)), terms)


def _sides(t: LinearTerm) -> Tuple[Term, Term]:
    positive = [(v, a) for v, a in t.coeffs if a > 0]
    negative = [(v, -a) for v, a in t.coeffs if a < 0]
    return (_sum_term(positive, max(t.const, 0)), _sum_term(negative, max(-t.const, 0)))


def to_formula(phi: LinearFormula) -> Formula:
    """Render a linear formula in the workbench grammar extended with div(d, t)."""
    if isinstance(phi, Truth):
        zero = Eq(Const("0"), Const("0"))
        return zero if phi.value else Not(zero)
    if isinstance(phi, Comparison):
        left, right = _sides(phi.term)
        if phi.op == "=":
            return Eq(left, right)
        if phi.op == "<":
            return Rel("<", (left, right))
        return Rel("<", (left, App("+", (right, Const("1")))))
    if isinstance(phi, Divisibility):
        reduced = LinearTerm.of({v: a % phi.d for v, a in phi.term.coeffs}, phi.term.const % phi.d)
        atom = Rel("div", (numeral(phi.d), _sum_term(list(reduced.coeffs), reduced.const)))
        return Not(atom) if phi.negated else atom
    if isinstance(phi, LNot):
        return Not(to_formula(phi.body))
    if isinstance(phi, (LAnd, LOr)):
        joiner = And if isinstance(phi, LAnd) else Or
        if not phi.items:
            return to_formula(Truth(isinstance(phi, LAnd)))
        return reduce(joiner, [to_formula(p) for p in phi.items])
    if isinstance(phi, LExists):
        return Exists(phi.var, to_formula(phi.body))
    return Forall(phi.var, to_formula(phi.body))


def format_linear(phi: LinearFormula) -> str:
    return format_formula(to_formula(phi))


# normalization

def _simplify_atom(atom: LinearAtom) -> LinearFormula:
    if isinstance(atom, Comparison):
        t = atom.term
        if t.is_ground:
            return Truth(t.const < 0)
        g = reduce(gcd, (abs(a) for _, a in t.coeffs))
        if g > 1:
            # g*s + c < 0  iff  s + floor(c / g) < 0
            t = LinearTerm(tuple((v, a // g) for v, a in t.coeffs), t.const // g)
        return Comparison(t, "<")
    d = atom.d
    t = LinearTerm.of({v: a % d for v, a in atom.term.coeffs}, atom.term.const % d)
    if t.is_ground:
        return Truth((t.const == 0) != atom.negated)
    g = reduce(gcd, [a for _, a in t.coeffs] + [t.const, d])
    if g > 1:
        d //= g
        t = LinearTerm(tuple((v, a // g) for v, a in t.coeffs), t.const // g)
    if d == 1:
        return Truth(not atom.negated)
    return Divisibility(d, t, atom.negated)


def _conjoin(items: Iterable[LinearFormula]) -> LinearFormula:
    out: List[LinearFormula] = []
    for item in items:
        parts = item.items if isinstance(item, LAnd) else (item,)
        for part in parts:
            if part == BOTTOM:
                return BOTTOM
            if part != TOP and part not in out:
                out.append(part)
    if not out:
        return TOP
    return out[0] if len(out) == 1 else LAnd(tuple(out))


def _disjoin(items: Iterable[LinearFormula]) -> LinearFormula:
    out: List[LinearFormula] = []
    for item in items:
        parts = item.items if isinstance(item, LOr) else (item,)
        for part in parts:
            if part == TOP:
                return TOP
            if part != BOTTOM and part not in out:
                out.append(part)
    if not out:
        return BOTTOM
    return out[0] if len(out) == 1 else LOr(tuple(out))


def _nnf(phi: LinearFormula, positive: bool = True) -> LinearFormula:
    """Negation normal form over "<" comparisons and (negated) divisibility, simplified."""
    if isinstance(phi, Truth):
        return Truth(phi.value == positive)
    if isinstance(phi, Comparison):
        t = phi.term
        if phi.op == "<":
            return _simplify_atom(Comparison(t, "<") if positive else Comparison((-t).shift(-1), "<"))
        if phi.op == "<=":
            return _simplify_atom(Comparison(t.shift(-1), "<") if positive else Comparison(-t, "<"))
        if positive:
            return _conjoin([_simplify_atom(Comparison(t.shift(-1), "<")),
                             _simplify_atom(Comparison((-t).shift(-1), "<"))])
        return _disjoin([_simplify_atom(Comparison(t, "<")), _simplify_atom(Comparison(-t, "<"))])
    if isinstance(phi, Divisibility):
        return _simplify_atom(Divisibility(phi.d, phi.term, phi.negated != (not positive)))
    if isinstance(phi, LNot):
        return _nnf(phi.body, not positive)
    if isinstance(phi, (LAnd, LOr)):
        items = [_nnf(p, positive) for p in phi.items]
        conjunctive = isinstance(phi, LAnd) == positive
        return _conjoin(items) if conjunctive else _disjoin(items)
    raise ValueError("normal form expects a quantifier-free formula")


def _substitute_qf(phi: LinearFormula, v: int, t: LinearTerm) -> LinearFormula:
    if isinstance(phi, Truth):
        return phi
    if isinstance(phi, Comparison):
        return _simplify_atom(Comparison(phi.term.substitute(v, t), phi.op))
    if isinstance(phi, Divisibility):
        return _simplify_atom(Divisibility(phi.d, phi.term.substitute(v, t), phi.negated))
    if isinstance(phi, LAnd):
        return _conjoin(_substitute_qf(p, v, t) for p in phi.items)
    return _disjoin(_substitute_qf(p, v, t) for p in phi.items)


def _map_atoms(phi: LinearFormula, fn: Callable[[LinearAtom], LinearFormula]) -> LinearFormula:
    if isinstance(phi, Truth):
        return phi
    if isinstance(phi, (Comparison, Divisibility)):
        return fn(phi)
    items = [_map_atoms(p, fn) for p in phi.items]
    return _conjoin(items) if isinstance(phi, LAnd) else _disjoin(items)


# Cooper elimination

def _cooper(x: int, phi: LinearFormula) -> LinearFormula:
    """A quantifier-free equivalent over the integers of exists x. phi, phi in normal form."""
    coefficients = [abs(a.term.coeff(x)) for a in atoms_of(phi) if a.term.coeff(x)]
    if not coefficients:
        return phi
    scale = reduce(lcm, coefficients)

    def unit(atom: LinearAtom) -> LinearFormula:
        a = atom.term.coeff(x)
        if not a:
            return atom
        m = scale // abs(a)
        term = atom.term.scale(m).with_coeff(x, 1 if a > 0 else -1)
        if isinstance(atom, Comparison):
            return Comparison(term, "<")
        return Divisibility(atom.d * m, term, atom.negated)

    # x now stands for scale * x
    body = _map_atoms(phi, unit)
    if scale > 1:
        body = _conjoin([body, Divisibility(scale, LinearTerm.variable(x))])

    uppers: List[LinearTerm] = []
    lowers: List[LinearTerm] = []
    moduli = [1]
    for atom in atoms_of(body):
        a = atom.term.coeff(x)
        if not a:
            continue
        if isinstance(atom, Divisibility):
            moduli.append(atom.d)
        elif a > 0:
            # x + t < 0: x < -t
            bound = -atom.term.without(x)
            if bound not in uppers:
                uppers.append(bound)
        else:
            # -x + t < 0: x > t
            bound = atom.term.without(x)
            if bound not in lowers:
                lowers.append(bound)
    delta = reduce(lcm, moduli)

    use_lower = len(lowers) <= len(uppers)

    def infinite(atom: LinearAtom) -> LinearFormula:
        a = atom.term.coeff(x)
        if isinstance(atom, Divisibility) or not a:
            return atom
        # at minus infinity upper bounds hold and lower bounds fail
        return Truth((a > 0) == use_lower)

    limit = _map_atoms(body, infinite)
    disjuncts = []
    for j in range(1, delta + 1):
        disjuncts.append(_substitute_qf(limit, x, LinearTerm.constant(j if use_lower else -j)))
        if disjuncts[-1] == TOP:
            return TOP
    for bound in (lowers if use_lower else uppers):
        for j in range(1, delta + 1):
            point = bound.shift(j if use_lower else -j)
            disjuncts.append(_substitute_qf(body, x, point))
            if disjuncts[-1] == TOP:
                return TOP
    return _disjoin(disjuncts)


def _exists_nat(x: int, phi: LinearFormula) -> LinearFormula:
    guard = Comparison(LinearTerm.of({x: -1}, -1), "<")  # x >= 0
    if isinstance(phi, LOr):
        return _disjoin(_exists_nat(x, p) for p in phi.items)
    return _cooper(x, _conjoin([guard, phi]))


def _eliminate(phi: LinearFormula) -> LinearFormula:
    if isinstance(phi, (Comparison, Divisibility, Truth)):
        return _nnf(phi)
    if isinstance(phi, LNot):
        return _nnf(_eliminate(phi.body), False)
    if isinstance(phi, LAnd):
        return _conjoin(_eliminate(p) for p in phi.items)
    if isinstance(phi, LOr):
        return _disjoin(_eliminate(p) for p in phi.items)
    if isinstance(phi, LExists):
        return _exists_nat(phi.var, _eliminate(phi.body))
    # forall x. b  ==  ~ exists x. ~b
    return _nnf(_exists_nat(phi.var, _nnf(_eliminate(phi.body), False)), False)


@log_decorator
def eliminate_quantifiers(phi: Union[Formula, LinearFormula]) -> LinearFormula:
    """A quantifier-free equivalent over the naturals, in normal form."""
    return _eliminate(_as_linear(phi))


def holds(phi: LinearFormula, env: Mapping[int, int]) -> bool:
    """Truth of a quantifier-free linear formula under an integer assignment."""
    if isinstance(phi, Truth):
        return phi.value
    if isinstance(phi, Comparison):
        value = phi.term.evaluate(env)
        return value == 0 if phi.op == "=" else value < 0 if phi.op == "<" else value <= 0
    if isinstance(phi, Divisibility):
        return (phi.term.evaluate(env) % phi.d == 0) != phi.negated
    if isinstance(phi, LNot):
        return not holds(phi.body, env)
    if isinstance(phi, LAnd):
        return all(holds(p, env) for p in phi.items)
    if isinstance(phi, LOr):
        return any(holds(p, env) for p in phi.items)
    raise ValueError("holds expects a quantifier-free formula")


def holds_bounded(phi: LinearFormula, env: Mapping[int, int], bound: int) -> bool:
    """Brute force: quantifiers range over 0..bound.  Exact when every quantifier is bounded below bound."""
    if isinstance(phi, (LExists, LForall)):
        test = any if isinstance(phi, LExists) else all
        return test(holds_bounded(phi.body, {**env, phi.var: n}, bound) for n in range(bound + 1))
    if isinstance(phi, LNot):
        return not holds_bounded(phi.body, env, bound)
    if isinstance(phi, LAnd):
        return all(holds_bounded(p, env, bound) for p in phi.items)
    if isinstance(phi, LOr):
        return any(holds_bounded(p, env, bound) for p in phi.items)
    return holds(phi, env)


@log_decorator
def decide(sentence: Union[Formula, LinearFormula]) -> bool:
    """Truth of a closed sentence over (N, +, <, 0, 1)."""
    return _decide(_as_linear(sentence))


def _decide(linear: LinearFormula) -> bool:
    free = linear_free_vars(linear)
    if free:
        raise FreeVariableError(f"decide needs a sentence; free variables {sorted(free)}")
    return holds(_eliminate(linear), {})


# periodicity

@dataclass(frozen=True)
class PeriodicityCertificate:
    threshold: int
    period: int
    table: Tuple[bool, ...]
    verified_to: int = 0

    def __post_init__(self):
        if self.period < 1 or len(self.table) != self.period:
            raise CertificateError("a certificate needs one table entry per residue")

    def predicts(self, n: int) -> bool:
        """Membership of n >= threshold."""
        return self.table[(n - self.threshold) % self.period]

    def to_record(self) -> Dict[str, Any]:
        return {"threshold": self.threshold, "period": self.period,
                "table": ["in" if bit else "out" for bit in self.table],
                "verified_to": self.verified_to}


def _unary(phi: Union[Formula, LinearFormula]) -> Tuple[LinearFormula, int]:
    linear = _as_linear(phi)
    free = linear_free_vars(linear)
    if len(free) != 1:
        raise FreeVariableError(f"expected exactly one free variable, found {sorted(free)}")
    return linear, next(iter(free))


@log_decorator
def definable_set_period(phi: Union[Formula, LinearFormula], verify_bound: int = 1000) -> PeriodicityCertificate:
    """
    Threshold and period of the unary set defined by phi, read off its eliminated form
    and then verified against decide on 0..verify_bound.
    """
    linear, x = _unary(phi)
    eliminated = _eliminate(linear)
    threshold, period = 0, 1
    for atom in atoms_of(eliminated):
        a = atom.term.coeff(x)
        if isinstance(atom, Divisibility):
            period = lcm(period, atom.d)
        elif a:
            threshold = max(threshold, abs(atom.term.const) // abs(a) + 1)

    def member(n: int) -> bool:
        return holds(eliminated, {x: n})

    # smallest period p dividing the raw one that repeats over a full raw window
    window = [member(n) for n in range(threshold, threshold + 2 * period)]
    best = period
    for p in range(1, period + 1):
        if period % p == 0 and all(window[i] == window[i + p] for i in range(period)):
            best = p
            break
    while threshold > 0 and member(threshold - 1) == member(threshold - 1 + best):
        threshold -= 1
    certificate = PeriodicityCertificate(threshold, best, tuple(member(threshold + i) for i in range(best)),
                                         verify_bound)
    for n in range(verify_bound + 1):
        truth = _decide(_translate(substitute(to_formula(linear), x, numeral(n))))
        expected = certificate.predicts(n) if n >= threshold else member(n)
        if truth != expected:
            raise CertificateError(f"certificate fails at {n}: decide gives {truth}")
    return certificate


# refutation of eventual periodicity

@dataclass(frozen=True)
class RefutationReport:
    name: str
    bound: int
    refuted: bool
    undefeated: Tuple[int, ...]
    witnesses: pd.DataFrame
    note: str = NOT_A_PROOF

    @property
    def verdict(self) -> str:
        if self.refuted:
            return f"refuted up to {self.bound}"
        return f"no refutation up to {self.bound}"

    def to_record(self) -> Dict[str, Any]:
        return {"name": self.name, "bound": self.bound, "refuted": self.refuted, "verdict": self.verdict,
                "undefeated_periods": list(self.undefeated), "note": self.note,
                "witnesses": Utils.records(self.witnesses)}


@log_decorator
def periodicity_refute(member: Callable[[int], bool], bound: int, name: str = "member") -> RefutationReport:
    """
    Try to defeat every (threshold, period) with threshold + 2 * period <= bound by a
    violation n >= threshold, n + period <= bound, member(n) != member(n + period).

    For each period the last violation n_p defeats every threshold up to n_p, so the
    period is defeated iff n_p >= bound - 2 * period.
    """
    bits = np.fromiter((bool(member(n)) for n in range(bound + 1)), dtype=bool, count=bound + 1)
    rows = []
    undefeated = []
    for p in range(1, bound // 2 + 1):
        diff = np.flatnonzero(bits[:-p] != bits[p:])
        last = int(diff[-1]) if diff.size else -1
        defeated = last >= bound - 2 * p
        if not defeated:
            undefeated.append(p)
        rows.append({"period": p, "witness": last if last >= 0 else None,
                     "member_n": bool(bits[last]) if last >= 0 else None,
                     "member_n_plus_period": bool(bits[last + p]) if last >= 0 else None,
                     "defeated": defeated})
    witnesses = Utils.table(rows, ["period", "witness", "member_n", "member_n_plus_period", "defeated"])
    report = RefutationReport(name, bound, not undefeated, tuple(undefeated), witnesses)
    logger.info(f"{name}: {report.verdict} ({NOT_A_PROOF})")
    return report


def squares(n: int) -> bool:
    """The diagonal of the multiplication graph: n = m * m."""
    return isqrt(n) ** 2 == n


def evens(n: int) -> bool:
    return n % 2 == 0


def powers_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def below(k: int) -> Callable[[int], bool]:
    return lambda n: n < k


BUILTIN_SETS: Dict[str, Callable[[int], bool]] = {
    "squares": squares,
    "evens": evens,
    "powers_of_two": powers_of_two,
    "below7": below(7),
}
