"""
Abstract syntax, concrete grammar and substitution for first-order formulas.

Variables are natural-number indices; ``x``, ``y`` and ``z`` are the canonical
names of indices 0, 1 and 2 and ``v3``, ``v4``, ... name the rest (``v0`` is
accepted as a spelling of ``x``).  Decimal literals are numerals: ``0`` and ``1``
are the constants, larger literals are numeral nodes standing for the
right-associated sum ``1 + (1 + ... + 1)``.
"""
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, FrozenSet, Iterator, Mapping, Optional, Sequence, Set, Tuple, Union

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from scripts.utils import log_decorator

logger = logging.getLogger(__name__)

GRAMMAR_PATH = Path(__file__).with_name("formula.lark")
VARIABLE_NAMES = ("x", "y", "z")
_VARIABLE_RE = re.compile(r"^(?:[xyz]|v(0|[1-9][0-9]*))$")
SYMBOL_RE = re.compile(r"^(?:[A-Za-z_][A-Za-z0-9_]*|[+*<]|0|1)$")


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class SignatureError(ValueError):
    pass


class UnknownSymbolError(SignatureError):
    pass


class ArityError(SignatureError):
    pass


class FreeVariableError(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    constants: Tuple[str, ...] = ()
    functions: Tuple[Tuple[str, int], ...] = ()
    relations: Tuple[Tuple[str, int], ...] = ()
    level: int = 0

    def __post_init__(self):
        names = list(self.constants) + [n for n, _ in self.functions] + [n for n, _ in self.relations]
        seen = set()
        for name in names:
            if name in seen:
                raise SignatureError(f"symbol {name!r} declared twice")
            if not SYMBOL_RE.match(name) or _VARIABLE_RE.match(name):
                raise SignatureError(f"{name!r} is not a usable symbol name")
            seen.add(name)
        for name, arity in self.functions + self.relations:
            if arity < 1:
                raise SignatureError(f"{name!r} must have positive arity")

    def has_constant(self, name: str) -> bool:
        return name in self.constants

    def function_arity(self, name: str) -> Optional[int]:
        return dict(self.functions).get(name)

    def relation_arity(self, name: str) -> Optional[int]:
        return dict(self.relations).get(name)

    def extend(self, constants: Sequence[str] = (), functions: Sequence[Tuple[str, int]] = (),
               relations: Sequence[Tuple[str, int]] = (), level: Optional[int] = None) -> "Signature":
        return Signature(self.constants + tuple(constants),
                         self.functions + tuple(functions),
                         self.relations + tuple(relations),
                         self.level if level is None else level)

    def contains(self, other: "Signature") -> bool:
        return (set(other.constants) <= set(self.constants)
                and set(other.functions) <= set(self.functions)
                and set(other.relations) <= set(self.relations))

    def to_document(self) -> Dict[str, Any]:
        return {"constants": list(self.constants),
                "functions": [[n, a] for n, a in self.functions],
                "relations": [[n, a] for n, a in self.relations],
                "level": self.level}

    @classmethod
    def from_document(cls, doc: Mapping[str, Any]) -> "Signature":
        return cls(tuple(doc.get("constants", ())),
                   tuple((n, int(a)) for n, a in doc.get("functions", ())),
                   tuple((n, int(a)) for n, a in doc.get("relations", ())),
                   int(doc.get("level", 0)))


ARITHMETIC = Signature(constants=("0", "1"), functions=(("+", 2), ("*", 2)), relations=(("<", 2),))
# sub and pair are interpreted over the naturals by the arithmetization module
ARITHMETIC_CODED = ARITHMETIC.extend(functions=(("sub", 2), ("pair", 2)))
PRESBURGER = Signature(constants=("0", "1"), functions=(("+", 2),), relations=(("<", 2),))


# terms

@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class App:
    name: str
    args: Tuple["Term", ...]


@dataclass(frozen=True)
class Numeral:
    """The numeral n for n >= 2, an abbreviation of 1 + (1 + ... + 1)."""
    value: int

    def __post_init__(self):
        if self.value < 2:
            raise ValueError("numeral nodes start at 2; 0 and 1 are constants")

    def unfold(self) -> "Term":
        term: Term = Const("1")
        for _ in range(self.value - 1):
            term = App("+", (Const("1"), term))
        return term


Term = Union[Var, Const, App, Numeral]


# formulas

@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Rel:
    name: str
    args: Tuple[Term, ...]


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: int
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: int
    body: "Formula"


Formula = Union[Eq, Rel, Not, And, Or, Implies, Exists, Forall]
ATOMS = (Eq, Rel)
BINARY = (And, Or, Implies)
QUANTIFIERS = (Exists, Forall)


def numeral(n: int) -> Term:
    """The canonical term denoting n: ``0``, ``1``, or a numeral node for 1 + (1 + ...)."""
    if n < 0:
        raise ValueError("numerals denote natural numbers")
    if n == 0:
        return Const("0")
    if n == 1:
        return Const("1")
    return Numeral(n)


def variable_name(index: int) -> str:
    return VARIABLE_NAMES[index] if index < len(VARIABLE_NAMES) else f"v{index}"


def variable_index(name: str) -> Optional[int]:
    if not _VARIABLE_RE.match(name):
        return None
    if name in VARIABLE_NAMES:
        return VARIABLE_NAMES.index(name)
    return int(name[1:])


# traversal helpers

def term_vars(t: Term) -> FrozenSet[int]:
    if isinstance(t, Var):
        return frozenset((t.index,))
    if isinstance(t, App):
        out: Set[int] = set()
        for arg in t.args:
            out |= term_vars(arg)
        return frozenset(out)
    return frozenset()


def free_vars(phi: Formula) -> FrozenSet[int]:
    """Exactly the variables with a free occurrence in phi."""
    if isinstance(phi, Eq):
        return term_vars(phi.left) | term_vars(phi.right)
    if isinstance(phi, Rel):
        out: FrozenSet[int] = frozenset()
        for arg in phi.args:
            out |= term_vars(arg)
        return out
    if isinstance(phi, Not):
        return free_vars(phi.body)
    if isinstance(phi, BINARY):
        return free_vars(phi.left) | free_vars(phi.right)
    return free_vars(phi.body) - {phi.var}


def all_vars(phi: Formula) -> FrozenSet[int]:
    if isinstance(phi, ATOMS):
        return free_vars(phi)
    if isinstance(phi, Not):
        return all_vars(phi.body)
    if isinstance(phi, BINARY):
        return all_vars(phi.left) | all_vars(phi.right)
    return all_vars(phi.body) | {phi.var}


def is_sentence(phi: Formula) -> bool:
    return not free_vars(phi)


def subterms(t: Term) -> Iterator[Term]:
    yield t
    if isinstance(t, App):
        for arg in t.args:
            yield from subterms(arg)


def formula_terms(phi: Formula) -> Iterator[Term]:
    """Every term occurrence (with subterms) in phi."""
    if isinstance(phi, Eq):
        yield from subterms(phi.left)
        yield from subterms(phi.right)
    elif isinstance(phi, Rel):
        for arg in phi.args:
            yield from subterms(arg)
    elif isinstance(phi, Not):
        yield from formula_terms(phi.body)
    elif isinstance(phi, BINARY):
        yield from formula_terms(phi.left)
        yield from formula_terms(phi.right)
    else:
        yield from formula_terms(phi.body)


def closed_terms(phi: Formula) -> FrozenSet[Term]:
    return frozenset(t for t in formula_terms(phi) if not term_vars(t))


def constants_of(phi: Formula) -> FrozenSet[str]:
    return frozenset(t.name for t in formula_terms(phi) if isinstance(t, Const))


def relations_of(phi: Formula) -> FrozenSet[str]:
    if isinstance(phi, Rel):
        return frozenset((phi.name,))
    if isinstance(phi, Eq):
        return frozenset()
    if isinstance(phi, Not):
        return relations_of(phi.body)
    if isinstance(phi, BINARY):
        return relations_of(phi.left) | relations_of(phi.right)
    return relations_of(phi.body)


def term_size(t: Term) -> int:
    if isinstance(t, Numeral):
        return 2 * t.value - 1
    if isinstance(t, App):
        return 1 + sum(term_size(a) for a in t.args)
    return 1


def formula_size(phi: Formula) -> int:
    """Node count of phi, numerals counted unfolded."""
    if isinstance(phi, Eq):
        return 1 + term_size(phi.left) + term_size(phi.right)
    if isinstance(phi, Rel):
        return 1 + sum(term_size(a) for a in phi.args)
    if isinstance(phi, Not):
        return 1 + formula_size(phi.body)
    if isinstance(phi, BINARY):
        return 1 + formula_size(phi.left) + formula_size(phi.right)
    return 1 + formula_size(phi.body)


def quantifier_depth(phi: Formula) -> int:
    if isinstance(phi, ATOMS):
        return 0
    if isinstance(phi, Not):
        return quantifier_depth(phi.body)
    if isinstance(phi, BINARY):
        return max(quantifier_depth(phi.left), quantifier_depth(phi.right))
    return 1 + quantifier_depth(phi.body)


# substitution

def substitute_term(t: Term, v: int, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.index == v else t
    if isinstance(t, App):
        return App(t.name, tuple(substitute_term(a, v, s) for a in t.args))
    return t


def replace_constant(t: Term, name: str, s: Term) -> Term:
    if isinstance(t, Const):
        return s if t.name == name else t
    if isinstance(t, App):
        return App(t.name, tuple(replace_constant(a, name, s) for a in t.args))
    return t


def map_terms(phi: Formula, fn) -> Formula:
    """Apply fn to every top-level term of every atom."""
    if isinstance(phi, Eq):
        return Eq(fn(phi.left), fn(phi.right))
    if isinstance(phi, Rel):
        return Rel(phi.name, tuple(fn(a) for a in phi.args))
    if isinstance(phi, Not):
        return Not(map_terms(phi.body, fn))
    if isinstance(phi, BINARY):
        return type(phi)(map_terms(phi.left, fn), map_terms(phi.right, fn))
    return type(phi)(phi.var, map_terms(phi.body, fn))


def substitute(phi: Formula, v: int, t: Term) -> Formula:
    """
    Replace the free occurrences of variable v by t.

    Bound variables that would capture a variable of t are renamed to fresh
    indices first.
    """
    if isinstance(phi, ATOMS):
        return map_terms(phi, lambda s: substitute_term(s, v, t))
    if isinstance(phi, Not):
        return Not(substitute(phi.body, v, t))
    if isinstance(phi, BINARY):
        return type(phi)(substitute(phi.left, v, t), substitute(phi.right, v, t))
    if phi.var == v or v not in free_vars(phi.body):
        return phi
    var, body = phi.var, phi.body
    t_vars = term_vars(t)
    if var in t_vars:
        fresh = max(all_vars(body) | t_vars | {v, var}) + 1
        body = substitute(body, var, Var(fresh))
        var = fresh
    return type(phi)(var, substitute(body, v, t))


def replace_constant_in(phi: Formula, name: str, t: Term) -> Formula:
    """Replace a constant symbol by a term; t must not contain variables bound in phi."""
    return map_terms(phi, lambda s: replace_constant(s, name, t))


def expand_numerals(phi: Formula) -> Formula:
    """Unfold every numeral node into its explicit sum 1 + (1 + ... + 1)."""
    def unfold(t: Term) -> Term:
        if isinstance(t, Numeral):
            return t.unfold()
        if isinstance(t, App):
            return App(t.name, tuple(unfold(a) for a in t.args))
        return t
    return map_terms(phi, unfold)


def canonicalize(phi: Formula) -> Formula:
    """Rewrite into the fragment of atoms, conjunction, negation and existentials."""
    if isinstance(phi, ATOMS):
        return phi
    if isinstance(phi, Not):
        return Not(canonicalize(phi.body))
    if isinstance(phi, And):
        return And(canonicalize(phi.left), canonicalize(phi.right))
    if isinstance(phi, Or):
        return Not(And(Not(canonicalize(phi.left)), Not(canonicalize(phi.right))))
    if isinstance(phi, Implies):
        return Not(And(canonicalize(phi.left), Not(canonicalize(phi.right))))
    if isinstance(phi, Exists):
        return Exists(phi.var, canonicalize(phi.body))
    return Not(Exists(phi.var, Not(canonicalize(phi.body))))


def is_canonical(phi: Formula) -> bool:
    if isinstance(phi, ATOMS):
        return True
    if isinstance(phi, Not):
        return is_canonical(phi.body)
    if isinstance(phi, And):
        return is_canonical(phi.left) and is_canonical(phi.right)
    if isinstance(phi, Exists):
        return is_canonical(phi.body)
    return False


# well-formedness

def check_term(t: Term, sig: Signature) -> None:
    if isinstance(t, Var):
        return
    if isinstance(t, Const):
        if not sig.has_constant(t.name):
            raise UnknownSymbolError(f"unknown constant {t.name!r}")
        return
    if isinstance(t, Numeral):
        if not sig.has_constant("1") or sig.function_arity("+") != 2:
            raise UnknownSymbolError(f"numeral {t.value} needs the symbols 1 and +")
        return
    arity = sig.function_arity(t.name)
    if arity is None:
        raise UnknownSymbolError(f"unknown function symbol {t.name!r}")
    if arity != len(t.args):
        raise ArityError(f"{t.name!r} takes {arity} arguments, got {len(t.args)}")
    for arg in t.args:
        check_term(arg, sig)


def check_formula(phi: Formula, sig: Signature) -> None:
    """Raise a SignatureError unless every symbol of phi is declared with matching arity."""
    if isinstance(phi, Eq):
        check_term(phi.left, sig)
        check_term(phi.right, sig)
    elif isinstance(phi, Rel):
        arity = sig.relation_arity(phi.name)
        if arity is None:
            raise UnknownSymbolError(f"unknown relation symbol {phi.name!r}")
        if arity != len(phi.args):
            raise ArityError(f"{phi.name!r} takes {arity} arguments, got {len(phi.args)}")
        for arg in phi.args:
            check_term(arg, sig)
    elif isinstance(phi, Not):
        check_formula(phi.body, sig)
    elif isinstance(phi, BINARY):
        check_formula(phi.left, sig)
        check_formula(phi.right, sig)
    else:
        check_formula(phi.body, sig)


# printing

def format_term(t: Term, context: int = 0) -> str:
    # context: 0 inside a sum, 1 inside a product, 2 as an operand that must be atomic
    if isinstance(t, Var):
        return variable_name(t.index)
    if isinstance(t, Const):
        return t.name
    if isinstance(t, Numeral):
        return str(t.value)
    if t.name == "+" and len(t.args) == 2:
        text = f"{format_term(t.args[0], 0)} + {format_term(t.args[1], 1)}"
        return f"({text})" if context > 0 else text
    if t.name == "*" and len(t.args) == 2:
        text = f"{format_term(t.args[0], 1)} * {format_term(t.args[1], 2)}"
        return f"({text})" if context > 1 else text
    return f"{t.name}({', '.join(format_term(a) for a in t.args)})"


def _format(phi: Formula, context: int, tail: bool) -> str:
    # context: 0 implication, 1 disjunction, 2 conjunction, 3 negation operand
    # tail: phi is the rightmost operand, so an open quantifier needs no parentheses
    if isinstance(phi, Eq):
        return f"{format_term(phi.left)} = {format_term(phi.right)}"
    if isinstance(phi, Rel):
        if phi.name == "<" and len(phi.args) == 2:
            return f"{format_term(phi.args[0])} < {format_term(phi.args[1])}"
        return f"{phi.name}({', '.join(format_term(a) for a in phi.args)})"
    if isinstance(phi, Not):
        return "~" + _format(phi.body, 3, tail)
    if isinstance(phi, QUANTIFIERS):
        keyword = "exists" if isinstance(phi, Exists) else "forall"
        text = f"{keyword} {variable_name(phi.var)}. {_format(phi.body, 0, True)}"
        return text if tail else f"({text})"
    if isinstance(phi, Implies):
        level, left_ctx, right_ctx = 0, 1, 0
        symbol = "->"
    elif isinstance(phi, Or):
        level, left_ctx, right_ctx = 1, 1, 2
        symbol = "|"
    else:
        level, left_ctx, right_ctx = 2, 2, 3
        symbol = "&"
    if context > level:
        return f"({_format(phi, 0, True)})"
    return f"{_format(phi.left, left_ctx, False)} {symbol} {_format(phi.right, right_ctx, tail)}"


def format_formula(phi: Formula) -> str:
    """Canonical text of phi; parse_formula(format_formula(phi)) == phi."""
    return _format(phi, 0, True)


# structured tree serialization

def term_to_tree(t: Term) -> Dict[str, Any]:
    if isinstance(t, Var):
        return {"tag": "var", "index": t.index}
    if isinstance(t, Const):
        return {"tag": "const", "name": t.name}
    if isinstance(t, Numeral):
        return {"tag": "numeral", "value": t.value}
    return {"tag": "app", "name": t.name, "args": [term_to_tree(a) for a in t.args]}


def term_from_tree(doc: Mapping[str, Any]) -> Term:
    tag = doc["tag"]
    if tag == "var":
        return Var(int(doc["index"]))
    if tag == "const":
        return Const(doc["name"])
    if tag == "numeral":
        return numeral(int(doc["value"]))
    if tag == "app":
        return App(doc["name"], tuple(term_from_tree(a) for a in doc["args"]))
    raise ValueError(f"unknown term tag {tag!r}")


_BINARY_TAGS = {And: "and", Or: "or", Implies: "implies"}
_QUANTIFIER_TAGS = {Exists: "exists", Forall: "forall"}


def to_tree(phi: Formula) -> Dict[str, Any]:
    """JSON-compatible tagged tree of phi."""
    if isinstance(phi, Eq):
        return {"tag": "eq", "left": term_to_tree(phi.left), "right": term_to_tree(phi.right)}
    if isinstance(phi, Rel):
        return {"tag": "rel", "name": phi.name, "args": [term_to_tree(a) for a in phi.args]}
    if isinstance(phi, Not):
        return {"tag": "not", "body": to_tree(phi.body)}
    if isinstance(phi, BINARY):
        return {"tag": _BINARY_TAGS[type(phi)], "left": to_tree(phi.left), "right": to_tree(phi.right)}
    return {"tag": _QUANTIFIER_TAGS[type(phi)], "var": phi.var, "body": to_tree(phi.body)}


def from_tree(doc: Mapping[str, Any]) -> Formula:
    tag = doc["tag"]
    if tag == "eq":
        return Eq(term_from_tree(doc["left"]), term_from_tree(doc["right"]))
    if tag == "rel":
        return Rel(doc["name"], tuple(term_from_tree(a) for a in doc["args"]))
    if tag == "not":
        return Not(from_tree(doc["body"]))
    for cls, name in _BINARY_TAGS.items():
        if tag == name:
            return cls(from_tree(doc["left"]), from_tree(doc["right"]))
    for cls, name in _QUANTIFIER_TAGS.items():
        if tag == name:
            return cls(int(doc["var"]), from_tree(doc["body"]))
    raise ValueError(f"unknown formula tag {tag!r}")


# parsing

with open(GRAMMAR_PATH, "r", encoding="utf-8") as _handle:
    grammar = _handle.read()

parser = Lark(grammar, start="start", parser="earley", lexer="dynamic")


def _position(token: Any) -> Tuple[Optional[int], Optional[int]]:
    return getattr(token, "line", None), getattr(token, "column", None)


class FormulaBuilder(Transformer):
    """Turns a parse tree into an AST, resolving names against a signature."""

    def __init__(self, sig: Signature):
        super().__init__()
        self.sig = sig

    def _function(self, name: str, args: Tuple[Term, ...], token: Any) -> Term:
        arity = self.sig.function_arity(name)
        line, column = _position(token)
        if arity is None:
            raise UnknownSymbolError(f"unknown function symbol {name!r} (line {line}, column {column})")
        if arity != len(args):
            raise ArityError(f"{name!r} takes {arity} arguments, got {len(args)} (line {line}, column {column})")
        return App(name, args)

    def args(self, items):
        return tuple(items)

    @v_args(inline=True)
    def number(self, token: Token) -> Term:
        term = numeral(int(token))
        try:
            check_term(term, self.sig)
        except SignatureError as e:
            line, column = _position(token)
            raise UnknownSymbolError(f"{e} (line {line}, column {column})") from None
        return term

    @v_args(inline=True)
    def name(self, token: Token) -> Term:
        index = variable_index(str(token))
        if index is not None:
            return Var(index)
        if not self.sig.has_constant(str(token)):
            line, column = _position(token)
            raise UnknownSymbolError(f"unknown constant {str(token)!r} (line {line}, column {column})")
        return Const(str(token))

    @v_args(inline=True)
    def app(self, token: Token, args: Tuple[Term, ...]) -> Term:
        return self._function(str(token), args, token)

    @v_args(inline=True)
    def add(self, left: Term, right: Term) -> Term:
        return self._function("+", (left, right), None)

    @v_args(inline=True)
    def mul(self, left: Term, right: Term) -> Term:
        return self._function("*", (left, right), None)

    @v_args(inline=True)
    def eq(self, left: Term, right: Term) -> Formula:
        return Eq(left, right)

    @v_args(inline=True)
    def lt(self, left: Term, right: Term) -> Formula:
        if self.sig.relation_arity("<") != 2:
            raise UnknownSymbolError("unknown relation symbol '<'")
        return Rel("<", (left, right))

    @v_args(inline=True)
    def rel(self, token: Token, args: Tuple[Term, ...]) -> Formula:
        name = str(token)
        arity = self.sig.relation_arity(name)
        line, column = _position(token)
        if arity is None:
            raise UnknownSymbolError(f"unknown relation symbol {name!r} (line {line}, column {column})")
        if arity != len(args):
            raise ArityError(f"{name!r} takes {arity} arguments, got {len(args)} (line {line}, column {column})")
        return Rel(name, args)

    @v_args(inline=True)
    def neg(self, body: Formula) -> Formula:
        return Not(body)

    @v_args(inline=True)
    def conj(self, left: Formula, right: Formula) -> Formula:
        return And(left, right)

    @v_args(inline=True)
    def disj(self, left: Formula, right: Formula) -> Formula:
        return Or(left, right)

    @v_args(inline=True)
    def implies(self, left: Formula, right: Formula) -> Formula:
        return Implies(left, right)

    @v_args(inline=True)
    def quantified(self, keyword: Token, var: Token, body: Formula) -> Formula:
        index = variable_index(str(var))
        if index is None:
            line, column = _position(var)
            raise FormulaSyntaxError(f"{str(var)!r} is not a variable", line, column)
        return Exists(index, body) if str(keyword) == "exists" else Forall(index, body)


@log_decorator
def parse_formula(text: str, sig: Signature = ARITHMETIC) -> Formula:
    """Parse the concrete grammar (see scripts/formula.lark) over a signature."""
    try:
        tree = parser.parse(text)
    except UnexpectedEOF as e:
        raise FormulaSyntaxError("unexpected end of input", getattr(e, "line", None),
                                 getattr(e, "column", None)) from None
    except UnexpectedCharacters as e:
        raise FormulaSyntaxError(f"unexpected character {text[e.pos_in_stream]!r}" if e.pos_in_stream < len(text)
                                 else "unexpected character", e.line, e.column) from None
    except UnexpectedInput as e:
        raise FormulaSyntaxError("syntax error", getattr(e, "line", None), getattr(e, "column", None)) from None
    try:
        return FormulaBuilder(sig).transform(tree)
    except VisitError as e:
        raise e.orig_exc from None


def parse_term(text: str, sig: Signature = ARITHMETIC) -> Term:
    """Parse a term by parsing the atom ``text = text``."""
    phi = parse_formula(f"{text} = 0" if sig.has_constant("0") else f"{text} = {text}", sig)
    return phi.left
