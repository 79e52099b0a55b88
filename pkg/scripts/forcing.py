"""
Finite-extension constructions over binary strings.

A condition is a finite bit string; a requirement is a decidable set of strings.
Each requirement is either entered (some initial segment of the condition is in it)
or sealed (no extension up to the search bound is), processed one after another
while the condition only grows.  Bit i of a condition is read as membership of the
pair-coded point unpair(i), so rows of the plane are sections of the coded set.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from scripts.arithmetization import pair, section_indices
from scripts.utils import Utils, log_decorator

logger = logging.getLogger(__name__)

GRAMMAR_PATH = Path(__file__).with_name("requirement.lark")
NODE_LIMIT = 1 << 16


class RequirementSyntaxError(ValueError):
    def __init__(self, message: str, column: Optional[int] = None):
        self.column = column
        super().__init__(message if column is None else f"{message} (column {column})")


@dataclass(frozen=True)
class Condition:
    bits: str = ""

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"condition {self.bits!r} is not a bit string")

    def __len__(self) -> int:
        return len(self.bits)

    def extends(self, other: "Condition") -> bool:
        return self.bits.startswith(other.bits)

    def bit(self, i: int) -> Optional[int]:
        return int(self.bits[i]) if i < len(self.bits) else None

    def prefixes(self) -> List[str]:
        return [self.bits[:n] for n in range(len(self.bits) + 1)]

    def __str__(self) -> str:
        return self.bits or "(empty)"


@dataclass(frozen=True)
class Requirement:
    label: str
    member: Callable[[str], bool]
    dense_hint: Optional[bool] = None

    def __call__(self, bits: str) -> bool:
        return bool(self.member(bits))


class MeetKind(Enum):
    MET = "met"
    SEALED = "sealed"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class MeetStatus:
    """
    met: the prefix of this length is in the requirement.  sealed/exhausted: the
    condition had this length and the search to bound found nothing. Exhausted
    means the node limit cut the search short or the condition already filled the bound.
    """
    kind: MeetKind
    length: int
    bound: int
    explored: int = 0

    def to_record(self) -> Dict[str, Any]:
        return {"status": self.kind.value, "length": self.length, "bound": self.bound,
                "explored": self.explored}


@log_decorator
def extend_to_meet(c: Condition, r: Requirement, bound: int,
                   node_limit: int = NODE_LIMIT) -> Tuple[Condition, MeetStatus]:
    """
    The least extension of c in r, shortest first and lexicographic within a length.
    A condition with an initial segment already in r is returned unchanged.
    """
    if bound < len(c):
        raise ValueError(f"bound {bound} is shorter than the condition ({len(c)} bits)")
    for prefix in c.prefixes():
        if r(prefix):
            return c, MeetStatus(MeetKind.MET, len(prefix), bound)
    explored = 0
    for length in range(len(c) + 1, bound + 1):
        for suffix in product("01", repeat=length - len(c)):
            if explored >= node_limit:
                logger.warning(f"{r.label}: node limit {node_limit} reached at length {length}")
                return c, MeetStatus(MeetKind.EXHAUSTED, len(c), bound, explored)
            explored += 1
            candidate = c.bits + "".join(suffix)
            if r(candidate):
                return Condition(candidate), MeetStatus(MeetKind.MET, length, bound, explored)
    if bound == len(c):
        logger.warning(f"{r.label}: the condition already has {len(c)} bits, nothing left to search")
        return c, MeetStatus(MeetKind.EXHAUSTED, len(c), bound, explored)
    return c, MeetStatus(MeetKind.SEALED, len(c), bound, explored)


@log_decorator
def run_construction(reqs: Sequence[Requirement], bound: int, start: Optional[Condition] = None,
                     node_limit: int = NODE_LIMIT) -> Tuple[Condition, List[MeetStatus]]:
    """
    Meet or seal each requirement in order, threading one growing condition.
    Once the condition reaches the bound, later unmet requirements come back exhausted.
    """
    c = start or Condition()
    statuses = []
    for r in reqs:
        c, status = extend_to_meet(c, r, max(bound, len(c)), node_limit)
        logger.info(f"{r.label}: {status.kind.value} at length {status.length}")
        statuses.append(status)
    return c, statuses


def verify_statuses(c: Condition, reqs: Sequence[Requirement], statuses: Sequence[MeetStatus]) -> List[str]:
    """Problems found by re-checking every status against the final condition directly."""
    problems = []
    for r, status in zip(reqs, statuses):
        if status.kind is MeetKind.MET:
            if status.length > len(c) or not r(c.bits[:status.length]):
                problems.append(f"{r.label}: met at {status.length} but the prefix is not a member")
        elif any(r(prefix) for prefix in c.prefixes()[:status.length + 1]):
            problems.append(f"{r.label}: {status.kind.value} although a searched prefix is a member")
    return problems


def construction_table(reqs: Sequence[Requirement], statuses: Sequence[MeetStatus]) -> pd.DataFrame:
    rows = [{"requirement": r.label, **s.to_record()} for r, s in zip(reqs, statuses)]
    return Utils.table(rows, ["requirement", "status", "length", "bound", "explored"])


def section(c: Condition, n: int, width: int = 8) -> Tuple[Optional[int], ...]:
    """Row n of the coded set: position k is bit pair(n, k), None where c leaves it undecided."""
    decided = dict(section_indices(n, len(c)))
    return tuple(c.bit(decided[k]) if k in decided else None for k in range(width))


# requirement library

def contains(pattern: str) -> Requirement:
    return Requirement(f"contains({pattern!r})", lambda s: pattern in s, True)


def starts_with(prefix: str) -> Requirement:
    return Requirement(f"starts_with({prefix!r})", lambda s: s.startswith(prefix), False)


def ones_parity(parity: int) -> Requirement:
    return Requirement(f"ones_parity({parity})", lambda s: s.count("1") % 2 == parity % 2, True)


def section_bit(n: int, k: int, bit: int) -> Requirement:
    position = pair(n, k)
    return Requirement(f"section_bit({n}, {k}, {bit})",
                       lambda s: len(s) > position and s[position] == str(bit), False)


def section_has_one(n: int) -> Requirement:
    def member(s: str) -> bool:
        return any(s[p] == "1" for _, p in section_indices(n, len(s)))
    return Requirement(f"section_has_one({n})", member, True)


def length_at_least(m: int) -> Requirement:
    return Requirement(f"length_at_least({m})", lambda s: len(s) >= m, True)


def never() -> Requirement:
    return Requirement("never()", lambda s: False, False)


def all_of(left: Requirement, right: Requirement) -> Requirement:
    return Requirement(f"({left.label} & {right.label})", lambda s: left(s) and right(s))


def any_of(left: Requirement, right: Requirement) -> Requirement:
    return Requirement(f"({left.label} | {right.label})", lambda s: left(s) or right(s))


def negate(r: Requirement) -> Requirement:
    return Requirement(f"~{r.label}", lambda s: not r(s))


LIBRARY: Dict[str, Tuple[Callable[..., Requirement], Tuple[type, ...]]] = {
    "contains": (contains, (str,)),
    "starts_with": (starts_with, (str,)),
    "ones_parity": (ones_parity, (int,)),
    "section_bit": (section_bit, (int, int, int)),
    "section_has_one": (section_has_one, (int,)),
    "length_at_least": (length_at_least, (int,)),
    "never": (never, ()),
}


def pattern_requirements(width: int = 3) -> List[Requirement]:
    """contains(p) for every bit pattern p of the given width, in lexicographic order."""
    return [contains("".join(bits)) for bits in product("01", repeat=width)]


with open(GRAMMAR_PATH, "r", encoding="utf-8") as _handle:
    grammar = _handle.read()

parser = Lark(grammar, start="start", parser="lalr")


class RequirementBuilder(Transformer):

    @v_args(inline=True)
    def text(self, token: Token) -> str:
        body = str(token)[1:-1]
        if set(body) - {"0", "1"}:
            raise RequirementSyntaxError(f"pattern {body!r} is not a bit string", token.column)
        return body

    @v_args(inline=True)
    def number(self, token: Token) -> int:
        return int(token)

    def call(self, items) -> Requirement:
        token, args = items[0], [a for a in items[1:] if a is not None]
        name = str(token)
        if name not in LIBRARY:
            raise RequirementSyntaxError(f"unknown requirement {name!r}", token.column)
        factory, types = LIBRARY[name]
        if len(args) != len(types) or any(not isinstance(a, t) for a, t in zip(args, types)):
            expected = ", ".join(t.__name__ for t in types)
            raise RequirementSyntaxError(f"{name} takes ({expected})", token.column)
        return factory(*args)

    @v_args(inline=True)
    def all_of(self, left: Requirement, right: Requirement) -> Requirement:
        return all_of(left, right)

    @v_args(inline=True)
    def any_of(self, left: Requirement, right: Requirement) -> Requirement:
        return any_of(left, right)

    @v_args(inline=True)
    def negate(self, body: Requirement) -> Requirement:
        return negate(body)


@log_decorator
def parse_requirement(text: str) -> Requirement:
    """Parse the requirement mini-language (see scripts/requirement.lark)."""
    try:
        tree = parser.parse(text)
    except UnexpectedInput as e:
        raise RequirementSyntaxError("syntax error", getattr(e, "column", None)) from None
    try:
        requirement = RequirementBuilder().transform(tree)
    except VisitError as e:
        raise e.orig_exc from None
    return Requirement(text.strip(), requirement.member, requirement.dense_hint)


@log_decorator
def is_dense(r: Requirement, bound: int, samples: int = 64, seed: int = 0,
             node_limit: int = NODE_LIMIT) -> bool:
    """Every sampled condition of length at most bound // 2 extends into r within bound."""
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        length = int(rng.integers(0, bound // 2 + 1))
        bits = "".join(rng.choice(["0", "1"], size=length)) if length else ""
        _, status = extend_to_meet(Condition(bits), r, bound, node_limit)
        if status.kind is not MeetKind.MET:
            logger.info(f"{r.label} is not met above {bits or '(empty)'} within {bound} bits")
            return False
    return True
