"""
Finite levels of the iterated truth-predicate hierarchy.

The level-k language adds the unary predicates Tr0 .. Tr{k-1} to the coded
arithmetic signature.  Tr_j(t) is evaluated by decoding the value of t as a
sentence of level j and evaluating that sentence one level down; values that are
not such codes make the atom false.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

import pandas as pd

from scripts.arithmetization import decode, diag, encode, quote
from scripts.satisfaction import FALSE, Assignment, Budget, NaturalsEvaluator, TruthValue3
from scripts.syntax import (
    ARITHMETIC_CODED, Const, Eq, Formula, Not, Rel, Signature, Var, check_formula,
    format_formula, is_sentence, relations_of,
)
from scripts.utils import Utils, log_decorator

logger = logging.getLogger(__name__)

MAX_LEVEL = 4
_TR_RE = re.compile(r"^Tr(0|[1-9][0-9]*)$")


class LevelError(ValueError):
    pass


def tr_name(j: int) -> str:
    return f"Tr{j}"


def tr_index(name: str) -> Optional[int]:
    match = _TR_RE.match(name)
    return int(match.group(1)) if match else None


@dataclass(frozen=True)
class HierarchyLevel:
    k: int
    signature: Signature


@lru_cache(maxsize=None)
def language_level(k: int, max_level: int = MAX_LEVEL) -> Signature:
    """The coded arithmetic signature plus Tr0 .. Tr{k-1}."""
    if k < 0:
        raise LevelError("levels are natural numbers")
    if k > max_level:
        raise LevelError(f"level {k} exceeds the configured maximum {max_level}")
    return ARITHMETIC_CODED.extend(relations=tuple((tr_name(j), 1) for j in range(k)), level=k)


def hierarchy_level(k: int, max_level: int = MAX_LEVEL) -> HierarchyLevel:
    return HierarchyLevel(k, language_level(k, max_level))


def formula_level(phi: Formula) -> int:
    """The least k with phi in the level-k language (judged by its Tr symbols)."""
    levels = [tr_index(name) for name in relations_of(phi)]
    return max((j + 1 for j in levels if j is not None), default=0)


def check_level(phi: Formula, k: int, max_level: int = MAX_LEVEL) -> None:
    level = formula_level(phi)
    if level > k:
        raise LevelError(f"{format_formula(phi)} mentions Tr{level - 1}, outside level {k}")
    check_formula(phi, language_level(k, max_level))


class HierarchyEvaluator(NaturalsEvaluator):
    """Budgeted evaluation at level k; each Tr dereference costs one unit of depth."""

    def __init__(self, k: int, budget: Optional[Budget] = None, max_level: int = MAX_LEVEL):
        super().__init__(budget, signature=language_level(k, max_level))
        self.k = k
        self.max_level = max_level
        self._lower: Dict[int, "HierarchyEvaluator"] = {}
        self._memo: Dict[Tuple[int, int, int], TruthValue3] = {}

    def lower(self, j: int) -> "HierarchyEvaluator":
        if j not in self._lower:
            self._lower[j] = HierarchyEvaluator(j, self.budget, self.max_level)
        return self._lower[j]

    def relation(self, name: str, values: Tuple[int, ...], depth: int) -> TruthValue3:
        j = tr_index(name)
        if j is None:
            return super().relation(name, values, depth)
        if j >= self.k:
            raise LevelError(f"{name} is not available at level {self.k}")
        key = (j, values[0], depth)
        if key not in self._memo:
            self._memo[key] = self._dereference(j, values[0], depth)
        return self._memo[key]

    def _dereference(self, j: int, n: int, depth: int) -> TruthValue3:
        sentence = sentence_of_level(n, j, self.max_level)
        if sentence is None:
            return FALSE
        if depth >= self.budget.depth_bound:
            return TruthValue3.unknown(f"budget exhausted at Tr{j} dereference depth {depth}")
        return self.lower(j)._eval(sentence, {}, depth + 1)


def sentence_of_level(n: int, j: int, max_level: int = MAX_LEVEL) -> Optional[Formula]:
    """The level-j sentence coded by n, or None."""
    try:
        phi = decode(n, language_level(j, max_level))
    except ValueError:
        return None
    return phi if is_sentence(phi) else None


@log_decorator
def eval_level(phi: Formula, k: int, assignment: Optional[Assignment] = None,
               budget: Optional[Budget] = None, max_level: int = MAX_LEVEL) -> TruthValue3:
    """Three-valued truth of phi in the level-k expansion of the naturals."""
    check_level(phi, k, max_level)
    return HierarchyEvaluator(k, budget, max_level).evaluate(phi, assignment)


@dataclass(frozen=True)
class CoherenceReport:
    j: int
    k: int
    table: pd.DataFrame

    @property
    def disagreements(self) -> int:
        return int((self.table["status"] == "disagree").sum()) if not self.table.empty else 0

    @property
    def unknowns(self) -> int:
        return int((self.table["status"] == "unknown").sum()) if not self.table.empty else 0

    def to_record(self) -> Dict[str, Any]:
        return {"j": self.j, "k": self.k, "disagreements": self.disagreements,
                "unknowns": self.unknowns, "rows": Utils.records(self.table)}


@log_decorator
def coherence_check(j: int, k: int, corpus: Iterable[Union[int, Formula]], budget: Optional[Budget] = None,
                    max_level: int = MAX_LEVEL) -> CoherenceReport:
    """Compare the verdicts of level j and level k on level-j sentences."""
    if j > k:
        raise LevelError(f"coherence needs j <= k, got j={j}, k={k}")
    low = HierarchyEvaluator(j, budget, max_level)
    high = HierarchyEvaluator(k, budget, max_level)
    rows = []
    for item in corpus:
        sigma = decode(item) if isinstance(item, int) else item
        if not is_sentence(sigma):
            raise LevelError(f"{format_formula(sigma)} is not a sentence")
        check_level(sigma, j, max_level)
        at_j, at_k = low.evaluate(sigma), high.evaluate(sigma)
        if at_j.is_unknown or at_k.is_unknown:
            status = "unknown"
        else:
            status = "agree" if at_j.is_true == at_k.is_true else "disagree"
        rows.append({"sentence": Utils.shorten(format_formula(sigma)), "code": str(encode(sigma)),
                     f"level_{j}": str(at_j), f"level_{k}": str(at_k), "status": status})
    table = Utils.table(rows, ["sentence", "code", f"level_{j}", f"level_{k}", "status"])
    report = CoherenceReport(j, k, table)
    if report.disagreements:
        logger.error(f"levels {j} and {k} disagree on {report.disagreements} sentences")
    return report


def level_liar(k: int) -> Formula:
    """
    The diagonal sentence of ~Tr{k-1}(v0), a sentence of level k.  It mentions
    Tr{k-1}, so Tr{k-1} is false of its code and the sentence itself is true.
    """
    if k < 1:
        raise LevelError("the level liar needs k >= 1")
    return diag(Not(Rel(tr_name(k - 1), (Var(0),))))


def dereference_witness(k: int, base: Optional[Formula] = None) -> Formula:
    """Tr{k-1} applied to the code of base (default 0 = 0)."""
    if k < 1:
        raise LevelError("dereference needs k >= 1")
    base = base if base is not None else Eq(Const("0"), Const("0"))
    return Rel(tr_name(k - 1), (quote(base),))


def dereference_chain(k: int, base: Optional[Formula] = None) -> Formula:
    """Tr{k-1}(code of Tr{k-2}(code of ... Tr0(code of base))): a true sentence of level k when base is true."""
    sentence = base if base is not None else Eq(Const("0"), Const("0"))
    for j in range(k):
        sentence = Rel(tr_name(j), (quote(sentence),))
    return sentence


def level_verdicts(sigma: Formula, levels: Iterable[int], budget: Optional[Budget] = None,
                   max_level: int = MAX_LEVEL) -> List[Dict[str, Any]]:
    """Rows of sentence, level and verdict for every level containing sigma."""
    base = formula_level(sigma)
    rows = []
    for k in levels:
        if k < base:
            continue
        verdict = HierarchyEvaluator(k, budget, max_level).evaluate(sigma)
        rows.append({"sentence": Utils.shorten(format_formula(sigma)), "code": str(encode(sigma)),
                     "level": k, "verdict": str(verdict), "reason": verdict.reason})
    return rows
