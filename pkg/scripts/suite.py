"""
The acceptance suite: one function per criterion, each returning a CriterionResult.
Results depend only on the configuration and the seed; timings go to the log, not
into the results, so reports stay byte-identical across runs.
"""
import logging
import time
from itertools import product
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from scripts import forcing, generators, henkin, model_tools, presburger, truth_hierarchy
from scripts.arithmetization import diag, encode, instance_at_code, liar
from scripts.config import RunConfig
from scripts.satisfaction import (
    NaturalsEvaluator, check_truth_conditions, eval_expanded, eval_finite, exact_truth_set,
    real_violations, subsentence_closure,
)
from scripts.syntax import PRESBURGER, formula_size, free_vars, numeral, parse_formula, substitute
from scripts.utils import Utils, log_decorator

logger = logging.getLogger(__name__)

RIGS = ("flip-truth-bit",)
PASS, FAIL, UNDETERMINED = "pass", "fail", "undetermined"


@dataclass(frozen=True)
class CriterionResult:
    name: str
    status: str
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_record(self) -> Dict[str, Any]:
        return {"criterion": self.name, "status": self.status, "detail": self.detail}


def _result(name: str, ok: bool, detail: str) -> CriterionResult:
    return CriterionResult(name, PASS if ok else FAIL, detail)


def tarski_clauses(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """Exact truth sets pass the clause audit; flipped memberships are caught."""
    name = "tarski-clauses"
    structures = generators.structure_family(config.seed, 50, 3, generators.GRAPH)
    rng = np.random.default_rng(config.seed + 1)
    gen = generators.FormulaGenerator(generators.GRAPH, rng=rng)
    rejected, missed, flips = 0, 0, 0
    for index, S in enumerate(structures):
        corpus = subsentence_closure([gen.sentence(3) for _ in range(4)], S, full=True)
        truth = exact_truth_set(S, corpus, full=True)
        if rig == "flip-truth-bit" and index == 0:
            truth ^= {encode(corpus[0])}
        if real_violations(check_truth_conditions(truth, S, corpus)):
            rejected += 1
        for position in rng.choice(len(corpus), size=min(8, len(corpus)), replace=False):
            flips += 1
            if not real_violations(check_truth_conditions(truth ^ {encode(corpus[int(position)])}, S, corpus)):
                missed += 1
    return _result(name, rejected == 0 and missed == 0,
                   f"{len(structures)} structures: {rejected} truth sets rejected, "
                   f"{missed} of {flips} single flips undetected")


def evaluator_oracle(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """eval_finite against the quantifier-expansion oracle."""
    name = "evaluator-oracle"
    rng = np.random.default_rng(config.seed + 2)
    gen = generators.FormulaGenerator(generators.GRAPH, rng=rng)
    mismatches, total = 0, 1000
    for _ in range(total):
        S = generators.random_structure(rng, generators.GRAPH, int(rng.integers(1, 6)))
        phi = gen.formula(4, (0,))
        assignment = {0: int(rng.integers(S.size))}
        if eval_finite(S, phi, assignment) != eval_expanded(S, phi, assignment):
            mismatches += 1
    return _result(name, mismatches == 0, f"{mismatches} of {total} instances disagree")


def diagonal_laws(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """Fixed-point law for diag and the anti-fixed-point law for liar on the code predicates."""
    name = "diagonal-laws"
    evaluator = NaturalsEvaluator(config.budget)
    determined, broken = 0, []
    predicates = generators.code_predicates()
    for phi in predicates:
        sigma, lie = diag(phi), liar(phi)
        verdicts = [evaluator.evaluate(sigma), evaluator.evaluate(instance_at_code(phi, sigma)),
                    evaluator.evaluate(lie), evaluator.evaluate(instance_at_code(phi, lie))]
        if any(v.is_unknown for v in verdicts):
            continue
        determined += 1
        if verdicts[0].is_true != verdicts[1].is_true or verdicts[2].is_true == verdicts[3].is_true:
            broken.append(phi)
    detail = f"{determined} of {len(predicates)} determined, {len(broken)} law violations"
    if broken:
        return CriterionResult(name, FAIL, detail)
    return CriterionResult(name, PASS if determined >= 15 else UNDETERMINED, detail)


def presburger_soundness(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """decide against bounded brute force; eliminated forms against the originals on a grid."""
    name = "presburger-soundness"
    bound = 6
    corpus = generators.presburger_corpus(config.seed + 3, 200, depth=3, bound=bound)
    wrong = sum(presburger.decide(phi) != presburger.holds_bounded(presburger.to_linear(phi), {}, bound)
                for phi in corpus)
    grid_wrong, points, residue = 0, 0, 0
    for phi in generators.presburger_open_corpus(config.seed + 4, 200):
        eliminated = presburger.eliminate_quantifiers(phi)
        variables = sorted(free_vars(phi))
        if not (presburger.is_quantifier_free(eliminated)
                and presburger.linear_free_vars(eliminated) <= set(variables)):
            residue += 1
        for point in product(range(0, 12, 2), repeat=len(variables)):
            points += 1
            instance = phi
            for var, value in zip(variables, point):
                instance = substitute(instance, var, numeral(value))
            if presburger.holds(eliminated, dict(zip(variables, point))) != presburger.decide(instance):
                grid_wrong += 1
    parity = presburger.decide(parse_formula("forall x. exists y. x = y + y | x = y + y + 1", PRESBURGER))
    ok = wrong == 0 and grid_wrong == 0 and residue == 0 and parity
    return _result(name, ok, f"{wrong} of {len(corpus)} sentences disagree with brute force; "
                             f"{grid_wrong} of {points} grid points of 200 open formulas disagree, "
                             f"{residue} eliminations left quantifiers or new variables; parity sentence {parity}")


def presburger_periodicity(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """Squares defeat every period up to 10^4; the evens certificate has period 2."""
    name = "presburger-periodicity"
    report = presburger.periodicity_refute(presburger.squares, 10_000, "squares")
    certificate = presburger.definable_set_period(parse_formula("exists y. x = y + y", PRESBURGER), 1000)
    ok = report.refuted and certificate.period == 2 and certificate.verified_to >= 1000
    return _result(name, ok, f"squares: {report.verdict}; evens: period {certificate.period}, "
                             f"threshold {certificate.threshold}, verified to {certificate.verified_to}")


def _definability_structures(seed: int) -> List:
    family = generators.structure_family(seed, 12, 5, generators.RELATIONAL)
    return family + [generators.cycle(3), generators.cycle(4), generators.cycle(5),
                     generators.antichain(4), generators.linear_order(4)]


def definability(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """Orbit-based definability against brute force; disagreement witnesses validate."""
    name = "definability"
    mismatches, bad_witnesses, checked = 0, 0, 0
    for S in _definability_structures(config.seed + 4):
        for params in ((), (0,)):
            for X in generators.all_subsets(S.size):
                checked += 1
                definable = model_tools.definable_with_params(X, S, params)
                if definable != model_tools.brute_force_definable(X, S, params):
                    mismatches += 1
                witness = model_tools.disagreement_pair(S, X, params)
                if (witness is None) != definable:
                    mismatches += 1
                elif witness is not None and not (
                        model_tools.is_automorphism(S, witness.pi.permutation)
                        and all(witness.pi(p) == p for p in params)
                        and witness.pi(witness.t) == witness.s
                        and witness.s in X and witness.t not in X):
                    bad_witnesses += 1
    return _result(name, mismatches == 0 and bad_witnesses == 0,
                   f"{checked} (structure, subset, params) cases: {mismatches} mismatches, "
                   f"{bad_witnesses} invalid witnesses")


def back_and_forth(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """back_and_forth against brute-force isomorphism existence on random pairs."""
    name = "back-and-forth"
    rng = np.random.default_rng(config.seed + 5)
    mismatches, invalid, total = 0, 0, 200
    for k in range(total):
        size = int(rng.integers(1, 8))
        A = generators.random_structure(rng, generators.RELATIONAL, size)
        if k % 2 == 0:
            B = generators.permuted_copy(A, rng.permutation(size))
        else:
            B = generators.random_structure(rng, generators.RELATIONAL, int(rng.integers(1, 8)))
        found = model_tools.back_and_forth(A, B)
        if (found is not None) != model_tools.brute_force_isomorphic(A, B):
            mismatches += 1
        if found is not None and not model_tools.is_isomorphism(A, B, found):
            invalid += 1
    return _result(name, mismatches == 0 and invalid == 0,
                   f"{total} pairs: {mismatches} mismatches, {invalid} invalid maps")


def henkin_fragment(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """Completeness and witness properties, and term-model agreement with decide."""
    name = "henkin-fragment"
    oracle = henkin.presburger_oracle()
    state = henkin.henkin_extend(oracle, config.henkin_depth, config.henkin_size_cap)
    incomplete = henkin.incomplete_sentences(state)
    missing = henkin.missing_witnesses(state)
    model = henkin.term_model(state, oracle)
    fragment = henkin.oracle_agreement(state, oracle, henkin.SentenceEnumerator(PRESBURGER).sentences(5), model)
    undetermined = int((fragment["status"] == "unknown").sum())
    gen = generators.FormulaGenerator(state.extended_signature, seed=config.seed + 6)
    sampled = [phi for phi in (gen.sentence(3) for _ in range(400)) if formula_size(phi) <= 12][:200]
    table = pd.concat([fragment, henkin.oracle_agreement(state, oracle, sampled, model)], ignore_index=True)
    disagreements = int((table["status"] == "disagree").sum())
    determined = int((table["status"] != "unknown").sum())
    ok = not incomplete and not missing and disagreements == 0 and undetermined == 0
    return _result(name, ok, f"{len(state.accepted)} accepted, {len(state.constant_pool)} witnesses, "
                             f"{model.size} classes; {len(incomplete)} incomplete, {len(missing)} "
                             f"without witness; {undetermined} of {len(fragment)} enumerated sentences undetermined; "
                             f"{disagreements} disagreements in {determined} determined of {len(table)}")


def hierarchy_coherence(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """No determined disagreement between levels j <= k <= 3; dereference sentences as derived."""
    name = "hierarchy-coherence"
    disagreements, unknowns = 0, 0
    for j in range(4):
        corpus = generators.level_corpus(config.seed + 7, j, 100)
        for k in range(j, 4):
            report = truth_hierarchy.coherence_check(j, k, corpus, config.budget, config.max_level)
            disagreements += report.disagreements
            unknowns += report.unknowns
    wrong = []
    for k in range(1, 4):
        expected = {
            "chain": truth_hierarchy.dereference_chain(k),
            "witness": truth_hierarchy.dereference_witness(k),
            "liar": truth_hierarchy.level_liar(k),
        }
        for label, sentence in expected.items():
            verdict = truth_hierarchy.eval_level(sentence, k, budget=config.budget, max_level=config.max_level)
            if not verdict.is_true:
                wrong.append(f"{label}@{k}")
    return _result(name, disagreements == 0 and not wrong,
                   f"{disagreements} disagreements, {unknowns} unknown; "
                   f"dereference checks wrong: {', '.join(wrong) or 'none'}")


def forcing_skeleton(config: RunConfig, rig: Optional[str] = None) -> CriterionResult:
    """Dense pattern requirements are all met, statuses re-verify, contradictions seal."""
    name = "forcing-skeleton"
    patterns = forcing.pattern_requirements(3)
    dense = all(forcing.is_dense(r, 12, samples=16, seed=config.seed) for r in patterns)
    bound = 3 * len(patterns) + config.force_bound
    first = forcing.run_construction(patterns, bound, node_limit=config.force_node_limit)
    second = forcing.run_construction(patterns, bound, node_limit=config.force_node_limit)
    condition, statuses = first
    all_met = all(s.kind is forcing.MeetKind.MET for s in statuses)
    problems = forcing.verify_statuses(condition, patterns, statuses)
    contradictory = [forcing.starts_with("0"), forcing.starts_with("1")]
    _, pair_statuses = forcing.run_construction(contradictory, config.force_bound, node_limit=config.force_node_limit)
    contradiction = [s.kind for s in pair_statuses] == [forcing.MeetKind.MET, forcing.MeetKind.SEALED]
    deterministic = first[0] == second[0] and first[1] == second[1]
    ok = dense and all_met and not problems and contradiction and deterministic
    return _result(name, ok, f"condition {condition}: all met {all_met}, dense {dense}, "
                             f"{len(problems)} status problems, contradictory pair "
                             f"{'/'.join(s.kind.value for s in pair_statuses)}, deterministic {deterministic}")


CRITERIA: Dict[str, Callable[[RunConfig, Optional[str]], CriterionResult]] = {
    "tarski-clauses": tarski_clauses,
    "evaluator-oracle": evaluator_oracle,
    "diagonal-laws": diagonal_laws,
    "presburger-soundness": presburger_soundness,
    "presburger-periodicity": presburger_periodicity,
    "definability": definability,
    "back-and-forth": back_and_forth,
    "henkin-fragment": henkin_fragment,
    "hierarchy-coherence": hierarchy_coherence,
    "forcing-skeleton": forcing_skeleton,
}


@log_decorator
def run_suite(config: RunConfig, selection: Optional[str] = None, rig: Optional[str] = None) -> pd.DataFrame:
    """Run the criteria whose names contain selection (all when None)."""
    if rig is not None and rig not in RIGS:
        raise ValueError(f"unknown rig {rig!r}; available: {', '.join(RIGS)}")
    rows = []
    for name, criterion in CRITERIA.items():
        if selection and selection not in name:
            continue
        started = time.perf_counter()
        result = criterion(config, rig)
        logger.info(f"{name}: {result.status} in {time.perf_counter() - started:.1f}s")
        rows.append(result.to_record())
    return Utils.table(rows, ["criterion", "status", "detail"])


def suite_exit_code(table: pd.DataFrame) -> int:
    """0 when everything passes, 1 on any failure, 2 when the rest pass but some are undetermined."""
    if table.empty:
        return 0
    statuses = set(table["status"])
    if FAIL in statuses:
        return 1
    return 2 if UNDETERMINED in statuses else 0
