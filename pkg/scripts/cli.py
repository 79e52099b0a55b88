"""
Command-line surface: python -m scripts <command> ...

Every command produces a Report; --format json prints the shared schema
{"command", "status", "result"}, text prints a readable rendering.  Exit codes:
0 determined and passing, 1 failure or error, 2 undetermined (budget).
"""
import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from scripts import forcing, henkin, model_tools, presburger, suite, truth_hierarchy
from scripts.config import RunConfig, load_config, parse_budget
from scripts.satisfaction import FiniteStructure, eval_finite
from scripts.syntax import ARITHMETIC_CODED, format_formula, format_term, parse_formula, variable_index
from scripts.undefinability import tarski_demonstrate
from scripts.utils import Utils

logger = logging.getLogger(__name__)

EXIT_CODES = {"ok": 0, "failure": 1, "unknown": 2}


@dataclass
class Report:
    command: str
    status: str
    result: Dict[str, Any]
    lines: List[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def render(self, output_format: str) -> str:
        if output_format == "json":
            return Utils.dumps({"command": self.command, "status": self.status, "result": self.result})
        return "\n".join(self.lines + [f"status: {self.status}"])


def _read_text(value: str) -> str:
    """Formula arguments starting with @ name a file holding the text."""
    if value.startswith("@"):
        return Path(value[1:]).read_text(encoding="utf-8").strip()
    return value


def _load_structure(path: str) -> FiniteStructure:
    return FiniteStructure.from_document(Utils().load_document(path))


def _int_list(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    return [int(part) for part in text.split(",") if part.strip()]


def _assignment(items: Sequence[str]) -> Dict[int, int]:
    out = {}
    for item in items:
        name, _, value = item.partition("=")
        index = variable_index(name.strip())
        if index is None or not value.strip().isdigit():
            raise ValueError(f"assignment {item!r} is not <variable>=<natural>")
        out[index] = int(value)
    return out


def _verdict_status(verdict) -> str:
    return "unknown" if verdict.is_unknown else "ok"


def cmd_eval(args: argparse.Namespace, config: RunConfig) -> Report:
    text = _read_text(args.formula)
    assignment = _assignment(args.assign)
    if args.structure:
        S = _load_structure(args.structure)
        phi = parse_formula(text, S.named_signature)
        value = eval_finite(S, phi, assignment)
        return Report("eval", "ok", {"formula": format_formula(phi), "model": args.structure,
                                     "verdict": str(value).lower()},
                      [f"{format_formula(phi)} in {args.structure}: {str(value).lower()}"])
    signature = truth_hierarchy.language_level(args.level, config.max_level)
    phi = parse_formula(text, signature)
    verdict = truth_hierarchy.eval_level(phi, args.level, assignment, config.budget, config.max_level)
    lines = [f"{format_formula(phi)} over the naturals (level {args.level}): {verdict}"]
    if verdict.reason:
        lines.append(f"reason: {verdict.reason}")
    return Report("eval", _verdict_status(verdict),
                  {"formula": format_formula(phi), "model": "naturals", "level": args.level,
                   "verdict": str(verdict), "reason": verdict.reason}, lines)


def cmd_liar(args: argparse.Namespace, config: RunConfig) -> Report:
    phi = parse_formula(_read_text(args.predicate), ARITHMETIC_CODED)
    report = tarski_demonstrate(phi, config.budget)
    if report.disagreement is None:
        status = "unknown"
    else:
        status = "ok" if report.disagreement else "failure"
    record = report.to_record()
    lines = [f"candidate: {record['candidate']}",
             f"liar sentence: {Utils.shorten(record['sigma'], 100)}",
             f"liar sentence is {record['sigma_verdict']}; candidate holds of its code: {record['candidate_verdict']}",
             record["conclusion"]]
    return Report("liar", status, record, lines)


def cmd_presburger(args: argparse.Namespace, config: RunConfig) -> Report:
    if args.action == "refute":
        if args.target not in presburger.BUILTIN_SETS:
            raise ValueError(f"unknown set {args.target!r}; built-ins: {', '.join(presburger.BUILTIN_SETS)}")
        report = presburger.periodicity_refute(presburger.BUILTIN_SETS[args.target], args.bound, args.target)
        lines = [f"{args.target}: {report.verdict}", f"note: {report.note}"]
        if not report.refuted:
            lines.append(f"undefeated periods: {', '.join(map(str, report.undefeated[:20]))}")
        lines.append(Utils.format_table(report.witnesses.head(args.rows)))
        return Report("presburger", "ok", report.to_record(), lines)
    phi = parse_formula(_read_text(args.target), presburger.PRESBURGER_OUTPUT)
    if args.action == "decide":
        value = presburger.decide(phi)
        return Report("presburger", "ok", {"sentence": format_formula(phi), "value": value},
                      [f"{format_formula(phi)}: {str(value).lower()}"])
    if args.action == "eliminate":
        eliminated = presburger.eliminate_quantifiers(phi)
        text = presburger.format_linear(eliminated)
        return Report("presburger", "ok", {"formula": format_formula(phi), "eliminated": text},
                      [f"{format_formula(phi)}", f"  <=> {text}"])
    certificate = presburger.definable_set_period(phi, args.verify)
    record = certificate.to_record()
    return Report("presburger", "ok", {"formula": format_formula(phi), **record},
                  [f"{format_formula(phi)}: threshold {certificate.threshold}, period {certificate.period}, "
                   f"pattern {''.join('1' if b else '0' for b in certificate.table)}, "
                   f"verified to {certificate.verified_to}"])


def cmd_hierarchy(args: argparse.Namespace, config: RunConfig) -> Report:
    if args.liar is not None:
        sigma = truth_hierarchy.level_liar(args.liar)
    else:
        sigma = parse_formula(_read_text(args.sentence),
                              truth_hierarchy.language_level(config.max_level, config.max_level))
    levels = _int_list(args.levels) or list(range(config.max_level + 1))
    rows = truth_hierarchy.level_verdicts(sigma, levels, config.budget, config.max_level)
    table = Utils.table(rows, ["sentence", "level", "verdict", "reason"])
    status = "unknown" if any(row["verdict"] == "unknown" for row in rows) else "ok"
    return Report("hierarchy", status, {"sentence": format_formula(sigma), "rows": Utils.records(table)},
                  [Utils.format_table(table)])


def cmd_disagree(args: argparse.Namespace, config: RunConfig) -> Report:
    S = _load_structure(args.structure)
    subset_doc = Utils().load_document(args.subset)
    X = subset_doc.get("subset", [])
    params = _int_list(args.params)
    if params is None:
        params = subset_doc.get("params", [])
    witness = model_tools.disagreement_pair(S, X, params, config.automorphism_size)
    orbits = model_tools.orbits(S, params, config.automorphism_size)
    result: Dict[str, Any] = {"subset": sorted(X), "params": list(params),
                              "orbits": [list(o) for o in orbits], "definable": witness is None}
    lines = [f"orbits fixing {list(params)}: {[list(o) for o in orbits]}"]
    if witness is None:
        lines.append(f"{sorted(X)} is a union of orbits: definable with parameters {list(params)}")
        return Report("disagree", "ok", result, lines)
    image = model_tools.apply_automorphism(X, witness.pi)
    result.update({"witness": witness.to_record(), "image": sorted(image),
                   "expansions": [model_tools.expand_with_predicate(S, args.predicate, X).to_document(),
                                  model_tools.expand_with_predicate(S, args.predicate, image).to_document()]})
    lines += [f"automorphism {list(witness.pi.permutation)} fixes {list(params)} and sends {witness.t} to {witness.s}",
              f"{witness.s} is in X, {witness.t} is not: X is not definable with these parameters",
              f"same structure, different predicate: {args.predicate} = {sorted(X)} versus {sorted(image)}"]
    return Report("disagree", "ok", result, lines)


def cmd_backforth(args: argparse.Namespace, config: RunConfig) -> Report:
    A, B = _load_structure(args.left), _load_structure(args.right)
    mapping = model_tools.back_and_forth(A, B, config.automorphism_size)
    if mapping is None:
        return Report("backforth", "ok", {"isomorphic": False, "mapping": None}, ["not isomorphic"])
    return Report("backforth", "ok", {"isomorphic": True, "mapping": list(mapping)},
                  [f"isomorphism: {' '.join(f'{a}->{b}' for a, b in enumerate(mapping))}"])


def cmd_henkin(args: argparse.Namespace, config: RunConfig) -> Report:
    depth = args.depth if args.depth is not None else config.henkin_depth
    size_cap = args.size_cap if args.size_cap is not None else config.henkin_size_cap
    oracle = henkin.presburger_oracle()
    state = henkin.henkin_extend(oracle, depth, size_cap)
    model = henkin.term_model(state, oracle)
    problems = henkin.incomplete_sentences(state) + henkin.missing_witnesses(state)
    lines = [f"{len(state.accepted)} sentences accepted, {len(state.constant_pool)} witnesses, "
             f"{model.size} term classes"]
    lines += [f"  {record.constant} = least x. {format_formula(record.existential.body)}"
              f" -> {record.value if record.value is not None else 'unresolved'}"
              for record in state.witness_records[:args.rows]]
    lines += [f"  class {' = '.join(format_term(t) for t in group)}" for group in model.classes[:args.rows]]
    return Report("henkin", "failure" if problems else "ok",
                  {"state": state.to_document(), "term_model": model.to_document()}, lines)


def cmd_force(args: argparse.Namespace, config: RunConfig) -> Report:
    reqs = [forcing.parse_requirement(text) for text in args.requirements]
    bound = args.bound if args.bound is not None else config.force_bound
    start = forcing.Condition(args.start or "")
    condition, statuses = forcing.run_construction(reqs, bound, start, config.force_node_limit)
    table = forcing.construction_table(reqs, statuses)
    result: Dict[str, Any] = {"condition": condition.bits, "statuses": Utils.records(table)}
    lines = [f"condition: {condition}", Utils.format_table(table)]
    if args.section is not None:
        row = forcing.section(condition, args.section, args.width)
        result["section"] = {"row": args.section, "bits": list(row)}
        lines.append(f"section {args.section}: {''.join('?' if b is None else str(b) for b in row)}")
    status = "unknown" if any(s.kind is forcing.MeetKind.EXHAUSTED for s in statuses) else "ok"
    return Report("force", status, result, lines)


def cmd_suite(args: argparse.Namespace, config: RunConfig) -> Report:
    table = suite.run_suite(config, args.filter, args.rig)
    code = suite.suite_exit_code(table)
    status = {0: "ok", 1: "failure", 2: "unknown"}[code]
    return Report("suite", status, {"seed": config.seed, "criteria": Utils.records(table)},
                  [Utils.format_table(table)])


HANDLERS: Dict[str, Callable[[argparse.Namespace, RunConfig], Report]] = {
    "eval": cmd_eval,
    "liar": cmd_liar,
    "presburger": cmd_presburger,
    "hierarchy": cmd_hierarchy,
    "disagree": cmd_disagree,
    "backforth": cmd_backforth,
    "henkin": cmd_henkin,
    "force": cmd_force,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=None, help="report format")
    common.add_argument("--config", default=None, help="config file (default: config.toml)")
    common.add_argument("--budget", default=None, help="<witness_bound>,<depth_bound>")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--log-level", default=None)

    parser = argparse.ArgumentParser(prog="python -m scripts", description="First-order logic workbench")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", parents=[common], help="evaluate a formula over a structure or the naturals")
    p.add_argument("formula", help="formula text, or @file")
    p.add_argument("--structure", help="structure document (JSON)")
    p.add_argument("--level", type=int, default=0, help="truth-predicate level over the naturals")
    p.add_argument("--assign", action="append", default=[], help="variable=value, repeatable")

    p = commands.add_parser("liar", parents=[common], help="liar sentence of a proposed truth definition")
    p.add_argument("predicate", help="formula in x (v0), or @file")

    p = commands.add_parser("presburger", parents=[common], help="Presburger arithmetic")
    p.add_argument("action", choices=("decide", "eliminate", "period", "refute"))
    p.add_argument("target", help="formula text or @file; for refute a built-in set name")
    p.add_argument("--verify", type=int, default=1000, help="verification bound for period")
    p.add_argument("--bound", type=int, default=10_000, help="search bound for refute")
    p.add_argument("--rows", type=int, default=10)

    p = commands.add_parser("hierarchy", parents=[common], help="verdicts of a sentence across levels")
    p.add_argument("sentence", nargs="?", default="0 = 0")
    p.add_argument("--levels", help="comma-separated levels")
    p.add_argument("--liar", type=int, default=None, help="use the liar sentence of this level")

    p = commands.add_parser("disagree", parents=[common], help="definability with parameters")
    p.add_argument("structure")
    p.add_argument("subset", help='document {"subset": [...], "params": [...]}')
    p.add_argument("--params", help="comma-separated parameters (overrides the document)")
    p.add_argument("--predicate", default="X", help="name of the expanding relation")

    p = commands.add_parser("backforth", parents=[common], help="isomorphism by back-and-forth")
    p.add_argument("left")
    p.add_argument("right")

    p = commands.add_parser("henkin", parents=[common], help="Henkin completion of Presburger arithmetic")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--size-cap", type=int, default=None)
    p.add_argument("--rows", type=int, default=20)

    p = commands.add_parser("force", parents=[common], help="meet requirements by finite extension")
    p.add_argument("requirements", nargs="*", help="requirement expressions")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--start", default="", help="initial condition bits")
    p.add_argument("--section", type=int, default=None, help="show this row of the coded set")
    p.add_argument("--width", type=int, default=8)

    p = commands.add_parser("suite", parents=[common], help="run the acceptance suite")
    p.add_argument("--filter", default=None, help="substring of criterion names")
    p.add_argument("--rig", choices=suite.RIGS, default=None, help="negative control")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        config = config.with_overrides(command=args.command,
                                       budget=parse_budget(args.budget) if args.budget else None,
                                       seed=args.seed, output_format=args.format,
                                       log_level=args.log_level)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    logging.basicConfig(level=config.log_level.upper(), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        report = HANDLERS[args.command](args, config)
    except (ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(report.render(config.output_format))
    return report.exit_code
