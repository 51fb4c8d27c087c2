"""Command line front end.

Two subcommands share the ingestion pipeline: ``check`` runs the tableau
decision procedure, ``oracle`` runs the brute-force cross-check on the same
expansion.  ``check`` is the default, so ``ketab FILE`` works.  Exit codes:
0 consistent/satisfiable, 1 inconsistent/unsatisfiable, 2 input or
validation error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .coding import encode
from .engine import (
    EquivPartition,
    Interpretation,
    Node,
    PipelineResult,
    Tableau,
    run_pipeline,
)
from .errors import KetabError, ResourceLimit
from .expand import expand_kb
from .kb import KnowledgeBase, validate_fragment
from .oracle import brute_force_sat
from .owlxml import read_owlxml
from .translate import translate_kb

EXIT_CONSISTENT = 0
EXIT_INCONSISTENT = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

_SUBCOMMANDS = ("check", "oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ketab",
        description="Consistency checking for OWL/XML knowledge bases in a "
                    "set-theoretically translatable description logic fragment.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide consistency with the tableau engine")
    _add_common(check)
    check.add_argument("--emit-coding", action="store_true",
                       help="print the normalized formulas and ground facts")
    check.add_argument("--emit-expansion", action="store_true",
                       help="print the ground clause set")
    check.add_argument("--emit-tableau", action="store_true",
                       help="print the saturated tableau tree")
    check.add_argument("--emit-models", action="store_true",
                       help="print one extracted model per surviving branch")
    check.add_argument("--emit-eqset", action="store_true",
                       help="print the equivalence classes per surviving branch")
    check.add_argument("--trace", action="store_true",
                       help="print every rule application")

    oracle = sub.add_parser(
        "oracle", help="brute-force satisfiability of the same expansion")
    _add_common(oracle)
    oracle.add_argument("--max-atoms", type=int, default=20,
                        help="cap on distinct ground atoms (default 20)")
    return parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("path", help="OWL/XML ontology file")
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="output format (default text)")
    p.add_argument("--strict-declarations", action="store_true",
                   help="reject names used without a declaration")
    p.add_argument("--max-instances", type=int, default=10 ** 6,
                   help="cap on ground clause instances (default 1000000)")
    p.add_argument("--max-cardinality", type=int, default=8,
                   help="cap on number restriction bounds (default 8)")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in _SUBCOMMANDS and argv[0] not in ("-h", "--help"):
        argv.insert(0, "check")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_instances <= 0 or args.max_cardinality <= 0:
        parser.error("caps must be positive")
    if args.command == "oracle" and args.max_atoms <= 0:
        parser.error("caps must be positive")
    if args.command == "oracle":
        return _run_oracle(args)
    return _run_check(args)


def _read_kb(args: argparse.Namespace) -> KnowledgeBase:
    with open(args.path, encoding="utf-8") as handle:
        text = handle.read()
    return read_owlxml(text, strict_declarations=args.strict_declarations)


def _fail(message: str, code: int, args: argparse.Namespace) -> int:
    print(f"ketab: {' '.join(message.split())}", file=sys.stderr)
    if args.format == "json":
        kind = "resource" if code == EXIT_RESOURCE else "input"
        print(json.dumps({"verdict": "error", "error": message,
                          "errorKind": kind}))
    return code


def _run_check(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    try:
        kb = _read_kb(args)
    except OSError as exc:
        return _fail(str(exc), EXIT_INPUT, args)
    except KetabError as exc:
        return _fail(str(exc), EXIT_INPUT, args)
    result = run_pipeline(kb, max_instances=args.max_instances,
                          max_cardinality=args.max_cardinality)
    verdict = result.verdict
    assert verdict is not None
    if verdict.status == "error":
        code = EXIT_RESOURCE if verdict.error_kind == "resource" else EXIT_INPUT
        return _fail(verdict.error, code, args)
    verdict.stats["elapsedMs"] = (time.perf_counter() - started) * 1000.0

    if args.format == "json":
        print(json.dumps(_check_json(result), indent=2, sort_keys=True))
    else:
        _print_text_report(result, args)
    return EXIT_CONSISTENT if verdict.status == "consistent" else EXIT_INCONSISTENT


def _run_oracle(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    try:
        kb = _read_kb(args)
    except OSError as exc:
        return _fail(str(exc), EXIT_INPUT, args)
    except KetabError as exc:
        return _fail(str(exc), EXIT_INPUT, args)
    violations = validate_fragment(kb)
    if violations:
        return _fail("; ".join(str(v) for v in violations), EXIT_INPUT, args)
    try:
        expanded = expand_kb(translate_kb(kb, max_cardinality=args.max_cardinality),
                             max_instances=args.max_instances)
        outcome = brute_force_sat(expanded.clauses, max_atoms=args.max_atoms)
    except ResourceLimit as exc:
        return _fail(str(exc), EXIT_RESOURCE, args)
    except KetabError as exc:
        return _fail(str(exc), EXIT_INPUT, args)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    stats = {
        "clauses": len(expanded.clauses),
        "partitionsTried": outcome.partitions_tried,
        "valuationsTried": outcome.valuations_tried,
        "elapsedMs": elapsed_ms,
    }
    label = "satisfiable" if outcome.satisfiable else "unsatisfiable"
    if args.format == "json":
        print(json.dumps({"verdict": label, "stats": stats},
                         indent=2, sort_keys=True))
    else:
        print(label.capitalize())
        print(f"clauses={stats['clauses']} partitions={stats['partitionsTried']} "
              f"valuations={stats['valuationsTried']} "
              f"elapsedMs={elapsed_ms:.1f}")
    return EXIT_CONSISTENT if outcome.satisfiable else EXIT_INCONSISTENT


# ---------------------------------------------------------------------------
# reporting
# ---------------------------------------------------------------------------


def _check_json(result: PipelineResult) -> dict:
    verdict = result.verdict
    assert verdict is not None
    stats = dict(verdict.stats)
    stats["elapsedMs"] = round(stats["elapsedMs"], 3)
    return {
        "verdict": verdict.status,
        "models": [_model_json(m) for m in verdict.models],
        "eqClasses": [_classes_json(p) for p in verdict.eq_partitions],
        "stats": stats,
    }


def _model_json(model: Interpretation) -> dict:
    return {
        "domain": [list(cls) for cls in model.domain],
        "concepts": {name: sorted(members)
                     for name, members in sorted(model.concepts.items())},
        "relations": {name: sorted(list(p) for p in pairs)
                      for name, pairs in sorted(model.relations.items())},
    }


def _classes_json(p: EquivPartition) -> list[list[str]]:
    return [[v.name for v in cls] for cls in p.classes]


def _print_text_report(result: PipelineResult, args: argparse.Namespace) -> None:
    expanded = result.expanded
    tableau = result.tableau
    verdict = result.verdict
    assert expanded is not None and tableau is not None and verdict is not None

    if args.emit_coding:
        print("== coding ==")
        for i, f in enumerate(expanded.normalized, 1):
            print(f"F{i}: {encode(f)}")
        assert result.translation is not None
        for i, lit in enumerate(result.translation.ground_literals, 1):
            print(f"G{i}: {encode(lit)}")
    if args.emit_expansion:
        names = ", ".join(v.name for v in expanded.domain)
        print(f"== expansion == ({len(expanded.clauses)} clauses; domain: {names})")
        for i, c in enumerate(expanded.clauses, 1):
            print(f"C{i}: {encode(c)}")
    if args.trace:
        print("== trace ==")
        for ev in tableau.trace:
            lit = encode(ev.literal) if ev.literal is not None else "-"
            print(f"{ev.rule} branch={ev.branch_id} clause={ev.clause_index} "
                  f"literal={lit}")
    if args.emit_tableau:
        print("== tableau ==")
        for line in _tableau_lines(tableau):
            print(line)
    if args.emit_eqset:
        print("== equivalence classes ==")
        for branch, p in zip(tableau.open_branches, tableau.eq_partitions):
            classes = " ".join("{" + ", ".join(v.name for v in cls) + "}"
                               for cls in p.classes)
            print(f"branch {branch.id}: {classes}")
    if args.emit_models:
        print("== models ==")
        for i, model in enumerate(verdict.models, 1):
            print(f"model {i}:")
            domain = " ".join("{" + ", ".join(cls) + "}" for cls in model.domain)
            print(f"  domain: {domain}")
            for name in sorted(model.concepts):
                members = model.concepts[name]
                if members:
                    print(f"  {name}: " + ", ".join(sorted(members)))
            for name in sorted(model.relations):
                pairs = model.relations[name]
                if pairs:
                    shown = ", ".join(f"({a}, {b})" for a, b in sorted(pairs))
                    print(f"  {name}: {shown}")

    print("Consistent" if verdict.status == "consistent" else "Inconsistent")
    stats = verdict.stats
    print(f"clauses={stats['clauses']} branches={stats['branches']} "
          f"eRules={stats['eRuleCount']} pbRules={stats['pbRuleCount']} "
          f"elapsedMs={stats['elapsedMs']:.1f}")


def _tableau_lines(tab: Tableau) -> list[str]:
    lines = []
    root = tab.root
    suffix = f" [{root.note}]" if root.note else ""
    lines.append(f"root: {len(tab.clauses)} clauses{suffix}")

    def walk(node: Node, depth: int) -> None:
        tag = "E-rule" if node.rule == "e-rule" else "PB-rule"
        label = ", ".join(encode(f) for f in node.formulas)
        mark = f" [{node.note}]" if node.note else ""
        lines.append("  " * depth + f"{tag}: {label}{mark}")
        if node.left_child is not None:
            walk(node.left_child, depth + 1)
        if node.right_child is not None:
            walk(node.right_child, depth + 1)

    if root.left_child is not None:
        walk(root.left_child, 1)
    if root.right_child is not None:
        walk(root.right_child, 1)
    return lines
