"""Command-line front-end: solving, oracle enumeration, property checking,
and topic-neighborhood queries.

Exit codes: 0 success with models, 1 no model for the request, 2 parse or
validation failure (including odd loops). Output is byte-identical across
repeated invocations on identical inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import (
    InvalidProgramError,
    NoModelError,
    OddLoopError,
    ParseError,
    PartaspError,
    UnknownAtomError,
)
from .graph import dependency_graph
from .neighborhood import extract_path, relevant_concepts
from .oracle import enumerate_stable_models, is_subset_of_some_stable
from .parser import parse_program
from .randprog import random_program
from .solver import solve
from .validate import ensure_valid

SEED_ENV = "DISCASP_SEED"


def _parse_query(text: str) -> list[tuple[str, bool]]:
    literals = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        negated = chunk.startswith("not ")
        name = chunk[4:].strip() if negated else chunk
        literals.append((name, negated))
    return literals


def _load_program(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_program(fh.read())


def _model_dict(model) -> dict:
    return {
        "true": sorted(model.true_atoms),
        "false": sorted(model.false_atoms),
    }


def _emit(payload: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_solve(args) -> int:
    program = _load_program(args.program)
    query = _parse_query(args.query) if args.query else [
        (l.atom.name, l.negated) for l in program.query
    ]
    models = solve(program, query)
    payload = {"models": [_model_dict(m) for m in models], "count": len(models)}
    lines = []
    for i, m in enumerate(models, 1):
        parts = sorted(m.true_atoms) + [f"not {n}" for n in sorted(m.false_atoms)]
        lines.append(f"model {i}: " + " ".join(parts))
    if not models:
        lines.append("no model")
    _emit(payload, args.json, lines)
    return 0 if models else 1


def _cmd_stable(args) -> int:
    program = _load_program(args.program)
    ensure_valid(program)
    stable = sorted(sorted(s) for s in enumerate_stable_models(program))
    payload = {"stable_models": stable, "count": len(stable)}
    lines = [f"stable {i}: " + " ".join(s) for i, s in enumerate(stable, 1)]
    if not stable:
        lines.append("no stable model")
    _emit(payload, args.json, lines)
    return 0 if stable else 1


def _check_one(program, queries, label, checked, failures):
    stable = enumerate_stable_models(program)
    for query in queries:
        for m in solve(program, [query]):
            checked += 1
            if not is_subset_of_some_stable(program, m, stable=stable):
                failures.append(
                    {"program": label, "query": query[0], "model": _model_dict(m)}
                )
    return checked


def _cmd_check(args) -> int:
    checked = 0
    failures: list = []
    if args.program:
        program = ensure_valid(_load_program(args.program))
        if args.query:
            queries = [(name, neg) for name, neg in _parse_query(args.query)]
        else:
            queries = [(a.name, False) for a in program.atoms]
        checked = _check_one(program, queries, args.program, checked, failures)
        scope = f"1 program, {len(queries)} queries"
    else:
        seed_base = int(os.environ.get(SEED_ENV, "0"))
        for offset in range(args.programs):
            seed = seed_base + offset
            program = random_program(seed)
            queries = [(a.name, False) for a in program.atoms]
            checked = _check_one(program, queries, f"seed {seed}", checked, failures)
        scope = f"{args.programs} programs"
    payload = {
        "scope": scope,
        "answers": checked,
        "failures": failures,
        "pass": not failures,
    }
    lines = (
        [f"PASS: all answers subset-sound ({scope}, {checked} answers)"]
        if not failures
        else [f"FAIL: {len(failures)} unsound answers"]
    )
    _emit(payload, args.json, lines)
    return 0 if not failures else 1


def _cmd_rcc(args) -> int:
    program = _load_program(args.program)
    query = _parse_query(args.query)
    if len(query) != 1 or query[0][1]:
        print("rcc expects a single positive topic atom", file=sys.stderr)
        return 2
    topic = query[0][0]
    radius = args.radius
    result = relevant_concepts(program, topic, radius)
    payload = result.to_json_dict()
    lines = [f"topic {topic} radius {radius if radius is not None else 'unlimited'}"]
    for m in result.members:
        value = m.atom if m.value else f"not {m.atom}"
        lines.append(f"  {value} (distance {m.distance})")
    if args.explain:
        graph = dependency_graph(program)
        paths = {}
        for m in result.members:
            if m.atom == topic:
                continue
            try:
                path = extract_path(graph, topic, m.atom)
            except PartaspError:
                continue
            paths[m.atom] = path.to_json_dict()
            for step in path.steps:
                lines.append(
                    f"  path {topic} -> {m.atom}: rule {step.rule_index} "
                    f"{step.from_atom} -> {step.to_atom}"
                    + (" (not)" if step.negated else "")
                )
        payload["paths"] = paths
    _emit(payload, args.json, lines)
    return 0


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partasp",
        description="Partial answer set solving over dependency graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute partial models for a query")
    p_solve.add_argument("program")
    p_solve.add_argument("--query", "-q", help="comma-separated literals, e.g. 'p, not q'")
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=_cmd_solve)

    p_stable = sub.add_parser("stable", help="enumerate stable models (oracle)")
    p_stable.add_argument("program")
    p_stable.add_argument("--json", action="store_true")
    p_stable.set_defaults(func=_cmd_stable)

    p_check = sub.add_parser("check", help="subset-soundness check against the oracle")
    p_check.add_argument("program", nargs="?", help="check this program instead of random ones")
    p_check.add_argument("--query", "-q", help="limit the program check to one query")
    p_check.add_argument("--programs", type=int, default=500, help="random-program count")
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=_cmd_check)

    p_rcc = sub.add_parser("rcc", help="topic neighborhood within a radius")
    p_rcc.add_argument("program")
    p_rcc.add_argument("--query", "-q", required=True, help="topic atom")
    p_rcc.add_argument("--radius", "-r", type=int, default=None)
    p_rcc.add_argument("--explain", action="store_true")
    p_rcc.add_argument("--json", action="store_true")
    p_rcc.set_defaults(func=_cmd_rcc)

    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidProgramError, OddLoopError, UnknownAtomError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoModelError as exc:
        print(f"no model: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
