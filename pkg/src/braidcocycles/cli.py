"""Command line front end.

Subcommands: ``invariant``, ``characters``, ``trace``, ``distinguish`` and
``cable``.  Exit codes: 0 success, 2 parse error, 3 the closure is not a
knot, 4 invalid family selector, 5 inconsistent event log.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord, cable, is_knot, parse_braid, reverse
from .cocycle import FamilyError, InvariantResult, evaluate, parse_family
from .gauss import iter_triples
from .laurent import LaurentPoly
from .loop import EventLog, ReplayError, generate_rot
from .trace import (
    CharacterTable,
    all_characters0,
    build_trace,
    characters_d,
    find_bijection,
    to_dot,
    trace_circles,
    trace_summary,
)

SCHEMA = 1
EXIT_OK, EXIT_PARSE, EXIT_NOT_KNOT, EXIT_FAMILY, EXIT_REPLAY = 0, 2, 3, 4, 5
_PROGRESS_EVENTS = 20000


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunSpec:
    command: str
    braid: BraidWord
    l: int = 1
    family: str | None = None
    degree: int = 0
    against: str = "reverse"
    format: str = "text"
    dot: str | None = None
    matched_only: bool = False
    k: int = 2


def _progress(log: EventLog, message: str) -> None:
    if len(log.events) > _PROGRESS_EVENTS:
        print(message, file=sys.stderr, flush=True)


def _loop(word: BraidWord, l: int) -> EventLog:
    if not is_knot(word):
        raise CliError(f"the closure of {word} is not a knot", EXIT_NOT_KNOT)
    return generate_rot(word, l)


def _parse_word(text: str, n: int) -> BraidWord:
    try:
        return parse_braid(text.replace(",", " "), n)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def run_invariant(spec: RunSpec) -> InvariantResult:
    """Evaluate one cocycle on ``spec.l`` rotations of the closed braid."""
    try:
        family = parse_family(spec.family or "", spec.braid.n)
    except FamilyError as exc:
        raise CliError(str(exc), EXIT_FAMILY) from None
    log = _loop(spec.braid, spec.l)
    value = evaluate(iter_triples(log), family, count_unmatched=not spec.matched_only)
    return InvariantResult(value, family, spec.l)


def _tables(word: BraidWord, spec: RunSpec):
    log = _loop(word, spec.l)
    _progress(log, f"{len(log.events)} events, building the trace graph")
    graph = build_trace(log)
    circles = trace_circles(graph)
    if spec.degree == 0 and not spec.family:
        tables = [all_characters0(graph, circles)]
    else:
        try:
            family = parse_family(spec.family or "", word.n)
        except FamilyError as exc:
            raise CliError(str(exc), EXIT_FAMILY) from None
        if family.kind == "deg0":
            full = all_characters0(graph, circles)
            typ = f"({family.a},{family.b}){family.type}"
            tables = [CharacterTable(0, spec.l, str(family), {k: v for k, v in full.entries.items() if k[0] == typ})]
        else:
            if spec.degree and spec.degree != family.d:
                raise CliError(f"--degree {spec.degree} disagrees with family {family}", EXIT_FAMILY)
            tables = [characters_d(graph, circles, family)]
    return graph, circles, tables


def run_characters(spec: RunSpec) -> dict:
    _, circles, tables = _tables(spec.braid, spec)
    return {
        "braid": spec.braid.to_json(),
        "circles": [c.to_json() for c in circles],
        "tables": [t.to_json() for t in tables],
    }


def run_distinguish(spec: RunSpec) -> dict:
    """Compare character tables of the braid with its reverse or a given word."""
    other = reverse(spec.braid) if spec.against == "reverse" else _parse_word(spec.against, spec.braid.n)
    _, ca, ta = _tables(spec.braid, spec)
    _, cb, tb = _tables(other, spec)
    sigma = find_bijection(ta, tb, ca, cb)
    report = {
        "verdict": "CONJUGACY-COMPATIBLE" if sigma is not None else "DISTINGUISHED",
        "braid": spec.braid.to_json(),
        "against": other.to_json(),
        "l": spec.l,
    }
    if sigma is not None:
        report["bijection"] = dict(sorted(sigma.items()))
    else:
        report["witness"] = {"tables": [t.to_json() for t in ta], "against_tables": [t.to_json() for t in tb]}
    return report


def run_trace(spec: RunSpec) -> dict:
    log = _loop(spec.braid, spec.l)
    _progress(log, f"{len(log.events)} events, building the trace graph")
    graph = build_trace(log)
    circles = trace_circles(graph)
    if spec.dot:
        try:
            with open(spec.dot, "w", encoding="utf-8") as fh:
                fh.write(to_dot(graph, circles))
        except OSError as exc:
            raise CliError(f"cannot write {spec.dot}: {exc.strerror}", EXIT_PARSE) from None
    return trace_summary(graph, circles)


def run_cable(spec: RunSpec) -> dict:
    word = cable(spec.braid, spec.k, add_twist=True)
    return {"braid": word.to_json(), "n": word.n, "letters": " ".join(map(str, word.letters)), "knot": is_knot(word)}


def _text(command: str, payload) -> str:
    if command == "invariant":
        value = payload.value
        return str(value.at_one()) if payload.family.kind == "deg0" else str(value)
    if command == "distinguish":
        return payload["verdict"]
    if command == "cable":
        return payload["letters"]
    if command == "trace":
        lines = [f"triple nodes: {payload['triple_nodes']}", f"circles: {len(payload['circles'])}"]
        for c in payload["circles"]:
            lines.append(f"  {c['name']} marking {c['marking']} class {tuple(c['torus_class'])}")
        return "\n".join(lines)
    lines = []
    for table in payload["tables"]:
        for row in table["entries"]:
            value = row["value"]
            if isinstance(value, dict):
                value = str(LaurentPoly.from_json(value))
            lines.append(f"{row['type']} {' '.join(row['names'])} {value}")
    return "\n".join(lines)


def _json(command: str, payload) -> str:
    body = payload.to_json() if isinstance(payload, InvariantResult) else payload
    return json.dumps({"schema": SCHEMA, "command": command, **body}, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidcocycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--braid", required=True, help='letters such as "1 -2 3"')
        p.add_argument("--n", type=int, required=True, help="number of strands")
        p.add_argument("--l", type=int, default=1, help="number of rotations")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("invariant", help="evaluate one cocycle polynomial")
    common(p)
    p.add_argument("--family", required=True, help="deg0:(a,b)+, degd-l:<d>, degd-h:<d> or deg1-nm2")
    p.add_argument("--matched-only", action="store_true",
                   help="drop triples without a configuration (not an invariant)")
    p = sub.add_parser("characters", help="character tables")
    common(p)
    p.add_argument("--family")
    p.add_argument("--degree", type=int, default=0)
    p = sub.add_parser("trace", help="trace graph summary and DOT export")
    common(p)
    p.add_argument("--dot")
    p = sub.add_parser("distinguish", help="compare a braid with its reverse or another braid")
    common(p)
    p.add_argument("--family")
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--against", default="reverse")
    p = sub.add_parser("cable", help="k-parallel cable with a half twist")
    common(p)
    p.add_argument("--k", type=int, default=2)
    return parser


_RUNNERS = {
    "invariant": run_invariant,
    "characters": run_characters,
    "trace": run_trace,
    "distinguish": run_distinguish,
    "cable": run_cable,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.n < 1 or args.l < 1:
            raise CliError("--n and --l must be positive", EXIT_PARSE)
        spec = RunSpec(
            command=args.command,
            braid=_parse_word(args.braid, args.n),
            l=args.l,
            family=getattr(args, "family", None),
            degree=getattr(args, "degree", 0),
            against=getattr(args, "against", "reverse"),
            format=args.format,
            dot=getattr(args, "dot", None),
            matched_only=getattr(args, "matched_only", False),
            k=getattr(args, "k", 2),
        )
        payload = _RUNNERS[args.command](spec)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ReplayError as exc:
        print(f"error: inconsistent event log: {exc}", file=sys.stderr)
        return EXIT_REPLAY
    except FamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAMILY
    out = _json(args.command, payload) if args.format == "json" else _text(args.command, payload)
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
