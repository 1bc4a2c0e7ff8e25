"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 parse or usage error, 3 resource guard.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from . import groupio
from .cayley import build_digraph, build_graph, degree_stats, to_dot
from .components import (
    decompose,
    is_connected,
    path_witness,
    translation_isomorphism,
    verify_coset_structure,
)
from .errors import DomainError, MingenError, ParseError, UsageError, ValidationError
from .genset import (
    SelectionPolicy,
    connectors,
    explain_minimality,
    minimal_generating_set,
    rank_upper_bound,
    replay_trace,
    trace_records,
)
from .group import FiniteGroup, closure, index, left_cosets
from .oracle import min_generating_set_bruteforce
from .validation import validate


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_group(args) -> FiniteGroup:
    if args.table:
        return groupio.parse_cayley_table(_read(args.table))
    if args.perms:
        return groupio.parse_permutation_generators(_read(args.perms), cap=args.closure_cap)
    return groupio.builtin(args.builtin)


def _names(G: FiniteGroup, spec: str | None) -> tuple[int, ...]:
    if not spec:
        return ()
    return G.elements_named(s.strip() for s in spec.split(",") if s.strip())


def _set(G: FiniteGroup, elements) -> str:
    return "{" + G.format(elements) + "}"


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_check(G, args, out):
    report = validate(G.table)
    out(f"order: {G.order}")
    out(f"valid: {'yes' if report.ok else 'no'}")
    return 0


def cmd_info(G, args, out):
    out(f"order: {G.order}")
    orders = [G.element_order(g) for g in range(G.order)]
    for g in range(G.order):
        out(f"  {G.names[g]}: order {orders[g]}, inverse {G.names[G.inverses[g]]}")
    hist = Counter(orders)
    out("element orders: " + ", ".join(f"{k}:{hist[k]}" for k in sorted(hist)))
    return 0


def cmd_cayley(G, args, out):
    A = _names(G, args.gens)
    dg = build_digraph(G, A)
    graph = build_graph(G, A)
    ds, gs = degree_stats(dg), degree_stats(graph)
    out(f"A = {_set(G, A)}")
    out(f"arcs: {len(dg.arcs)}")
    out(f"edges: {len(graph.edges)}")
    out(f"in/out-degree: {ds.indegree}")
    out(f"degree: {gs.degree}")
    out(f"components: {decompose(graph).count}")
    if args.dot:
        _write(args.dot, to_dot(graph if args.undirected else dg))
    return 0


def cmd_components(G, args, out):
    A = _names(G, args.gens)
    graph = build_graph(G, A)
    d = decompose(graph)
    out(f"A = {_set(G, A)}")
    out(f"components: {d.count}")
    for i, block in enumerate(d.blocks, start=1):
        out(f"  C{i} = {G.names[block[0]]}<A> = {_set(G, block)}")
    check = verify_coset_structure(G, A, d)
    out(f"cosets of <A>: {'verified' if check else 'FAILED ' + check.counterexample}")
    for j in range(1, d.count):
        translation_isomorphism(graph, d, 0, j)
    out(f"translations C1 -> Ci: verified ({max(d.count - 1, 0)})")
    if args.path:
        u, v = _names(G, args.path)
        word = path_witness(graph, u, v)
        out(f"path {G.names[u]} -> {G.names[v]}: {word.format(G) if word is not None else 'none'}")
    return 0 if check else 1


def cmd_closure(G, args, out):
    A = _names(G, args.gens)
    H = closure(G, A)
    out(f"<A> = {_set(G, H.elements)}")
    out(f"order: {H.order}")
    out(f"index: {index(G, H)}")
    for i, block in enumerate(left_cosets(G, H), start=1):
        out(f"  coset {i}: {_set(G, block)}")
    return 0


def cmd_connectors(G, args, out):
    A = _names(G, args.gens)
    d = decompose(build_graph(G, A))
    S = connectors(G, A, d, args.mode)
    label = "S1" if args.mode == "chain" else "S2"
    out(f"components of Cay(G, A): {d.count}")
    out(f"{label} = {_set(G, S)}")
    out(f"size: {len(S)}")
    out(f"connected: {'yes' if is_connected(G, S) else 'no'}")
    out(f"rank bound: {rank_upper_bound(G, A)}")
    return 0


def cmd_mingen(G, args, out):
    start = G.element(args.start)
    kind = args.policy or ("script" if args.script else "first")
    if kind == "script":
        if not args.script:
            raise UsageError("--policy script needs --script")
        policy = SelectionPolicy.scripted(_names(G, args.script))
    else:
        policy = SelectionPolicy()
    result = minimal_generating_set(G, start, policy)
    records = trace_records(G, result.trace)
    for n, rec in enumerate(records, start=1):
        if rec["kind"] == "grow":
            out(f"{n}. grow  {rec['element']}: components {rec['components']}")
        else:
            verdict = "removed" if rec["removed"] else "kept"
            out(f"{n}. prune {rec['element']}: connected={'yes' if rec['connected'] else 'no'}, {verdict}")
    out(f"final: {G.format(result.generators)}")
    report = explain_minimality(G, result.generators) if G.order > 1 else None
    out(f"minimal: {'yes' if report is None or report.minimal else 'no'}")
    if args.trace_json:
        _write(args.trace_json, "".join(json.dumps(r) + "\n" for r in records))
    if args.dot:
        _write(args.dot, to_dot(build_digraph(G, result.generators)))
    return 0


def cmd_verify_trace(G, args, out):
    records = []
    for lineno, line in enumerate(_read(args.trace).splitlines(), start=1):
        if line.strip():
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON: {exc.msg}", lineno) from None
    final = replay_trace(G, records)
    if not is_connected(G, final):
        raise DomainError("replayed set does not generate the group")
    out(f"final: {G.format(final)}")
    return 0


def cmd_rank(G, args, out):
    cert = min_generating_set_bruteforce(G, args.cap)
    out(f"rank: {cert.rank}")
    out(f"witness: {_set(G, cert.witness)}")
    return 0


COMMANDS = {
    "check": cmd_check,
    "info": cmd_info,
    "cayley": cmd_cayley,
    "components": cmd_components,
    "closure": cmd_closure,
    "connectors": cmd_connectors,
    "mingen": cmd_mingen,
    "verify-trace": cmd_verify_trace,
    "rank": cmd_rank,
}


def build_parser() -> argparse.ArgumentParser:
    source = argparse.ArgumentParser(add_help=False)
    src = source.add_mutually_exclusive_group(required=True)
    src.add_argument("--table", help="Cayley-table file")
    src.add_argument("--perms", help="permutation generator file")
    src.add_argument("--builtin", help="family spec, e.g. cyclic:6, dihedral:4, klein4, a4, cyclic:2*cyclic:2")
    source.add_argument("--closure-cap", type=int, default=groupio.DEFAULT_CLOSURE_CAP)

    parser = argparse.ArgumentParser(prog="mingen", description="Cayley graphs and minimal generating sets of finite groups")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("check", parents=[source], help="validate the group axioms")
    sub.add_parser("info", parents=[source], help="order and element orders")

    p = sub.add_parser("cayley", parents=[source], help="build Cay(G, A) and check degrees")
    p.add_argument("--gens", default="", help="comma-separated element names")
    p.add_argument("--dot", help="write DOT to this path")
    p.add_argument("--undirected", action="store_true", help="DOT of the undirected graph")

    p = sub.add_parser("components", parents=[source], help="components and their cosets")
    p.add_argument("--gens", default="")
    p.add_argument("--path", help="two element names u,v; print a word for u^-1 v")

    p = sub.add_parser("closure", parents=[source], help="<A>, its index and cosets")
    p.add_argument("--gens", default="")

    p = sub.add_parser("connectors", parents=[source], help="join components into a generating set")
    p.add_argument("--gens", default="")
    p.add_argument("--mode", choices=("chain", "star"), default="star")

    p = sub.add_parser("mingen", parents=[source], help="grow-then-prune minimal generating set")
    p.add_argument("--start", required=True)
    p.add_argument("--policy", choices=("first", "script"))
    p.add_argument("--script", help="comma-separated picks for v2")
    p.add_argument("--trace-json", help="write the JSON-lines trace here")
    p.add_argument("--dot", help="write the color digraph of the result here")

    p = sub.add_parser("verify-trace", parents=[source], help="replay a JSON-lines trace")
    p.add_argument("--trace", required=True)

    p = sub.add_parser("rank", parents=[source], help="brute-force rank")
    p.add_argument("--cap", type=int, help="largest subset size to try")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def out(line: str) -> None:
        stdout.write(line + "\n")

    try:
        try:
            G = load_group(args)
        except ValidationError as exc:
            if args.command != "check":
                raise
            out("valid: no")
            for v in exc.report.violations:
                out(f"  {v.law}: {list(v.witness)}")
            return 1
        return COMMANDS[args.command](G, args, out)
    except MingenError as exc:
        stderr.write(f"mingen: error: {exc}\n")
        return exc.exit_code


def main() -> None:
    sys.exit(run())
