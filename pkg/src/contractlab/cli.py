"""Command-line front end.

Exit status: 0 yes/valid, 1 no/invalid, 2 usage or I/O error, 3 search
budget exceeded.  Errors are reported on stderr as one line of the form
``error: <kind>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .dcs import p4_contractible
from .graph import GraphError, dumps, graph_from_json
from .hypergraph import Hypergraph, NormalizationError, is_two_colourable, normalize
from .reductions import GadgetError, LabeledGadget, build_gadget, p5_witness_to_colouring
from .search import SearchBudgetExceeded, contracts_to, cyclicity, find_suitable_pair
from .sweep import DEFAULT_SEED, run_sweep
from .witness import PatternSpec, WitnessStructure, verify_witness

YES, NO, USAGE, BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 5_000_000


class CliError(Exception):
    def __init__(self, kind: str, message: str) -> None:
        super().__init__(message)
        self.kind = kind


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliError("io", f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CliError("json", f"{path}: line {exc.lineno}: {exc.msg}") from None


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CliError("io", f"{path}: {exc.strerror}") from None


def _load_graph(path: str):
    try:
        return graph_from_json(_load_json(path))
    except GraphError as exc:
        raise CliError("graph", str(exc)) from None


def _load_hypergraph(path: str) -> Hypergraph:
    try:
        return Hypergraph.from_json(_load_json(path))
    except ValueError as exc:
        raise CliError("hypergraph", str(exc)) from None


def _load_witness(path: str) -> WitnessStructure:
    try:
        return WitnessStructure.from_json(_load_json(path))
    except ValueError as exc:
        raise CliError("witness", str(exc)) from None


def _answer(ws: WitnessStructure | None, witness_path: str | None) -> int:
    if ws is None:
        print("no")
        return NO
    print("yes")
    if witness_path:
        _write(witness_path, dumps(ws.to_json()))
    return YES


def cmd_gen(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.hypergraph)
    try:
        if not args.raw:
            h = normalize(h)
        gadget = build_gadget(args.kind, h)
    except (NormalizationError, GadgetError) as exc:
        raise CliError("normalize", str(exc)) from None
    _write(args.output, dumps(gadget.to_json()))
    if args.dot:
        _write(args.dot, gadget.to_dot())
    return YES


def cmd_color(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.hypergraph)
    c = is_two_colourable(h)
    if c is None:
        print("NONE")
        return NO
    sys.stdout.write(dumps(c.to_json(h)))
    return YES


def cmd_decide(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        if args.pattern == "path":
            if args.l > len(g):
                raise ValueError(f"pattern has {args.l} vertices, graph only {len(g)}")
            if args.method == "pair" and args.l >= 3:
                pair = find_suitable_pair(g, args.l, budget=args.budget)
                ws = pair.witness if pair else None
            else:
                ws = contracts_to(g, PatternSpec.path(args.l), budget=args.budget)
        elif args.pattern == "cycle":
            ws = contracts_to(g, PatternSpec.cycle(args.k), budget=args.budget)
        else:
            ws = p4_contractible(g, budget=args.budget)
    except ValueError as exc:
        raise CliError("pattern", str(exc)) from None
    return _answer(ws, args.witness)


def cmd_cyclicity(args: argparse.Namespace) -> int:
    print(cyclicity(_load_graph(args.graph), budget=args.budget))
    return YES


def cmd_verify(args: argparse.Namespace) -> int:
    check = verify_witness(_load_graph(args.graph), _load_witness(args.witness))
    print(check)
    return YES if check else NO


def cmd_extract(args: argparse.Namespace) -> int:
    try:
        gadget = LabeledGadget.from_json(_load_json(args.gadget))
    except (GadgetError, GraphError, NormalizationError) as exc:
        raise CliError("gadget", str(exc)) from None
    ws = _load_witness(args.witness)
    try:
        colouring = p5_witness_to_colouring(gadget, ws)
    except GadgetError as exc:
        print(f"invalid: {exc}")
        return NO
    sys.stdout.write(dumps(colouring.to_json(gadget.source)))
    return YES


def cmd_sweep(args: argparse.Namespace) -> int:
    report = run_sweep(
        args.max_elements,
        args.max_edges,
        samples=args.samples,
        seed=args.seed,
        jobs=args.jobs,
        budget=args.budget,
    )
    _write(args.output, report.dumps())
    s = report.summary
    print(
        f"instances={s['instances']} colourable={s['colourable']} agreement={s['agreement']} "
        f"cyclicity={s['cyclicity_agreement']} budget_exceeded={s['budget_exceeded']}",
        file=sys.stderr,
    )
    if s["budget_exceeded"]:
        return BUDGET
    return YES if report.all_agree else NO


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.exit(USAGE, f"error: usage: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="contractlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def budget_opt(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")

    sp = sub.add_parser("gen", help="build a gadget from a hypergraph")
    sp.add_argument("kind", choices=["p5", "p6", "c6"])
    sp.add_argument("hypergraph")
    sp.add_argument("-o", "--output")
    sp.add_argument("--dot")
    sp.add_argument("--raw", action="store_true", help="input is already normalized")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("color", aliases=["colour"], help="2-colour a hypergraph")
    sp.add_argument("hypergraph")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("decide", help="decide contractibility to a path, cycle or P4")
    dsub = sp.add_subparsers(dest="pattern", required=True, parser_class=_Parser)
    dp = dsub.add_parser("path")
    dp.add_argument("-l", type=int, required=True)
    dp.add_argument("--method", choices=["pair", "search"], default="pair")
    dc = dsub.add_parser("cycle")
    dc.add_argument("-k", type=int, required=True)
    d4 = dsub.add_parser("p4")
    for d in (dp, dc, d4):
        d.add_argument("graph")
        d.add_argument("--witness")
        budget_opt(d)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("cyclicity", help="longest cycle the graph contracts to")
    sp.add_argument("graph")
    budget_opt(sp)
    sp.set_defaults(func=cmd_cyclicity)

    sp = sub.add_parser("verify", help="check a witness structure")
    sp.add_argument("graph")
    sp.add_argument("witness")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("extract-colouring", help="decode a P5 witness of a gadget")
    sp.add_argument("gadget")
    sp.add_argument("witness")
    sp.set_defaults(func=cmd_extract)

    sp = sub.add_parser("sweep", help="machine-check the gadget equivalences")
    sp.add_argument("--max-elements", type=int, required=True)
    sp.add_argument("--max-edges", type=int, required=True)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("-o", "--output")
    budget_opt(sp)
    sp.set_defaults(func=cmd_sweep)
    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return USAGE
    except SearchBudgetExceeded as exc:
        print(f"error: budget: {exc}", file=sys.stderr)
        return BUDGET


def main() -> None:
    sys.exit(run())
