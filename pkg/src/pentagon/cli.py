"""Command-line interface: ``pentagon <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from typing import Optional, Sequence

from . import _backend
from .canon import canonical_certificate
from .cycles import enumerate_induced_cycles
from .dynamics import DEFAULT_MAX_ORDER, DEFAULT_MAX_STEPS, classify, expansion_evidence, iterate
from .graph import GraphError
from .io import load_graph, write_dot, write_graph6
from .operator import cycle_operator

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True,
                   help="zoo name (icosahedron, cycle:5, hatted-icosahedron:3, ...) or a file "
                        "(.g6 = graph6, otherwise an edge list)")


def _k_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, default=5, help="cycle length (default 5)")


def _budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pentagon", description=__doc__)
    parser.add_argument("--backend", choices=["python", "cython"],
                        help="kernel implementation (default: compiled if available)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list induced k-cycles")
    _graph_arg(p)
    _k_arg(p)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("apply", help="apply the cycle operator once")
    _graph_arg(p)
    _k_arg(p)
    p.add_argument("--dot", help="write the output graph as DOT")
    p.add_argument("--g6", help="write the output graph as graph6")
    p.add_argument("--provenance", help="write the cycle-to-vertex map as JSON")

    p = sub.add_parser("classify", help="iterate and classify")
    _graph_arg(p)
    _k_arg(p)
    _budget_args(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("evidence", help="growth report along the trajectory")
    _graph_arg(p)
    _k_arg(p)
    _budget_args(p)
    p.add_argument("--hats", type=int, help="hat count for the growth bound check")
    p.add_argument("--search-cap", type=int, default=2000,
                   help="skip the icosahedron search above this order")

    p = sub.add_parser("cert", help="print the canonical certificate")
    _graph_arg(p)

    p = sub.add_parser("survey", help="classify every graph of a graph6 file into JSONL")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)
    _k_arg(p)
    _budget_args(p)
    p.add_argument("--budgets", help="shorthand STEPS,ORDER for --max-steps/--max-order")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--resume", action="store_true", help="append, skipping inputs already written")

    sub.add_parser("verify-paper", help="run the golden checks")
    return parser


def _cmd_enumerate(args) -> int:
    g = load_graph(args.graph)
    cycles = enumerate_induced_cycles(g, args.k)
    print(f"induced {args.k}-cycles: {len(cycles)}")
    if not args.count_only:
        for c in cycles:
            print(c.bracket(g))
    return EXIT_OK


def _cmd_apply(args) -> int:
    g = load_graph(args.graph)
    res = cycle_operator(g, args.k)
    out = res.output
    print(f"order {out.order} size {out.size}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(write_dot(out))
    if args.g6:
        with open(args.g6, "wb") as fh:
            fh.write(write_graph6(out) + b"\n")
    if args.provenance:
        with open(args.provenance, "w") as fh:
            fh.write(res.to_json())
    return EXIT_OK


def _cmd_classify(args) -> int:
    g = load_graph(args.graph)
    c = classify(g, args.k, args.max_steps, args.max_order)
    if args.json:
        print(c.to_json())
        return EXIT_OK
    d = c.as_dict()
    extra = " ".join(f"{key}={d[key]}" for key in ("vanish_step", "preperiod", "period") if key in d)
    print(f"outcome: {d['outcome']} {extra}".rstrip())
    print("orders: " + " ".join(map(str, d["orders"])))
    print(f"stop: {d['stop_reason']}")
    if "certificate" in d:
        cert = d["certificate"]
        print(f"structure: {cert['family']} h={cert['h']} ({cert['theorem']})")
    return EXIT_OK


def _cmd_evidence(args) -> int:
    g = load_graph(args.graph)
    traj = iterate(g, args.k, args.max_steps, args.max_order)
    print(json.dumps(expansion_evidence(traj, args.hats, args.search_cap), indent=2))
    return EXIT_OK


def _cmd_cert(args) -> int:
    g = load_graph(args.graph)
    cert = canonical_certificate(g)
    print(cert.hex)
    print(f"hash {cert.hash:016x}")
    return EXIT_OK


def _cmd_survey(args) -> int:
    from .survey import survey_file

    if args.budgets:
        try:
            steps, order = (int(x) for x in args.budgets.split(","))
        except ValueError:
            print("--budgets expects STEPS,ORDER", file=sys.stderr)
            return EXIT_USAGE
        args.max_steps, args.max_order = steps, order
    n = survey_file(args.inp, args.out, args.k, args.max_steps, args.max_order,
                    args.jobs, args.resume)
    tally = Counter()
    errors = 0
    with open(args.out) as fh:
        for line in fh:
            rec = json.loads(line)
            tally[rec["outcome"]] += 1
            errors += rec["outcome"] == "Error"
    print(f"wrote {n} records to {args.out}")
    for name, count in sorted(tally.items()):
        print(f"  {name}: {count}")
    return EXIT_FAIL if errors else EXIT_OK


def _cmd_verify(args) -> int:
    from .verify import run_all

    results = run_all()
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  [{r.detail}]")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "apply": _cmd_apply,
    "classify": _cmd_classify,
    "evidence": _cmd_evidence,
    "cert": _cmd_cert,
    "survey": _cmd_survey,
    "verify-paper": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.backend:
        _backend.set_backend(args.backend)
    if getattr(args, "k", 5) < 3:
        print("--k must be at least 3", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
