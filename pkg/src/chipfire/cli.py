"""Command-line front end.

Exit codes: 0 on success (for verify-paper: all rows pass), 1 on a
failing verification row, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import families
from .divisors import canonical_divisor
from .formats import (
    FormatError,
    emit_divisor,
    emit_graph,
    load_divisor,
    load_graph,
    save_graph,
)
from .formulas import predicted
from .graphs import GraphError
from .rank import rank, riemann_roch_check
from .reduction import dhar, q_reduce
from .reproduce import verify_paper
from .search import default_jobs, gonality, mf_gonality


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chipfire",
        description="Exact chip-firing computations on finite multigraphs.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=None,
        metavar="N",
        help="worker processes for searches (default: machine parallelism)",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        metavar="S",
        help="seed for sampled verification rows (core results are seed-independent)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="build a named family member")
    p.add_argument("kind", choices=families.FAMILY_KINDS)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", metavar="FILE", help="write graph file")
    p.add_argument("--base", metavar="FILE", help="base graph (cone only)")

    p = sub.add_parser("dhar", help="run one burning pass")
    p.add_argument("graph")
    p.add_argument("divisor")
    p.add_argument("--from", dest="source", type=int, required=True, metavar="Q")

    p = sub.add_parser("reduce", help="compute the q-reduced representative")
    p.add_argument("graph")
    p.add_argument("divisor")
    p.add_argument("--base", dest="base", type=int, required=True, metavar="Q")
    p.add_argument("--script", action="store_true", help="print the firing script")

    p = sub.add_parser("rank", help="exact divisor rank with witness")
    p.add_argument("graph")
    p.add_argument("divisor")

    p = sub.add_parser("rr", help="evaluate both sides of the rank duality identity")
    p.add_argument("graph")
    p.add_argument("divisor")

    for name, help_text in (
        ("gon", "minimum degree of a divisor of rank >= r"),
        ("mfgon", "minimum degree of a multiplicity-free divisor of rank >= r"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph")
        p.add_argument("-r", type=int, default=1, help="target rank (default 1)")
        p.add_argument("--witness", action="store_true")
        p.add_argument("--stats", action="store_true")

    p = sub.add_parser("predict", help="proven gon/mfgon values for a family")
    p.add_argument("kind", choices=families.FAMILY_KINDS)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--base", metavar="FILE", help="base graph (cone only)")

    p = sub.add_parser("verify-paper", help="run the verification claim suite")
    p.add_argument("--scale", choices=("quick", "full"), default="quick")
    return parser


def _cmd_family(args) -> int:
    base = load_graph(args.base) if args.base else None
    graph = families.build_family(args.kind, args.params, base=base)
    text = emit_graph(graph)
    if args.output:
        save_graph(graph, args.output)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_dhar(args) -> int:
    graph = load_graph(args.graph)
    divisor = load_divisor(args.divisor, graph)
    report = dhar(divisor, args.source)
    print(f"source: {report.source}")
    print("burned:", " ".join(str(v) for v in report.burned_order))
    if report.unburned:
        print("unburned:", " ".join(str(v) for v in sorted(report.unburned)))
    else:
        print("unburned: (none; divisor is reduced at the source)")
    return 0


def _cmd_reduce(args) -> int:
    graph = load_graph(args.graph)
    divisor = load_divisor(args.divisor, graph)
    result = q_reduce(divisor, args.base)
    sys.stdout.write(emit_divisor(result.reduced))
    if args.script:
        for members, times in result.script:
            print("fire", " ".join(str(v) for v in sorted(members)), "x", times)
    return 0


def _cmd_rank(args) -> int:
    graph = load_graph(args.graph)
    divisor = load_divisor(args.divisor, graph)
    result = rank(divisor)
    print(f"rank = {result.value}")
    if result.value == -1:
        print(f"witness: reduced form is negative at vertex {result.debt_vertex}")
    else:
        print(f"witness: cannot absorb {emit_divisor(result.witness).strip()}")
    return 0


def _cmd_rr(args) -> int:
    graph = load_graph(args.graph)
    divisor = load_divisor(args.divisor, graph)
    k = canonical_divisor(graph)
    lhs = rank(divisor).value - rank(k - divisor).value
    rhs = divisor.degree + 1 - graph.genus()
    status = "ok" if riemann_roch_check(divisor) else "VIOLATED (engine bug)"
    print(f"r(D) - r(K-D) = {lhs}")
    print(f"deg(D) + 1 - g = {rhs}")
    print(status)
    return 0


def _render_value(value) -> str:
    return "infinity" if value == math.inf else str(value)


def _cmd_search(args, mf: bool) -> int:
    graph = load_graph(args.graph)
    jobs = args.jobs if args.jobs else default_jobs()
    if mf:
        result = mf_gonality(graph, r=args.r, jobs=jobs)
    else:
        result = gonality(graph, r=args.r, jobs=jobs)
    print(_render_value(result.value))
    if args.witness and result.witness is not None:
        sys.stdout.write("witness: " + emit_divisor(result.witness))
    if args.stats:
        stats = result.stats
        print(f"candidates={stats.candidates}")
        print(f"certificate_prunes={stats.certificate_prunes}")
        print(f"full_probes={stats.full_probes}")
        for degree in sorted(stats.by_degree):
            print(f"degree_{degree}_space={stats.by_degree[degree]}")
        print(f"seconds={stats.seconds:.3f}")
    return 0


def _cmd_predict(args) -> int:
    base = load_graph(args.base) if args.base else None
    spec = families.FamilySpec(args.kind, tuple(args.params))
    gon_p, mf_p = predicted(spec, base=base)
    print(gon_p.render())
    print(mf_p.render())
    return 0


def _cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs else default_jobs()
    report = verify_paper(scale=args.scale, jobs=jobs, seed=args.seed)
    print(report.render())
    return report.exit_code


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "family":
            return _cmd_family(args)
        if args.command == "dhar":
            return _cmd_dhar(args)
        if args.command == "reduce":
            return _cmd_reduce(args)
        if args.command == "rank":
            return _cmd_rank(args)
        if args.command == "rr":
            return _cmd_rr(args)
        if args.command == "gon":
            return _cmd_search(args, mf=False)
        if args.command == "mfgon":
            return _cmd_search(args, mf=True)
        if args.command == "predict":
            return _cmd_predict(args)
        if args.command == "verify-paper":
            return _cmd_verify(args)
    except (GraphError, FormatError, ValueError, OSError) as exc:
        print(f"chipfire: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
