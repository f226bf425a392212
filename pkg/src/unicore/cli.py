"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 unsupported graph class,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import METHODS, analyze, cores_agree
from .errors import InvalidInput, InvalidSpec, NotUnicyclic, TooLarge, UnknownFixture, UnsupportedClass
from .gen import GenSpec, fixture, fixture_names, generate
from .graph import Graph, GraphClass, classify, find_cycle, parse_graph, serialize
from .oracle import DEFAULT_LIMIT, default_limit
from .solver import alpha, cycle_alpha_critical_edges, mu
from .verify import CAMPAIGN_KINDS, run_campaign

EXIT_OK, EXIT_INPUT, EXIT_CLASS, EXIT_MISMATCH = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _load(args: argparse.Namespace) -> Graph:
    if args.fixture:
        return fixture(args.fixture)
    if args.path is None:
        raise CliError("give a PATH or --fixture NAME", EXIT_INPUT)
    try:
        text = sys.stdin.read() if args.path == "-" else Path(args.path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(f"cannot read {args.path}: {exc}", EXIT_INPUT) from exc
    return parse_graph(text)


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load(args)
    report = analyze(g, "deletion" if args.method == "deletion" else "structural")
    print(report.to_json() if args.json else report.to_text())
    if args.method == "both":
        ok, fast, slow = cores_agree(g)
        if not ok:
            print(
                f"mismatch: {fast.method.value} {sorted(fast.core)} vs "
                f"{slow.method.value} {sorted(slow.core)}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_critical(args: argparse.Namespace) -> int:
    g = _load(args)
    if classify(g) is not GraphClass.UNICYCLIC:
        raise NotUnicyclic(f"graph is {classify(g).value}")
    edges = find_cycle(g).ordered_cycle_edges()
    critical = set(cycle_alpha_critical_edges(g))
    ke = alpha(g) + mu(g) == g.n
    all_critical = len(critical) == len(edges)
    holds = all_critical == (not ke)
    if args.json:
        print(json.dumps({
            "cycle_edges": [[u, v, (u, v) in critical] for u, v in edges],
            "critical": len(critical),
            "total": len(edges),
            "koenig_egervary": ke,
            "equivalence_holds": holds,
        }, sort_keys=True))
    else:
        for u, v in edges:
            print(f"{u} {v} {'critical' if (u, v) in critical else 'not-critical'}")
        print(f"critical: {len(critical)}/{len(edges)}")
        print(f"koenig_egervary: {str(ke).lower()}")
        print(f"equivalence_holds: {str(holds).lower()}")
    return EXIT_OK if holds else EXIT_MISMATCH


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(args.kind, args.n, args.seed)
    text = serialize(generate(spec), spec.header())
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    limit = args.oracle_limit if args.oracle_limit is not None else default_limit()
    if args.count < 1:
        raise CliError("--count must be >= 1", EXIT_INPUT)
    if args.max_n < 3:
        raise CliError("--max-n must be >= 3", EXIT_INPUT)
    if not 3 <= limit <= DEFAULT_LIMIT:
        raise CliError(f"--oracle-limit must lie in [3, {DEFAULT_LIMIT}]", EXIT_INPUT)
    result = run_campaign(args.count, args.max_n, args.seed, args.kind, limit, args.jobs)
    print("\n".join(result.summary_lines()))
    return EXIT_OK if result.failed == 0 else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; argparse's own status 2 means "unsupported class" here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unicore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("path", nargs="?", help="edge-list file, or - for stdin")
        p.add_argument("--fixture", choices=fixture_names(), help="analyze a built-in example graph")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("analyze", help="alpha, mu, KE status and core of a graph")
    graph_input(p)
    p.add_argument("--method", choices=METHODS, default="structural")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("critical", help="alpha-critical edges of the unique cycle")
    graph_input(p)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--kind", choices=("tree", "unicyclic", "forest"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="differential campaign against the oracle")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=CAMPAIGN_KINDS, default="mixed")
    p.add_argument("--oracle-limit", type=int, default=None,
                   help=f"largest n checked by the oracle (default: $UNICORE_ORACLE_LIMIT or {DEFAULT_LIMIT})")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (UnsupportedClass, NotUnicyclic) as exc:
        print(f"error: unsupported graph: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except (InvalidInput, InvalidSpec, UnknownFixture, TooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
