"""Command line interface.

Exit codes: 0 pass, 1 usage or I/O error, 2 proven-bound violation
(including a dichotomy double failure), 3 notable finding (Reed violator).
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from fractions import Fraction
from typing import Optional

from .graphs import (
    Graph6Error,
    UnsupportedSizeError,
    encode_graph6,
    enumerate_labeled,
    gnp_stream,
)
from .harness import (
    EnumerateSource,
    HarnessAbort,
    HarnessOptions,
    RecordWriter,
    bound_records,
    invariant_records,
    scan_eps,
    scan_reed,
    verify_all,
)

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_NOTABLE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _add_source(sp) -> None:
    sp.add_argument("file", nargs="?", help="graph6 file, one graph per line")
    sp.add_argument(
        "--enumerate",
        dest="enumerate_n",
        type=int,
        metavar="N",
        help="use all labeled graphs on N vertices instead of a file",
    )


def _add_record_output(sp) -> None:
    sp.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    sp.add_argument("--out", metavar="PATH", help="record output path ('-' = stdout)")


def build_parser() -> _Parser:
    parser = _Parser(prog="chi-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariants", help="exact invariant report per graph")
    sp.add_argument("file", help="graph6 file, one graph per line")
    sp.add_argument("--with-excess", action="store_true")
    sp.add_argument("--max-n", type=int, default=None)
    _add_record_output(sp)

    sp = sub.add_parser("bounds", help="evaluate every bound per strategy")
    sp.add_argument("file", help="graph6 file, one graph per line")
    sp.add_argument("--with-excess", action="store_true")
    sp.add_argument("--strategy", choices=("exhaustive", "heuristic"), default="heuristic")
    sp.add_argument("--max-n", type=int, default=None)
    _add_record_output(sp)

    sp = sub.add_parser("verify", help="assert every proven bound >= chi")
    _add_source(sp)
    sp.add_argument("--with-excess", action="store_true")
    sp.add_argument("--strategy", choices=("exhaustive", "heuristic"), default="heuristic")
    sp.add_argument("--fail-fast", action="store_true")
    sp.add_argument("--max-n", type=int, default=None)
    _add_record_output(sp)

    sp = sub.add_parser("scan-reed", help="scan for Reed-bound violators")
    _add_source(sp)
    sp.add_argument("--max-n", type=int, default=None)
    _add_record_output(sp)

    sp = sub.add_parser("scan-eps", help="check the relaxed-bound dichotomy")
    _add_source(sp)
    sp.add_argument(
        "--epsilon",
        required=True,
        help="comma-separated positive rationals, e.g. 1/10,1/4,1/2",
    )
    sp.add_argument("--max-n", type=int, default=None)
    _add_record_output(sp)

    sp = sub.add_parser("gen", help="emit random G(n,p) graphs as graph6")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", required=True, help="edge probability as a rational")
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--seed", type=int, required=True)

    sp = sub.add_parser("enumerate", help="emit all labeled graphs on n vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-n", type=int, default=7, help="enumeration size guard")

    return parser


def _source_from(args, parser: _Parser, stack: contextlib.ExitStack):
    has_file = getattr(args, "file", None) is not None
    has_enum = getattr(args, "enumerate_n", None) is not None
    if has_file == has_enum:
        parser.error("provide exactly one of <file.g6> or --enumerate N")
    if has_enum:
        return EnumerateSource(args.enumerate_n)
    return stack.enter_context(open(args.file, "r", encoding="ascii"))


def _record_sink(args, stack: contextlib.ExitStack, default_stdout: bool):
    out = getattr(args, "out", None)
    if out is None:
        return sys.stdout if default_stdout else None
    if out == "-":
        return sys.stdout
    return stack.enter_context(open(out, "w", encoding="utf-8"))


def _options(args) -> HarnessOptions:
    return HarnessOptions(
        with_excess=getattr(args, "with_excess", False),
        strategy=getattr(args, "strategy", "heuristic"),
        fail_fast=getattr(args, "fail_fast", False),
        max_n=getattr(args, "max_n", None),
    )


def _parse_epsilons(text: str, parser: _Parser) -> list[Fraction]:
    values = []
    for part in text.split(","):
        part = part.strip()
        try:
            eps = Fraction(part)
        except (ValueError, ZeroDivisionError):
            parser.error(f"bad epsilon {part!r}")
        if eps <= 0:
            parser.error(f"epsilon must be positive, got {part}")
        values.append(eps)
    return values


def _cmd_records(args, parser: _Parser, kind: str) -> int:
    with contextlib.ExitStack() as stack:
        source = stack.enter_context(open(args.file, "r", encoding="ascii"))
        sink = _record_sink(args, stack, default_stdout=True)
        writer = RecordWriter(sink, args.format)
        producer = invariant_records if kind == "invariants" else bound_records
        for record in producer(source, _options(args)):
            writer.write(record)
    return EXIT_PASS


def _cmd_verify(args, parser: _Parser) -> int:
    with contextlib.ExitStack() as stack:
        source = _source_from(args, parser, stack)
        sink = _record_sink(args, stack, default_stdout=False)
        summary = verify_all(
            source, _options(args), record_file=sink, record_format=args.format
        )
    print(
        f"verify: graphs={summary.graphs_processed} checks={summary.bound_checks} "
        f"violations={len(summary.violations)} skipped={summary.skipped} "
        f"alpha_lt_3_logged={summary.lemma_upper_skipped} elapsed={summary.elapsed:.2f}s"
    )
    for violation in summary.violations:
        print(violation.line())
    return EXIT_VIOLATION if summary.violations else EXIT_PASS


def _cmd_scan_reed(args, parser: _Parser) -> int:
    with contextlib.ExitStack() as stack:
        source = _source_from(args, parser, stack)
        sink = _record_sink(args, stack, default_stdout=False)
        summary = scan_reed(
            source, _options(args), record_file=sink, record_format=args.format
        )
    if summary.violators:
        print(
            f"scan-reed: graphs={summary.graphs_processed} "
            f"violators={len(summary.violators)} "
            f"min_kappa_log_ratio={summary.min_kappa_log_ratio} "
            f"elapsed={summary.elapsed:.2f}s"
        )
        for violator in summary.violators:
            print(violator.line())
        return EXIT_NOTABLE
    print(
        f"scan-reed: graphs={summary.graphs_processed} no violators "
        f"elapsed={summary.elapsed:.2f}s"
    )
    return EXIT_PASS


def _cmd_scan_eps(args, parser: _Parser) -> int:
    eps_list = _parse_epsilons(args.epsilon, parser)
    with contextlib.ExitStack() as stack:
        source = _source_from(args, parser, stack)
        sink = _record_sink(args, stack, default_stdout=False)
        summary = scan_eps(
            source, eps_list, _options(args), record_file=sink, record_format=args.format
        )
    holds = " ".join(
        f"holds[{eps}]={summary.bound_hold_counts[eps]}" for eps in summary.eps
    )
    print(
        f"scan-eps: graphs={summary.graphs_processed} {holds} "
        f"dichotomy_failures={len(summary.dichotomy_failures)} "
        f"elapsed={summary.elapsed:.2f}s"
    )
    for g6, eps in summary.dichotomy_failures:
        print(f"DICHOTOMY-FAILURE graph6={g6} eps={eps}")
    return EXIT_VIOLATION if summary.dichotomy_failures else EXIT_PASS


def _cmd_gen(args, parser: _Parser) -> int:
    if args.count < 1:
        parser.error("--count must be >= 1")
    try:
        p = Fraction(args.p)
    except (ValueError, ZeroDivisionError):
        parser.error(f"bad probability {args.p!r}")
    for g in gnp_stream(args.n, p, args.seed, count=args.count):
        print(encode_graph6(g))
    return EXIT_PASS


def _cmd_enumerate(args, parser: _Parser) -> int:
    for g in enumerate_labeled(args.n, max_n=args.max_n):
        print(encode_graph6(g))
    return EXIT_PASS


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "invariants":
            return _cmd_records(args, parser, "invariants")
        if args.command == "bounds":
            return _cmd_records(args, parser, "bounds")
        if args.command == "verify":
            return _cmd_verify(args, parser)
        if args.command == "scan-reed":
            return _cmd_scan_reed(args, parser)
        if args.command == "scan-eps":
            return _cmd_scan_eps(args, parser)
        if args.command == "gen":
            return _cmd_gen(args, parser)
        if args.command == "enumerate":
            return _cmd_enumerate(args, parser)
        parser.error(f"unknown command {args.command!r}")
    except (Graph6Error, UnsupportedSizeError, HarnessAbort, ValueError) as exc:
        print(f"chi-lab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"chi-lab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
