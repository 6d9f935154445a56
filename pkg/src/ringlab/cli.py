"""Command line: classify, verify-paper, hunt, lattice, explain."""
from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from .core import RingError
from .deciders import DEFAULT_BUDGET, DEFAULT_DEGREE
from .inference import NoVerdict, lattice_dot
from .verdicts import Property


def _add_bounds(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE,
                   help="degree bound for polynomial properties (default %(default)s)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="candidate rows enumerated per ring before giving up")
    p.add_argument("--power-bound", type=int, default=64,
                   help="powers tried before a nilpotency check gives up")


def _property(text: str) -> Property:
    try:
        return Property.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair(text: str) -> tuple[Property, Property]:
    left, sep, right = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"pair {text!r} must look like P:Q")
    return _property(left), _property(right)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringlab", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide every property of one ring or algebra")
    p.add_argument("--spec", required=True, help="expression, presentation, file, or corpus id")
    _add_bounds(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-paper", help="run the corpus against its expectations")
    p.add_argument("--report", help="write the report here (.json for JSON)")
    p.add_argument("--strict", action="store_true", help="bounded or unknown verdicts count as mismatches")
    p.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--only", nargs="*", default=(), help="restrict to these corpus ids")
    _add_bounds(p)

    p = sub.add_parser("hunt", help="search a grid of small rings for separating examples")
    p.add_argument("--max-order", type=int, default=16)
    p.add_argument("--pairs", nargs="*", type=_pair, help="property pairs P:Q (default: all open pairs)")
    p.add_argument("--max-degree", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lattice", help="emit the property graph")
    p.add_argument("--dot", required=True, help="output path, or - for stdout")

    p = sub.add_parser("explain", help="print the derivation of one verdict")
    p.add_argument("--spec", required=True)
    p.add_argument("--property", required=True, type=_property)
    _add_bounds(p)
    return parser


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _dispatch(args)
    except (RingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "classify":
        from .classify import classify
        result = classify(args.spec, args.max_degree, args.budget, args.power_bound)
        sys.stdout.write(result.to_json() if args.json else result.to_text())
        return 0

    if args.command == "explain":
        from .classify import classify
        result = classify(args.spec, args.max_degree, args.budget, args.power_bound)
        try:
            lines = result.network.trace(result.root, args.property)
        except NoVerdict as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return 1
        print("\n".join(lines))
        return 0

    if args.command == "verify-paper":
        from .harness import Config, verify_paper
        config = Config(degree=args.max_degree, budget=args.budget, power_bound=args.power_bound,
                        strict=args.strict, workers=args.workers, only=tuple(args.only))
        start = time.perf_counter()
        report = verify_paper(config)
        elapsed = time.perf_counter() - start
        if args.report:
            _write(args.report, report.to_json() if args.report.endswith(".json") else report.to_text())
        if args.json:
            sys.stdout.write(report.to_json())
        else:
            for inv in report.invariants:
                print(f"{'PASS' if inv['ok'] else 'FAIL'} {inv['name']}: {inv['detail']}")
            for row in report.mismatches:
                print(f"MISMATCH {row.ring} {row.property}: expected {row.expected}, got {row.status}")
            for ev in report.events:
                print(f"INCONSISTENT {ev}")
            for e in report.entries:
                if e["error"]:
                    print(f"ERROR {e['id']}: {e['error']}")
            print(f"summary: {report.summary()} in {elapsed:.1f}s")
        return 0 if report.ok else 1

    if args.command == "hunt":
        from .hunt import hunt, render
        results = hunt(args.max_order, args.pairs, args.max_degree, args.budget)
        sys.stdout.write(render(results, args.json))
        return 0

    if args.command == "lattice":
        _write(args.dot, lattice_dot())
        return 0
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
