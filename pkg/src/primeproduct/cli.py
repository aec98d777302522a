"""Command-line front end for the product-formula prime library.

Subcommands: is-prime, pi, nth, list, verify, bench.  Numbers cross the CLI
boundary as decimal strings, so arbitrary precision survives end to end.

Exit codes: 0 success, 1 verification mismatch, 2 usage/parse/resource error.
Results go to stdout, error messages to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import sweep, write_report
from .formula import (
    SHORT_CIRCUIT,
    STRATEGIES,
    nth_prime,
    primality_indicator,
    prime_count,
    prime_stream,
)
from .oracle import DEFAULT_SIEVE_CAP, build_sieve


def _natural(text: str) -> int:
    """argparse type: a plain decimal non-negative integer of any length."""
    if not (text.isascii() and text.isdigit()):
        raise argparse.ArgumentTypeError(
            f"expected a non-negative decimal integer, got {text!r}"
        )
    return int(text)


def _positive(text: str) -> int:
    value = _natural(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def _cmd_is_prime(args: argparse.Namespace) -> int:
    value, _ = primality_indicator(args.n, args.strategy)
    if args.json:
        print(json.dumps({"n": str(args.n), "p": value}))
    else:
        print(value)
    return 0


def _cmd_pi(args: argparse.Namespace) -> int:
    count = prime_count(args.n)
    if args.json:
        print(json.dumps({"n": str(args.n), "pi": str(count)}))
    else:
        print(count)
    return 0


def _cmd_nth(args: argparse.Namespace) -> int:
    prime = nth_prime(args.k)
    if args.json:
        print(json.dumps({"k": str(args.k), "prime": str(prime)}))
    else:
        print(prime)
    return 0


def _cmd_list(args: argparse.Namespace) -> int:
    if args.start > args.stop:
        print(f"error: empty range: FROM {args.start} is above TO {args.stop}", file=sys.stderr)
        return 2
    collected: list[str] = []
    for p in prime_stream(args.start):
        if p > args.stop:
            break
        if args.json:
            collected.append(str(p))
        else:
            print(p)
    if args.json:
        print(json.dumps({"from": str(args.start), "to": str(args.stop), "primes": collected}))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    table = build_sieve(args.max, cap=args.cap)
    mismatches = 0
    first: int | None = None
    for n in range(args.max + 1):
        value, _ = primality_indicator(n, args.strategy)
        if bool(value) != table[n]:
            mismatches += 1
            if first is None:
                first = n
    checked = args.max + 1
    if args.json:
        print(
            json.dumps(
                {
                    "max": str(args.max),
                    "checked": checked,
                    "mismatches": mismatches,
                    "first_mismatch": None if first is None else str(first),
                    "ok": mismatches == 0,
                }
            )
        )
    elif mismatches == 0:
        print(f"{checked} values checked, 0 mismatches")
    else:
        print(f"{checked} values checked, {mismatches} mismatches (first at n={first})")
    return 0 if mismatches == 0 else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    report = sweep(args.start, args.stop, strategy=args.strategy)
    target = write_report(report, args.out)
    if args.json:
        print(json.dumps({"out": str(target)}))
    else:
        print(target)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of plain text")
    common.add_argument(
        "--strategy",
        choices=STRATEGIES,
        default=SHORT_CIRCUIT,
        help="product evaluation strategy (default: %(default)s)",
    )

    parser = argparse.ArgumentParser(
        prog="primeproduct",
        description="Primality, prime counting and prime streams from an exact floor/ceiling divisor product.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("is-prime", parents=[common], help="print 1 when N is prime, else 0")
    p.add_argument("n", metavar="N", type=_natural)
    p.set_defaults(handler=_cmd_is_prime)

    p = sub.add_parser("pi", parents=[common], help="print the number of primes <= N")
    p.add_argument("n", metavar="N", type=_natural)
    p.set_defaults(handler=_cmd_pi)

    p = sub.add_parser("nth", parents=[common], help="print the K-th prime (1-indexed)")
    p.add_argument("k", metavar="K", type=_positive)
    p.set_defaults(handler=_cmd_nth)

    p = sub.add_parser("list", parents=[common], help="print the primes in [FROM, TO], one per line")
    p.add_argument("start", metavar="FROM", type=_natural)
    p.add_argument("stop", metavar="TO", type=_natural)
    p.set_defaults(handler=_cmd_list)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="cross-check the evaluator against a sieve for every n <= MAX",
    )
    p.add_argument("max", metavar="MAX", type=_natural)
    p.add_argument(
        "--cap",
        type=_natural,
        default=DEFAULT_SIEVE_CAP,
        help="largest MAX the sieve may be asked for (default: %(default)s)",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "bench",
        parents=[common],
        help="sweep [FROM, TO] and write a CSV or JSON-lines report",
    )
    p.add_argument("start", metavar="FROM", type=_natural)
    p.add_argument("stop", metavar="TO", type=_natural)
    p.add_argument("--out", required=True, help="report path; .csv or .jsonl picks the format")
    p.set_defaults(handler=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Run one subcommand and return the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message (exit 2 on usage errors)
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
