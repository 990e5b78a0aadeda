"""Command line front end.

Every library operation is reachable from a subcommand, and ``verify``
cross-checks the independent computation routes against each other.
Output is plain newline-terminated text, deterministic for identical
invocations. Exit status: 0 success, 1 usage or input error, 2 when
``verify`` reports any FAIL line.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterator

from . import sequences, series, symdiff, words
from .errors import MotzkinError

# Above this length the verify census would enumerate millions of words;
# checks that need exhaustive listings are capped here.
CENSUS_LIMIT = 14
ROUNDTRIP_LIMIT = 10

_SERIES_METHODS = {
    "motzkin": {"functional": "functional", "closed": "closed_form"},
    "nat": {"product": "product", "linear": "linear"},
}
_SERIES_DEFAULT = {"motzkin": "functional", "nat": "product"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motzkin",
        description="Motzkin words, their counting sequences, and generating functions, all in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numbers", help="print the Motzkin numbers M_0..M_N")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.add_argument("--bfile", action="store_true", help="print 'n value' pairs (b-file format)")
    p.set_defaults(handler=_cmd_numbers)

    p = sub.add_parser("diff", help="print the difference numbers U_0..U_N")
    p.add_argument("--max", type=int, required=True, metavar="N")
    p.add_argument("--method", choices=("subtraction", "convolution"), default="subtraction")
    p.add_argument("--bfile", action="store_true", help="print 'n value' pairs (b-file format)")
    p.set_defaults(handler=_cmd_diff)

    p = sub.add_parser("enumerate", help="list all Motzkin words of one length in series order")
    p.add_argument("--length", type=int, required=True, metavar="N")
    p.add_argument("--filter", choices=words.FILTERS, default="all")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("rank", help="position of a unique word in the series")
    p.add_argument("--word", required=True, metavar="W")
    p.set_defaults(handler=_cmd_rank)

    p = sub.add_parser("unrank", help="series element at an index")
    p.add_argument("--index", type=int, required=True, metavar="I")
    p.set_defaults(handler=_cmd_unrank)

    p = sub.add_parser("series", help="generating function coefficients 0..N")
    p.add_argument("--target", choices=("motzkin", "nat"), required=True)
    p.add_argument("--order", type=int, required=True, metavar="N")
    p.add_argument("--method", choices=("functional", "closed", "product", "linear"))
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("symdiff", help="difference numbers via the symbolic derivative cycle")
    p.add_argument("--max", type=int, required=True, metavar="K")
    p.set_defaults(handler=_cmd_symdiff)

    p = sub.add_parser(
        "verify",
        help="cross-check all computation routes; census and round-trip "
        f"checks are capped at lengths {CENSUS_LIMIT} and {ROUNDTRIP_LIMIT}",
    )
    p.add_argument("--max", type=int, default=12, metavar="N")
    p.set_defaults(handler=_cmd_verify)

    return parser


def _print_table(values: list[int], bfile: bool) -> None:
    for n, value in enumerate(values):
        print(f"{n} {value}" if bfile else value)


def _cmd_numbers(args: argparse.Namespace) -> int:
    _print_table(sequences.motzkin_numbers(args.max), args.bfile)
    return 0


def _cmd_diff(args: argparse.Namespace) -> int:
    _print_table(sequences.difference_numbers(args.max, args.method), args.bfile)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    listing = words.enumerate_words(args.length, args.filter)
    for word in listing:
        print(word)
    print(f"count={len(listing)}")
    return 0


def _cmd_rank(args: argparse.Namespace) -> int:
    print(words.rank(args.word))
    return 0


def _cmd_unrank(args: argparse.Namespace) -> int:
    print(words.unrank(args.index))
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    methods = _SERIES_METHODS[args.target]
    flag = args.method or _SERIES_DEFAULT[args.target]
    if flag not in methods:
        print(f"error: USAGE: method '{flag}' does not apply to target '{args.target}'", file=sys.stderr)
        return 1
    if args.target == "motzkin":
        result = series.motzkin_series(args.order, methods[flag])
    else:
        result = series.nat_series(args.order, methods[flag])
    for value in result.integer_coefficients():
        print(value)
    return 0


def _cmd_symdiff(args: argparse.Namespace) -> int:
    for value in symdiff.nat_coefficients(args.max):
        print(value)
    return 0


def verification_checks(max_n: int) -> Iterator[tuple[str, bool, str]]:
    """Yield (name, passed, detail) for the full cross-check matrix."""
    motzkin = sequences.motzkin_numbers(max_n)
    diff_sub = sequences.difference_numbers(max_n, "subtraction")
    diff_conv = sequences.difference_numbers(max_n, "convolution")
    functional = series.motzkin_series(max_n, "functional").integer_coefficients()
    closed = series.motzkin_series(max_n, "closed_form").integer_coefficients()
    nat_product = series.nat_series(max_n, "product").integer_coefficients()
    nat_linear = series.nat_series(max_n, "linear").integer_coefficients()
    cycle = symdiff.nat_coefficients(max_n)

    span = f"n <= {max_n}"
    yield "motzkin-recurrence-vs-functional-series", motzkin == functional, span
    yield "motzkin-functional-vs-closed-form", functional == closed, span
    yield "difference-subtraction-vs-convolution", diff_sub == diff_conv, span
    yield "nat-product-vs-linear", nat_product == nat_linear, span
    yield "nat-series-vs-difference-table", nat_product == diff_sub, span
    yield "symdiff-vs-difference-table", cycle == diff_sub, span

    census_max = min(max_n, CENSUS_LIMIT)
    all_ok = unique_ok = inherited_ok = True
    for n in range(census_max + 1):
        all_ok &= len(words.enumerate_words(n, "all")) == motzkin[n]
        if n >= 1:
            unique_ok &= len(words.enumerate_words(n, "unique")) == diff_sub[n]
        if n >= 2:
            inherited_ok &= len(words.enumerate_words(n, "inherited")) == motzkin[n - 1]
    census_span = f"n <= {census_max}"
    yield "census-all-vs-motzkin-table", all_ok, census_span
    yield "census-unique-vs-difference-table", unique_ok, census_span
    yield "census-inherited-vs-shifted-motzkin", inherited_ok, census_span

    roundtrip_max = min(max_n, ROUNDTRIP_LIMIT)
    roundtrip_ok = order_ok = True
    index = 0
    previous = None
    for n in range(1, roundtrip_max + 1):
        for word in words.enumerate_words(n, "unique"):
            roundtrip_ok &= words.rank(word) == index and words.unrank(index) == word
            if previous is not None:
                order_ok &= words.compare(previous, word) == -1
            previous = word
            index += 1
    roundtrip_span = f"lengths <= {roundtrip_max}, {index} words"
    yield "rank-unrank-roundtrip", roundtrip_ok, roundtrip_span
    yield "unrank-order-coherence", order_ok, roundtrip_span


def _cmd_verify(args: argparse.Namespace) -> int:
    failed = False
    for name, ok, detail in verification_checks(args.max):
        print(f"{'PASS' if ok else 'FAIL'} {name} ({detail})")
        failed |= not ok
    return 2 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.handler(args)
    except (MotzkinError, ValueError) as exc:
        code = getattr(exc, "code", "USAGE")
        print(f"error: {code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
