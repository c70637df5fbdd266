"""bstat command line: statistics, mapping, distributions, verification, lattices.

Words are given as space-separated signed integers, e.g.::

    bstat stats -5 7 6 1 2 -4 -3

(bare negative numbers are accepted; a ``--`` separator before the word
also works).  Exit codes: 0 success, 1 at least one identity check
failed, 2 usage, parse, or size-limit error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import statistics
from .bijection import build_u_J, decompose_delta, delta_set, flag_to_neg, neg_to_flag
from .core import (
    AmbientMismatchError,
    IndexOutOfRangeError,
    IndexSet,
    PlainWord,
    SignedWord,
    WordError,
    descent_set,
    format_word,
    magnitudes,
    parse_word,
    standardize,
)
from .distributions import (
    SizeLimitError,
    dist_flag,
    dist_flag_over,
    dist_neg,
    dist_neg_over,
    refined_eulerian,
)
from .polynomial import MalformedFactorError
from .verify import GROUPS, run_all

MAX_WORD_N = 16
MAX_LATTICE_N = 8


class UsageError(Exception):
    """Command-level misuse that argparse cannot see (exit code 2)."""


def _word_from_tokens(tokens: Sequence[str]) -> SignedWord:
    w = parse_word(" ".join(tokens))
    if len(w) > MAX_WORD_N:
        raise SizeLimitError(f"words are capped at n <= {MAX_WORD_N}, got {len(w)}")
    return w


def _print_record(record: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(record))
    else:
        width = max(len(k) for k in record)
        for k, v in record.items():
            print(f"{k:<{width}}  {v}")


def _cmd_stats(args: argparse.Namespace) -> int:
    w = _word_from_tokens(args.word)
    des_w = descent_set(w)
    record = {
        "word": format_word(w),
        "st": format_word(standardize(w)),
        "negatives": sorted(statistics.negative_set(w).members()),
        "Des": sorted(des_w.members()),
        "des": len(des_w),
        "maj": sum(des_w),
        "ndes": statistics.ndes(w),
        "nmaj": statistics.nmaj(w),
        "fdes": statistics.fdes(w),
        "fmaj": statistics.fmaj(w),
    }
    _print_record(record, args.json)
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    w = _word_from_tokens(args.word)
    if args.direction == "to-flag":
        u = standardize(w)
        J = statistics.negative_set(w)
        out = neg_to_flag(w)
        in_stats = {"ndes": statistics.ndes(w), "nmaj": statistics.nmaj(w)}
        out_stats = {"fdes": statistics.fdes(out), "fmaj": statistics.fmaj(out)}
    else:
        u = magnitudes(w)
        out = flag_to_neg(w)
        J = statistics.negative_set(out)
        in_stats = {"fdes": statistics.fdes(w), "fmaj": statistics.fmaj(w)}
        out_stats = {"ndes": statistics.ndes(out), "nmaj": statistics.nmaj(out)}
    record = {
        "direction": args.direction,
        "input": format_word(w),
        "u": format_word(u),
        "J": sorted(J.members()),
        "output": format_word(out),
        "input_stats": in_stats,
        "output_stats": out_stats,
    }
    _print_record(record, args.json)
    return 0


def _parse_fiber(text: str) -> PlainWord:
    u = PlainWord(parse_word(text))
    if len(u) > MAX_WORD_N:
        raise SizeLimitError(f"words are capped at n <= {MAX_WORD_N}, got {len(u)}")
    return u


def _cmd_dist(args: argparse.Namespace) -> int:
    if args.fiber is not None:
        if args.family == "euler":
            raise UsageError("--fiber applies to the neg and flag families only")
        u = _parse_fiber(args.fiber)
        if args.n is not None and args.n != len(u):
            raise UsageError(f"-n {args.n} disagrees with the fiber word length {len(u)}")
        p = dist_neg_over(u) if args.family == "neg" else dist_flag_over(u)
    else:
        if args.n is None:
            raise UsageError("-n is required unless --fiber is given")
        if args.family == "euler":
            p = refined_eulerian(args.n)
        elif args.family == "neg":
            p = dist_neg(args.n)
        else:
            p = dist_flag(args.n)
    print(p)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    only = args.only or None
    results = run_all(args.n_max, trunc=args.trunc, only=only)
    for r in results:
        print(
            json.dumps(
                {
                    "identity": r.identity,
                    "n": r.n,
                    "status": r.status,
                    "checked": r.checked,
                    "witness": r.witness,
                }
            )
        )
    failures = sum(1 for r in results if not r.ok)
    print(
        f"{len(results) - failures}/{len(results)} checks passed",
        file=sys.stderr,
    )
    return 1 if failures else 0


def _lattice_dot(u: PlainWord, family: str) -> str:
    n = len(u)
    des_u = descent_set(u)
    lines = [
        "graph fiber_lattice {",
        "  rankdir=BT;",
        "  node [shape=box];",
    ]
    for mask in range(1 << n):
        J = IndexSet(n, (i + 1 for i in range(n) if mask >> i & 1))
        w = build_u_J(u, J) if family == "neg" else delta_set(u, J ^ des_u)
        a, b = statistics.weight(w, family)
        lines.append(f'  s{mask} [label="{format_word(w)}\\nt^{a} q^{b}"];')
    for size in range(n + 1):
        ids = [f"s{mask}" for mask in range(1 << n) if bin(mask).count("1") == size]
        lines.append("  { rank=same; " + "; ".join(ids) + "; }")
    for mask in range(1 << n):
        for i in range(n):
            if not mask >> i & 1:
                lines.append(f"  s{mask} -- s{mask | 1 << i};")
    lines.append("}")
    return "\n".join(lines)


def _cmd_lattice(args: argparse.Namespace) -> int:
    u = _parse_fiber(args.fiber)
    if len(u) > MAX_LATTICE_N:
        raise SizeLimitError(
            f"lattice export is capped at n <= {MAX_LATTICE_N}, got {len(u)}"
        )
    print(_lattice_dot(u, args.family))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bstat",
        description="Descent statistics on signed permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="all statistics of one word")
    p.add_argument("word", nargs="+", help="letters of the word")
    p.add_argument("--json", action="store_true", help="emit a JSON record")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("map", help="apply the statistic-matching bijection")
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument(
        "--to-flag", dest="direction", action="store_const", const="to-flag",
        help="standardization fiber to magnitude fiber",
    )
    direction.add_argument(
        "--to-neg", dest="direction", action="store_const", const="to-neg",
        help="magnitude fiber to standardization fiber",
    )
    p.add_argument("word", nargs="+", help="letters of the word")
    p.add_argument("--json", action="store_true", help="emit a JSON record")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("dist", help="a joint distribution polynomial")
    p.add_argument(
        "--family", required=True, choices=["neg", "flag", "euler"],
        help="statistic family (euler = plain words)",
    )
    p.add_argument("-n", type=int, default=None, help="word length")
    p.add_argument(
        "--fiber", metavar="WORD", default=None,
        help="restrict to the fiber over this plain word (quote it)",
    )
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("-n", "--n-max", dest="n_max", type=int, default=6)
    p.add_argument("--trunc", type=int, default=None, help="series t-degree bound")
    p.add_argument(
        "--only", action="append", choices=list(GROUPS), default=None,
        help="restrict to one identity group (repeatable)",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lattice", help="fiber lattice as Graphviz DOT")
    p.add_argument("--family", required=True, choices=["neg", "flag"])
    p.add_argument("--fiber", metavar="WORD", required=True, help="plain word (quote it)")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=_cmd_lattice)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (
        WordError,
        AmbientMismatchError,
        IndexOutOfRangeError,
        SizeLimitError,
        MalformedFactorError,
        UsageError,
    ) as exc:
        print(f"bstat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
