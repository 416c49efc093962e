"""Command-line front end: ``kendall-seq {dist,rank,bench,verify}``.

Exit codes: 0 success, 1 usage or parse error, 2 the distance is undefined
for the inputs, 3 the two algorithms disagree (a bug).
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import bench, oracle, rank_metrics
from .errors import DistanceError
from .seqdist import tau_seq_hash, tau_seq_sort

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_DISAGREE = 3

_FIELD = re.compile(r"\S+")

_BENCH_MODES = {
    "chars": "codepoint",
    "ints": "int64",
    "floats": "float64",
    "hcc": "object_hcc",
    "lcc": "object_lcc",
}
_BENCH_MODES.update({m: m for m in bench.ELEMENT_MODES})


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_source(source: str, inline: bool) -> tuple[str, str]:
    if inline:
        return source, "<inline>"
    try:
        return Path(source).read_text(encoding="utf-8"), source
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {source}: {exc}") from None


def parse_input(text: str, mode: str, name: str = "<input>") -> list:
    """Split input text into elements.

    ``chars``: every code point is an element (one trailing newline dropped).
    ``ints``/``floats``/``tokens``: whitespace-separated fields.
    """
    if mode == "chars":
        if text.endswith("\r\n"):
            text = text[:-2]
        elif text.endswith("\n"):
            text = text[:-1]
        return list(text)
    convert = {"ints": int, "floats": float, "tokens": str}[mode]
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        for m in _FIELD.finditer(line):
            try:
                out.append(convert(m.group()))
            except ValueError:
                raise UsageError(f"{name}:{lineno}:{m.start() + 1}: cannot parse "
                                 f"{m.group()!r} as {mode[:-1]}") from None
    return out


def _load_pair(args, mode: str) -> tuple[list, list]:
    t1, n1 = _read_source(args.first, args.inline)
    t2, n2 = _read_source(args.second, args.inline)
    return parse_input(t1, mode, n1), parse_input(t2, mode, n2)


def cmd_dist(args) -> int:
    s1, s2 = _load_pair(args, args.mode)
    if args.alg == "sort":
        d = tau_seq_sort(s1, s2)
    elif args.alg == "hash":
        d = tau_seq_hash(s1, s2)
    else:
        d = tau_seq_sort(s1, s2)
        d2 = tau_seq_hash(s1, s2)
        if d != d2:
            print(f"internal error: sort algorithm gave {d}, hash algorithm gave {d2}",
                  file=sys.stderr)
            return EXIT_DISAGREE
    print(d)
    return EXIT_OK


def cmd_rank(args) -> int:
    r1, r2 = _load_pair(args, "ints")
    if args.metric == "tau":
        value = rank_metrics.kendall_tau_correlation(r1, r2)
    elif args.metric == "kendall":
        value = rank_metrics.kendall_tau_distance(r1, r2)
    elif args.metric == "kendall-norm":
        value = rank_metrics.kendall_tau_distance(r1, r2, normalized=True)
    else:
        if args.p is None:
            raise UsageError("metric kp requires --p")
        value = rank_metrics.kendall_distance_penalty(r1, r2, args.p)
    print(value)
    return EXIT_OK


def cmd_bench(args) -> int:
    mode = _BENCH_MODES[args.mode]
    algorithms = ("sort", "hash") if args.alg == "both" else (args.alg,)
    try:
        config = bench.BenchConfig(
            lengths=args.lengths,
            alphabet_sizes=args.alphabets,
            pairs_per_cell=args.pairs,
            element_mode=mode,
            object_size=args.object_size,
            seed=args.seed,
            algorithms=algorithms,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        records = bench.run_suite(config)
    except bench.BenchFailure as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    if args.out in (None, "-"):
        bench.write_csv(records, sys.stdout)
    else:
        try:
            bench.write_csv(records, args.out)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    cells = len(args.lengths) * len(args.alphabets)
    print(f"{cells} cells, {len(records)} records", file=sys.stderr)
    report = bench.ordering_report(records)
    if report:
        print(report, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n > oracle.MAX_BFS_LENGTH:
        raise UsageError(f"--max-n must be at most {oracle.MAX_BFS_LENGTH}")
    result = oracle.cross_check(args.max_n, args.alphabet, args.budget)
    for s1, s2, a, b, d in result.mismatches:
        print(f"MISMATCH {list(s1)} {list(s2)}: sort={a} hash={b} bfs={d}",
              file=sys.stderr)
    failed = len(result.mismatches)
    print(f"checked {result.checked} pairs: {result.checked - failed} passed, {failed} failed")
    return EXIT_OK if result.ok else EXIT_DISAGREE


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kendall-seq",
                     description="Kendall tau sequence distance and ranking metrics.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_inputs(p):
        p.add_argument("first", help="file path, or literal text with --inline")
        p.add_argument("second", help="file path, or literal text with --inline")
        p.add_argument("--inline", action="store_true",
                       help="treat FIRST and SECOND as literal input text")

    p = sub.add_parser("dist", help="adjacent-swap distance between two sequences")
    add_inputs(p)
    p.add_argument("--mode", choices=["chars", "ints", "floats", "tokens"], default="tokens")
    p.add_argument("--alg", choices=["sort", "hash", "both"], default="hash")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("rank", help="Kendall metrics between two rankings")
    add_inputs(p)
    p.add_argument("--metric", choices=["tau", "kendall", "kendall-norm", "kp"],
                   default="kendall")
    p.add_argument("--p", type=float, help="tie penalty for --metric kp")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("bench", help="time both algorithms on random pairs, write CSV")
    p.add_argument("--lengths", type=_non_negative, nargs="+",
                   default=[2 ** k for k in range(8, 13)])
    p.add_argument("--alphabets", type=_positive, nargs="+",
                   default=[4 ** k for k in range(0, 5)])
    p.add_argument("--pairs", type=_positive, default=10)
    p.add_argument("--mode", choices=sorted(_BENCH_MODES), default="ints")
    p.add_argument("--object-size", type=_positive, default=32)
    p.add_argument("--alg", choices=["sort", "hash", "both"], default="both")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV destination (default: standard output)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="check both algorithms against exhaustive search")
    p.add_argument("--max-n", type=_non_negative, default=6)
    p.add_argument("--alphabet", type=_positive, default=3)
    p.add_argument("--budget", type=_positive, help="stop after this many pairs")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"kendall-seq: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DistanceError as exc:
        print(f"kendall-seq: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
