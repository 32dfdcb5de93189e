"""Command-line interface: ``rlbwt-merge {build,merge,verify,stats,measure}``.

Exit status is 0 on success, 1 when verification finds a mismatch and 2 for
usage or format errors.
"""

from __future__ import annotations

import argparse
import csv
import sys

from .combine import merge_rlbwts
from .corpus import (CSV_FIELDS, KINDS, GeneratorSpec, build_rlbwt, measure_merge,
                     measure_spec, rows_to_csv)
from .errors import CorrectnessError, RlbwtError
from .oracle import build_ebwt
from .rlbwt import Rlbwt, read_rlbwt, write_rlbwt
from .text import TextCollection, read_text, symbol_str

DEFAULT_LIMIT = 100_000

STATS_FIELDS = ["step", "n", "sigma", "r_out", "blocks", "chars_extracted", "comparisons"]


class UsageError(Exception):
    pass


def _read_texts(paths, limit):
    colls = [read_text(p) for p in paths]
    total = sum(c.total_length for c in colls)
    if limit and total > limit:
        raise UsageError(f"inputs hold {total} symbols, over the limit of {limit} (see --limit)")
    return colls


def cmd_build(args) -> int:
    coll = read_text(args.input)
    if args.limit and coll.total_length > args.limit:
        raise UsageError(f"input holds {coll.total_length} symbols, over the limit of {args.limit}")
    write_rlbwt(build_rlbwt(coll), args.output)
    return 0


def cmd_merge(args) -> int:
    if len(args.inputs) < 2:
        raise UsageError("merge needs at least two input files")
    bwts = [read_rlbwt(p) for p in args.inputs]
    acc = bwts[0]
    rows = []
    for step, b in enumerate(bwts[1:], 1):
        acc, stats, _ = merge_rlbwts(acc, b)
        rows.append([step, stats.n, stats.sigma, acc.n_runs, stats.blocks_emitted,
                     stats.chars_extracted, stats.comparisons])
    write_rlbwt(acc, args.output)
    if args.stats:
        w = csv.writer(sys.stderr, lineterminator="\n")
        w.writerow(STATS_FIELDS)
        w.writerows(rows)
    return 0


def _corrupt(bwt: Rlbwt) -> Rlbwt:
    symbols = bwt.decompress()
    symbols[0] = next(c for c in bwt.alphabet if c != symbols[0])
    return Rlbwt.from_symbols(symbols, bwt.alphabet)


def cmd_verify(args) -> int:
    a, b = _read_texts([args.text1, args.text2], args.limit)
    a, b = a.with_label(1), b.with_label(2)
    fast, _, _ = merge_rlbwts(build_rlbwt(a), build_rlbwt(b))
    if args.debug_corrupt:
        fast = _corrupt(fast)
    got = fast.decompress()
    want = build_ebwt(a, b).symbols
    if got == want:
        print(f"OK: {len(got)} symbols, {fast.n_runs} runs")
        return 0
    pos = next((i for i, (x, y) in enumerate(zip(got, want)) if x != y), min(len(got), len(want)))
    print(f"MISMATCH at position {pos}: fast={symbol_str(got[pos]) if pos < len(got) else 'EOF'} "
          f"oracle={symbol_str(want[pos]) if pos < len(want) else 'EOF'}")
    return 1


def cmd_stats(args) -> int:
    colls = _read_texts(args.texts, args.limit)
    if len(colls) == 1 and not args.strings:
        bwt = build_rlbwt(colls[0])
        print(",".join(CSV_FIELDS))
        print(f"single,{bwt.total_length},{bwt.sigma},{bwt.n_runs},0,{bwt.n_runs},0,1,0,0")
        return 0
    if len(colls) == 1:
        raise UsageError("--strings needs at least two text files")
    rows = []
    acc = colls[0]
    for step, nxt in enumerate(colls[1:], 1):
        rows.append(measure_merge(acc, nxt, kind=f"fold{step}", whole_strings=args.strings))
        acc = TextCollection(acc.strings + nxt.strings)
    sys.stdout.write(rows_to_csv(rows))
    return 0


def cmd_measure(args) -> int:
    rows = []
    for k in range(args.instances):
        spec = GeneratorSpec(kind=args.kind, base_length=args.base_length, copies=args.copies,
                             mutation_rate=args.mutation_rate, alphabet=args.alphabet,
                             seed=args.seed + 2 * k)
        rows.append(measure_spec(spec))
    sys.stdout.write(rows_to_csv(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rlbwt-merge",
        description="Merge run-length compressed BWTs of string collections adaptively.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_limit(p):
        p.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                       help=f"maximum total symbols for oracle-backed commands "
                            f"(default {DEFAULT_LIMIT}; 0 disables)")

    p = sub.add_parser("build", help="build the RLBWT file of a text file's eBWT")
    p.add_argument("input")
    p.add_argument("output")
    add_limit(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("merge", help="merge two or more RLBWT files (left fold)")
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--stats", action="store_true", help="write merge statistics as CSV to stderr")
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("verify", help="check the fast merge of two text files against the oracle")
    p.add_argument("text1")
    p.add_argument("text2")
    add_limit(p)
    p.add_argument("--debug-corrupt", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="report L, runs and block counts for text files")
    p.add_argument("texts", nargs="+")
    p.add_argument("--strings", action="store_true",
                   help="merge whole strings as sorted word sets instead of eBWT contexts")
    add_limit(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("measure", help="measure merges of generated collections (CSV)")
    p.add_argument("--kind", choices=KINDS, default="mutated-copies")
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p.add_argument("--copies", type=int, default=4, help="strings per set (default 4)")
    p.add_argument("--mutation-rate", type=float, default=0.05, help="per-symbol substitution rate (default 0.05)")
    p.add_argument("--base-length", type=int, default=32, help="base string length (default 32)")
    p.add_argument("--alphabet", default="ACGT", help="symbols to draw from (default ACGT)")
    p.add_argument("--instances", type=int, default=1, help="number of instances (default 1)")
    p.set_defaults(func=cmd_measure)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CorrectnessError as exc:
        print(f"rlbwt-merge: verification failed: {exc}", file=sys.stderr)
        return 1
    except (UsageError, RlbwtError, OSError) as exc:
        print(f"rlbwt-merge: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
