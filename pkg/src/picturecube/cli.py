"""Command-line front end.

Exit codes: 0 success, 1 unsolvable input or failed verification, 2 usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cayley
from .commutator import solve_local
from .errors import ConfigFormatError, PuzzleError, UnsolvableError
from .puzzle import (HALF, QUARTER, apply_sequence, cube_spec, format_config, format_word,
                     parse_config, scramble_uniform_cube, scramble_walk, word_length)
from .solvability import is_solvable, order_of_H, parity_matrix
from .subgroup import TwoPhaseSolver, bench_k


def _size(text: str) -> tuple[int, int]:
    try:
        m, n = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must look like 3x2, got {text!r}") from None
    if m < 1 or n < 1:
        raise argparse.ArgumentTypeError("size must be positive")
    return m, n


def _rows(text: str) -> frozenset[int]:
    if text.strip() in ("", "-"):
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad row list {text!r}") from None


def _read_config(path: str, metric: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    header = text.split("\n", 1)[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header) or "0" in header:
        raise ConfigFormatError(f"bad header line {text.split(chr(10), 1)[0]!r}")
    spec = cube_spec(int(header[0]), int(header[1]), metric)
    return spec, parse_config(spec, text)


def cmd_check(args) -> int:
    spec, config = _read_config(args.file, QUARTER)
    ok = is_solvable(spec, config)
    print("solvable" if ok else "unsolvable")
    print("parity matrix:")
    print(parity_matrix(config, spec))
    if not ok:
        print("parity signs are not a product of row and column signs")
    return 0 if ok else 1


def cmd_solve(args) -> int:
    spec, config = _read_config(args.file, args.metric)
    try:
        if args.solver == "local":
            word = solve_local(spec, config)
            bound = f"bound {cayley.local_bound(spec.m, spec.n)}"
        elif args.solver == "subgroup":
            word = TwoPhaseSolver(spec, args.k).solve(config)
            bound = f"restricted rows {sorted(args.k) or '-'}"
        else:
            if args.table:
                table = cayley.DistanceTable.load(spec, args.table)
            else:
                table = cayley.build_distance_table(spec, args.budget)
            word = cayley.optimal_solve(spec, config, table)
            bound = f"optimal, diameter {table.stats().diameter}"
    except UnsolvableError as exc:
        print(f"unsolvable: {exc}", file=sys.stderr)
        return 1
    assert apply_sequence(spec, config, word) == spec.identity()
    print(format_word(spec, word))
    print(f"length {word_length(word, spec.metric)} ({spec.metric}-turn metric), {bound}")
    return 0


def cmd_analyze(args) -> int:
    m, n = args.size
    spec = cube_spec(m, n, args.metric)
    table = cayley.build_distance_table(spec, args.budget)
    stats = table.stats()
    if args.machine:
        sys.stdout.write(stats.histogram_text())
    else:
        print(cayley.format_table_row(spec, stats))
        if args.histogram:
            print("distance count")
            sys.stdout.write(stats.histogram_text())
    if args.save_table:
        table.save(args.save_table)
    return 0


def cmd_scramble(args) -> int:
    m, n = args.size
    spec = cube_spec(m, n)
    if args.mode == "uniform":
        config = scramble_uniform_cube(m, n, args.seed)
    else:
        config, _ = scramble_walk(spec, args.seed, args.length)
    text = format_config(spec, config)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench_k(args) -> int:
    m, n = args.size
    spec = cube_spec(m, n, args.metric)
    candidates = args.k or [frozenset(range(1, k + 1)) for k in range(m + 1)]
    print("K  |H1|  mean length")
    for row in bench_k(spec, candidates, args.samples, args.seed):
        label = ",".join(map(str, row.restricted_rows)) or "-"
        print(f"{label}  {row.subgroup_order}  {row.mean_length:.3f}")
    return 0


def cmd_verify(args) -> int:
    failed = False
    for m, n in args.size or [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2)]:
        spec = cube_spec(m, n)
        stats = cayley.bfs_analyze(spec, args.budget)
        report = cayley.verify_counts(spec, stats)
        lower = cayley.diameter_lower_bound(stats.reachable_count, spec.move_count)
        upper = cayley.local_bound(m, n)
        sandwich = lower <= stats.diameter <= upper
        print(report)
        print(f"  diameter {stats.diameter} within [{lower:.2f}, {upper}]: {'ok' if sandwich else 'FAIL'}")
        failed |= not (report.match and sandwich and stats.reachable_count == order_of_H(spec))
    print("all checks passed" if not failed else "verification FAILED")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="picturecube", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    budget = dict(type=int, default=cayley.DEFAULT_MEMORY_BUDGET, help="distance-array byte budget")

    p = sub.add_parser("check", help="decide whether a configuration file is solvable")
    p.add_argument("file", help="configuration file, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="print a solving move word")
    p.add_argument("file")
    p.add_argument("--solver", choices=("local", "subgroup", "optimal"), default="local")
    p.add_argument("--k", type=_rows, default=frozenset({1}), help="restricted rows, e.g. 1,2")
    p.add_argument("--metric", choices=(QUARTER, HALF), default=QUARTER)
    p.add_argument("--table", help="persisted distance table for --solver optimal")
    p.add_argument("--budget", **budget)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("analyze", help="exhaustive BFS statistics")
    p.add_argument("--size", type=_size, required=True)
    p.add_argument("--metric", choices=(QUARTER, HALF), default=QUARTER)
    p.add_argument("--histogram", action="store_true", help="also list states per distance")
    p.add_argument("--machine", action="store_true", help="only 'distance count' lines")
    p.add_argument("--save-table", help="write the distance table to this path")
    p.add_argument("--budget", **budget)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scramble", help="write a random solvable configuration")
    p.add_argument("--size", type=_size, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=("uniform", "walk"), default="uniform")
    p.add_argument("--length", type=int, default=30, help="walk length")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_scramble)

    p = sub.add_parser("bench-k", help="mean two-phase lengths for candidate K")
    p.add_argument("--size", type=_size, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--k", type=_rows, action="append", help="candidate K (repeatable)")
    p.add_argument("--metric", choices=(QUARTER, HALF), default=QUARTER)
    p.set_defaults(func=cmd_bench_k)

    p = sub.add_parser("verify", help="compare BFS counts with the closed form")
    p.add_argument("--size", type=_size, action="append")
    p.add_argument("--budget", **budget)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PuzzleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
