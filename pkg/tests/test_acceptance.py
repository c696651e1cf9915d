"""Exit criteria, one test per criterion.

Published reference values below come from the original computational
study of the puzzle (distance statistics per board size and the 3x2
distance histogram).  Run with ``pytest tests/test_acceptance.py -rA``;
a PASS/FAIL line per criterion is printed in the terminal summary.
"""

import itertools
import math
import statistics
import time

import pytest

from picturecube.cayley import (bfs_analyze, build_distance_table, decode, local_bound, optimal_solve,
                                verify_counts)
from picturecube.commutator import build_recipe_table, solve_local
from picturecube.group import (alternating_table, commutator, cube_elements, cycles_to_images,
                               cyclic_table, perm_parity, s4_table)
from picturecube.puzzle import PuzzleSpec, apply_sequence, cube_spec, scramble_uniform_cube
from picturecube.solvability import order_of_H
from picturecube.subgroup import TwoPhaseSolver

# size: (diameter, average, median, local estimate, configurations) as printed
PUBLISHED = {
    (1, 1): (4, 2.17, 2, 9, 24),
    (2, 1): (7, 4.44, 5, 18, 576),
    (3, 1): (10, 6.59, 7, 27, 13824),
    (4, 1): (12, 8.59, 9, 36, 331776),
    (2, 2): (12, 7.82, 8, 35, 16588),
    (5, 1): (15, 10.69, 11, 45, 7962624),
    (6, 1): (17, 12.65, 13, 54, 191102976),
    (3, 2): (14, 10.54, 11, 52, 47775744),
}
# The printed 2x2 count drops a digit; 2^3 * 12^4 = 165888.
CORRECTED_COUNTS = {(2, 2): 165888}
HISTOGRAM_3x2 = (1, 10, 69, 456, 2846, 16208, 84428, 395566, 1622641, 5536264,
                 13587945, 17558644, 8100138, 843444, 27084)
SMALL = [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2)]
LARGE = [(5, 1), (3, 2)]

_stats_cache = {}


def stats_for(m, n):
    if (m, n) not in _stats_cache:
        _stats_cache[(m, n)] = bfs_analyze(cube_spec(m, n))
    return _stats_cache[(m, n)]


def compare_row(size):
    stats = stats_for(*size)
    diameter, average, median, local, count = PUBLISHED[size]
    expected_count = CORRECTED_COUNTS.get(size, count)
    got = (stats.diameter, round(float(stats.mean_distance), 2), stats.median_distance,
           local_bound(*size), stats.reachable_count)
    want = (diameter, average, median, local, expected_count)
    note = f" (printed count {count} flagged as a dropped digit)" if size in CORRECTED_COUNTS else ""
    return got == want, f"{size[0]}x{size[1]} got {got} want {want}{note}"


def test_c1_table1_small_tier(record):
    results = [compare_row(s) for s in SMALL]
    record("C1 Table 1 small tier", all(ok for ok, _ in results), "; ".join(d for _, d in results))
    assert stats_for(2, 2).reachable_count != PUBLISHED[(2, 2)][4]


def test_c2_table1_large_tier(record):
    s51, s32 = stats_for(5, 1), stats_for(3, 2)
    ok = (s51.diameter == 15 and s51.reachable_count == 7962624
          and s32.diameter == 14 and s32.reachable_count == 47775744
          and round(float(s32.mean_distance), 2) == 10.54 and s32.median_distance == 11)
    detail = "; ".join(compare_row(s)[1] for s in LARGE)
    record("C2 Table 1 large tier", ok and all(compare_row(s)[0] for s in LARGE), detail)


@pytest.mark.huge
def test_c2_optional_6x1(record):
    ok, detail = compare_row((6, 1))
    record("C2b Table 1 optional 6x1", ok, detail)


def test_c3_table2_histogram(record):
    stats = stats_for(3, 2)
    got = tuple(stats.count_at(d) for d in range(stats.diameter + 1))
    ok = got == HISTOGRAM_3x2 and sum(got) == 47775744 == stats.reachable_count
    record("C3 Table 2 histogram", ok, f"{len(got)} levels, sum {sum(got)}")


def test_c4_formula_matches_bfs(record):
    reports = [verify_counts(cube_spec(*s), stats_for(*s)) for s in SMALL + LARGE]
    record("C4 formula equals BFS count", all(r.match for r in reports), "; ".join(map(str, reports)))


def test_c5_commutator_sufficiency(record):
    g = s4_table()
    c = cube_elements()
    # Oracle: exhaustive products of at most two of the 8 commutator types.
    types = [commutator(g, x, y) for x in (c["u"], c["d"]) for y in (c["l"], c["r"])]
    types += [commutator(g, y, x) for x in (c["u"], c["d"]) for y in (c["l"], c["r"])]
    reachable = {g.identity} | set(types) | {g.mul[a][b] for a, b in itertools.product(types, repeat=2)}
    a4 = {x for x in range(24) if perm_parity(g.elements[x]) == 1}
    recipes = build_recipe_table()
    ok = (reachable == a4 and set(recipes) == a4
          and all(len(r) <= 8 and len(r) % 4 == 0 for r in recipes.values()))
    lengths = sorted(len(r) for r in recipes.values())
    record("C5 two commutators suffice on A4", ok, f"{len(recipes)} elements, word lengths {lengths}")


def test_c6_local_solver_contract(record):
    failures = 0
    details = []
    for m, n in [(2, 2), (3, 2), (3, 3)]:
        spec = cube_spec(m, n)
        bound = local_bound(m, n)
        longest = 0
        for seed in range(1000):
            cfg = scramble_uniform_cube(m, n, seed)
            word = solve_local(spec, cfg)
            longest = max(longest, len(word))
            if len(word) > bound or apply_sequence(spec, cfg, word) != spec.identity():
                failures += 1
        details.append(f"{m}x{n} max {longest} <= {bound}")
    assert [local_bound(2, 2), local_bound(3, 2), local_bound(3, 3)] == [35, 52, 77]
    record("C6 local solver on 3000 scrambles", failures == 0, f"{failures} failures; " + ", ".join(details))


def test_c7_optimality_cross_check(record, table_2x2):
    spec = cube_spec(2, 2)
    dist = table_2x2.dist
    codes = [int(x) for x in (dist != 255).nonzero()[0]]
    violations = 0
    longest_local = 0
    for code in codes:
        cfg = decode(spec, code)
        d = int(dist[code])
        local = len(solve_local(spec, cfg))
        best = len(optimal_solve(spec, cfg, table_2x2))
        longest_local = max(longest_local, local)
        violations += local < d or best != d
    ok = violations == 0 and len(codes) == 165888
    record("C7 optimal vs local on all of H (2x2)", ok,
           f"{len(codes)} states, {violations} violations, longest local word {longest_local}")


def test_c8_subgroup_solver_contract(record):
    spec = cube_spec(2, 2)
    solver = TwoPhaseSolver(spec, {1})
    sub_lengths, local_lengths, opt_lengths = [], [], []
    failures = 0
    table = build_distance_table(spec)
    for seed in range(1000):
        cfg = scramble_uniform_cube(2, 2, 50_000 + seed)
        word = solver.solve(cfg)
        failures += apply_sequence(spec, cfg, word) != spec.identity()
        sub_lengths.append(len(word))
        local_lengths.append(len(solve_local(spec, cfg)))
        opt_lengths.append(table.distance(cfg))
    sub, loc, opt = map(statistics.fmean, (sub_lengths, local_lengths, opt_lengths))
    ok = failures == 0 and 7.82 <= sub <= loc and opt <= sub
    record("C8 subgroup solver (K={1}, 2x2)", ok,
           f"{failures} failures; means optimal {opt:.3f} (published 7.82), subgroup {sub:.3f}, local {loc:.3f}")


def test_c9_generalizations(record):
    start = time.perf_counter()
    coin = bfs_analyze(PuzzleSpec(cyclic_table(2), (1,), (1,), 3, 3)).reachable_count
    a5 = alternating_table(5)
    a = a5.index(cycles_to_images("(12345)", 5))
    b = a5.index(cycles_to_images("(123)", 5))
    gens = (a, b, a5.inv[a], a5.inv[b])
    a5_spec = PuzzleSpec(a5, gens, gens, 2, 1)
    simple = bfs_analyze(a5_spec).reachable_count
    elapsed = time.perf_counter() - start
    ok = coin == 32 and simple == 3600 and elapsed < 1.0 and order_of_H(a5_spec) == 3600
    record("C9 coin puzzle and A5", ok, f"Z2 3x3 -> {coin}, A5 2x1 -> {simple}, {elapsed:.3f}s")


def test_c10_diameter_sandwich(record):
    rows = []
    ok = True
    for m, n in SMALL + LARGE:
        stats = stats_for(m, n)
        spec = cube_spec(m, n)
        lower = math.log(stats.reachable_count) / math.log(spec.move_count) - 1
        upper = local_bound(m, n)
        ok &= lower <= stats.diameter <= upper
        rows.append(f"{m}x{n} {lower:.2f}<={stats.diameter}<={upper}")
    record("C10 diameter sandwich", ok, ", ".join(rows))
