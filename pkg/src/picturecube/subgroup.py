"""Two-phase solving through a restricted-move subgroup H1.

H1 is generated by all moves except that rows in K may only be turned by a
half turn (``u_i^2 = d_i^2``).  Phase 1 is a breadth-first search over all
legal moves for the nearest state inside H1; phase 2 is a shortest path to
the solved board using only H1's generators.
"""

from __future__ import annotations

import functools
import statistics
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cayley import (CodeStepper, DistanceTable, Generator, bfs_distances, descend, encode,
                     line_cells, move_generators)
from .errors import BudgetExceededError, UnsolvableError, UnsupportedSpecError
from .puzzle import (HALF, ROW, Configuration, Move, PuzzleSpec, enumerate_moves,
                     scramble_uniform_cube, word_length)
from .solvability import is_solvable

DEFAULT_STATE_CAP = 2 ** 26
DEFAULT_MEMORY_BUDGET = 2 ** 30


@dataclass(frozen=True)
class SubgroupSpec:
    restricted_rows: frozenset[int]
    phase1_moves: tuple[Move, ...]
    phase2_generators: tuple[Generator, ...]


@dataclass(frozen=True, eq=False)
class MembershipOracle:
    """Accepts exactly the states of H1, from an explicit enumeration."""

    table: DistanceTable
    mode: str = "enumerated-set"

    def __contains__(self, config: Configuration) -> bool:
        return config in self.table

    def accepts_code(self, code: int) -> bool:
        return self.table.distance_of_code(code) is not None

    @property
    def size(self) -> int:
        return self.table.stats().reachable_count


def _phase2_generators(spec: PuzzleSpec, K: frozenset[int]) -> list[Generator]:
    g = spec.group
    gens = []
    for mv in enumerate_moves(spec):
        if mv.axis == ROW and mv.index in K:
            continue
        gens += move_generators(spec, [mv])
    u = spec.row_elements[0]
    square = g.power(u, 2)
    for i in sorted(K):
        word = (Move(ROW, i, u, 2),) if spec.metric == HALF else (Move(ROW, i, u),) * 2
        gens.append(Generator(line_cells(spec, ROW, i), square, word))
    return gens


def build_subgroup(spec: PuzzleSpec, K: Iterable[int], state_cap: int = DEFAULT_STATE_CAP,
                   memory_budget: int = DEFAULT_MEMORY_BUDGET) -> tuple[SubgroupSpec, MembershipOracle]:
    """Enumerate H1 by BFS closure of its generators from the solved board."""
    if not spec.is_cube:
        raise UnsupportedSpecError("row-restricted subgroups are defined for the cube puzzle")
    K = frozenset(K)
    if not K <= set(range(1, spec.m + 1)):
        raise ValueError(f"restricted rows {sorted(K)} not within 1..{spec.m}")
    gens = _phase2_generators(spec, K)
    dist, counts = bfs_distances(spec, gens, memory_budget, max_states=state_cap)
    sub = SubgroupSpec(K, tuple(enumerate_moves(spec)), tuple(gens))
    return sub, MembershipOracle(DistanceTable(spec, dist, counts))


class TwoPhaseSolver:
    def __init__(self, spec: PuzzleSpec, K: Iterable[int], state_cap: int = DEFAULT_STATE_CAP,
                 memory_budget: int = DEFAULT_MEMORY_BUDGET, max_phase1_states: int = 10 ** 6):
        self.spec = spec
        self.subgroup, self.oracle = build_subgroup(spec, K, state_cap, memory_budget)
        self.max_phase1_states = max_phase1_states
        self._all = CodeStepper(spec, move_generators(spec, self.subgroup.phase1_moves))
        self._within = CodeStepper(spec, self.subgroup.phase2_generators)

    def phase1(self, code: int) -> tuple[list[Move], int]:
        """Shortest all-moves word from ``code`` into H1 (first in move order)."""
        if self.oracle.accepts_code(code):
            return [], code
        parent = {code: None}
        queue = deque([code])
        while queue:
            x = queue.popleft()
            for k, y in self._all.neighbors(x):
                if y in parent:
                    continue
                parent[y] = (x, k)
                if self.oracle.accepts_code(y):
                    word = []
                    z = y
                    while parent[z] is not None:
                        z, k = parent[z]
                        word += reversed(self._all.generators[k].word)
                    return word[::-1], y
                if len(parent) > self.max_phase1_states:
                    raise BudgetExceededError("phase-1 frontier exceeded its cap")
                queue.append(y)
        raise UnsolvableError("no legal word leads into H1")

    def solve(self, config: Configuration) -> list[Move]:
        if not is_solvable(self.spec, config):
            raise UnsolvableError("configuration is not in H")
        first, code = self.phase1(encode(self.spec, config))
        return first + descend(self.oracle.table, self._within, code)


@functools.lru_cache(maxsize=8)
def _solver(spec: PuzzleSpec, K: frozenset[int]) -> TwoPhaseSolver:
    return TwoPhaseSolver(spec, K)


def solve_two_phase(spec: PuzzleSpec, config: Configuration, K: Iterable[int]) -> list[Move]:
    return _solver(spec, frozenset(K)).solve(config)


@dataclass(frozen=True)
class KBenchmark:
    restricted_rows: tuple[int, ...]
    subgroup_order: int
    mean_length: float


def bench_k(spec: PuzzleSpec, candidates: Sequence[Iterable[int]], samples: int, seed: int) -> list[KBenchmark]:
    """Mean two-phase solution length per candidate K over seeded uniform scrambles."""
    boards = [scramble_uniform_cube(spec.m, spec.n, seed + k) for k in range(samples)]
    out = []
    for K in candidates:
        solver = TwoPhaseSolver(spec, K)
        lengths = [word_length(solver.solve(b), spec.metric) for b in boards]
        out.append(KBenchmark(tuple(sorted(solver.subgroup.restricted_rows)), solver.oracle.size,
                              statistics.fmean(lengths)))
    return out

