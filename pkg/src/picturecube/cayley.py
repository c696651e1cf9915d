"""Exhaustive breadth-first search over the Cayley graph of H.

States are packed into mixed-radix integers (base |G| per cell, row-major,
entry (1,1) least significant) and distances live in a dense byte array
indexed by that code.  Neighbours are computed from per-move rotation arrays
that map an element index to its index after the move.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import BudgetExceededError, CodeOverflowError, UnsolvableError, UnsupportedSpecError
from .puzzle import (ROW, Configuration, Move, PuzzleSpec, enumerate_moves, inverse_moves,
                     move_effect)
from .solvability import order_of_H

UNSEEN = 255
MAX_CODE = 2 ** 63
DEFAULT_MEMORY_BUDGET = 4 * 2 ** 30
CHUNK = 1 << 22
_MAGIC = b"PCDT"
_HEADER = struct.Struct("<4sIII")


def _check_size(spec: PuzzleSpec) -> int:
    size = spec.group.order ** (spec.m * spec.n)
    if size > MAX_CODE:
        raise CodeOverflowError(f"{spec.m}x{spec.n} board over a group of order "
                                f"{spec.group.order} does not fit in 63 bits")
    return size


def encode(spec: PuzzleSpec, config: Configuration) -> int:
    _check_size(spec)
    base = spec.group.order
    code = 0
    for row in reversed(config.entries):
        for x in reversed(row):
            code = code * base + x
    return code


def decode(spec: PuzzleSpec, code: int) -> Configuration:
    size = _check_size(spec)
    if not 0 <= code < size:
        raise ValueError(f"code {code} out of range")
    base = spec.group.order
    rows = []
    for _ in range(spec.m):
        row = []
        for _ in range(spec.n):
            code, x = divmod(code, base)
            row.append(x)
        rows.append(tuple(row))
    return Configuration(tuple(rows))


@dataclass(frozen=True)
class Generator:
    """A move (or short word) acting on one line by a fixed element."""

    cells: tuple[int, ...]  # flat row-major cell positions
    element: int
    word: tuple[Move, ...]


def line_cells(spec: PuzzleSpec, axis: str, index: int) -> tuple[int, ...]:
    if axis == ROW:
        return tuple((index - 1) * spec.n + j for j in range(spec.n))
    return tuple(i * spec.n + index - 1 for i in range(spec.m))


def move_generators(spec: PuzzleSpec, moves: Sequence[Move] | None = None) -> list[Generator]:
    if moves is None:
        moves = enumerate_moves(spec)
    return [Generator(line_cells(spec, mv.axis, mv.index), move_effect(spec, mv), (mv,))
            for mv in moves]


def move_table(spec: PuzzleSpec, element: int) -> np.ndarray:
    """Rotation array: ``table[x]`` is the index of ``x * element``."""
    return spec.group.mul_array[:, element].copy()


class CodeStepper:
    """Scalar neighbour computation on state codes, for solvers."""

    def __init__(self, spec: PuzzleSpec, generators: Sequence[Generator]):
        base = spec.group.order
        self.base = base
        self.generators = list(generators)
        self._steps = []
        for gen in self.generators:
            col = [spec.group.mul[x][gen.element] - x for x in range(base)]
            self._steps.append([(base ** c, [d * base ** c for d in col]) for c in gen.cells])

    def step(self, code: int, k: int) -> int:
        base = self.base
        out = code
        for w, delta in self._steps[k]:
            out += delta[(code // w) % base]
        return out

    def neighbors(self, code: int):
        for k in range(len(self._steps)):
            yield k, self.step(code, k)


def bfs_distances(spec: PuzzleSpec, generators: Sequence[Generator],
                  memory_budget: int = DEFAULT_MEMORY_BUDGET,
                  max_states: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Level-synchronous BFS from the solved board.

    Returns the byte distance array (``UNSEEN`` for unreached codes) and the
    per-level counts.  Each level is found by scanning the array, so no
    explicit queue is kept.
    """
    size = _check_size(spec)
    if size > memory_budget:
        raise BudgetExceededError(f"distance array needs {size} bytes, budget is {memory_budget}")
    base = spec.group.order
    cells = spec.m * spec.n
    weights = [base ** c for c in range(cells)]
    mul = spec.group.mul_array
    ident = np.arange(base, dtype=np.int64)
    deltas = []
    for gen in generators:
        col = mul[:, gen.element] - ident
        deltas.append([(c, col * weights[c]) for c in gen.cells])
    used = sorted({c for gen in generators for c in gen.cells})

    dist = np.full(size, UNSEEN, dtype=np.uint8)
    start = encode(spec, spec.identity())
    dist[start] = 0
    counts = [1]
    total = 1
    level = 0
    frontier = np.array([start], dtype=np.int64)
    while True:
        if level + 1 >= UNSEEN:
            raise BudgetExceededError("distance exceeds byte range")
        for lo in range(0, frontier.size, CHUNK):
            codes = frontier[lo:lo + CHUNK]
            digits = {c: (codes // weights[c]) % base for c in used}
            for parts in deltas:
                nb = codes.copy()
                for c, d in parts:
                    nb += d[digits[c]]
                fresh = nb[dist[nb] == UNSEEN]
                dist[fresh] = level + 1
            del digits
        level += 1
        frontier = np.flatnonzero(dist == level)
        if frontier.size == 0:
            break
        counts.append(int(frontier.size))
        total += frontier.size
        if max_states is not None and total > max_states:
            raise BudgetExceededError(f"more than {max_states} reachable states")
    return dist, counts


@dataclass(frozen=True)
class CayleyStats:
    reachable_count: int
    histogram: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> CayleyStats:
        return cls(int(sum(counts)), tuple((d, int(c)) for d, c in enumerate(counts) if c))

    @property
    def diameter(self) -> int:
        return max(d for d, _ in self.histogram)

    @property
    def mean_distance(self) -> Fraction:
        return Fraction(sum(d * c for d, c in self.histogram), self.reachable_count)

    @property
    def median_distance(self) -> int:
        """Smallest d with at least half of the states at distance <= d."""
        acc = 0
        for d, c in self.histogram:
            acc += c
            if 2 * acc >= self.reachable_count:
                return d
        raise AssertionError("empty histogram")

    def count_at(self, d: int) -> int:
        return dict(self.histogram).get(d, 0)

    def histogram_text(self) -> str:
        return "".join(f"{d} {c}\n" for d, c in self.histogram)


def _histogram(dist: np.ndarray) -> list[int]:
    counts = np.zeros(256, dtype=np.int64)
    for lo in range(0, dist.size, CHUNK * 8):
        counts += np.bincount(dist[lo:lo + CHUNK * 8], minlength=256)
    counts = counts[:UNSEEN]
    top = int(np.flatnonzero(counts).max())
    return [int(x) for x in counts[:top + 1]]


class DistanceTable:
    """Distances to the solved board for every state of a puzzle."""

    def __init__(self, spec: PuzzleSpec, dist: np.ndarray, counts: Sequence[int] | None = None):
        self.spec = spec
        self.dist = dist
        self._counts = list(counts) if counts is not None else _histogram(dist)

    def stats(self) -> CayleyStats:
        return CayleyStats.from_counts(self._counts)

    def distance_of_code(self, code: int) -> int | None:
        d = int(self.dist[code])
        return None if d == UNSEEN else d

    def distance(self, config: Configuration) -> int | None:
        return self.distance_of_code(encode(self.spec, config))

    def __contains__(self, config: Configuration) -> bool:
        return self.distance(config) is not None

    def save(self, path: str | Path) -> None:
        with open(path, "wb") as fh:
            fh.write(_HEADER.pack(_MAGIC, self.spec.m, self.spec.n, self.spec.group.order))
            self.dist.tofile(fh)

    @classmethod
    def load(cls, spec: PuzzleSpec, path: str | Path) -> DistanceTable:
        with open(path, "rb") as fh:
            magic, m, n, order = _HEADER.unpack(fh.read(_HEADER.size))
            if magic != _MAGIC:
                raise ValueError(f"{path}: not a distance table")
            if (m, n, order) != (spec.m, spec.n, spec.group.order):
                raise ValueError(f"{path}: table is for {m}x{n} over order {order}")
            dist = np.fromfile(fh, dtype=np.uint8)
        if dist.size != _check_size(spec):
            raise ValueError(f"{path}: truncated table")
        return cls(spec, dist)


def build_distance_table(spec: PuzzleSpec, memory_budget: int = DEFAULT_MEMORY_BUDGET,
                         moves: Sequence[Move] | None = None) -> DistanceTable:
    dist, counts = bfs_distances(spec, move_generators(spec, moves), memory_budget)
    return DistanceTable(spec, dist, counts)


def bfs_analyze(spec: PuzzleSpec, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> CayleyStats:
    return build_distance_table(spec, memory_budget).stats()


def _require_inverse_closed(spec: PuzzleSpec, moves: Sequence[Move]) -> None:
    effects = {(mv.axis, move_effect(spec, mv)) for mv in moves}
    for mv in moves:
        inv = inverse_moves(spec, mv)
        if len(inv) != 1 or (inv[0].axis, move_effect(spec, inv[0])) not in effects:
            raise UnsupportedSpecError("greedy descent needs an inverse-closed move set")


def descend(table: DistanceTable, stepper: CodeStepper, code: int) -> list[Move]:
    """Follow strictly decreasing distances down to the solved board.

    At each step the first generator (in list order) that lowers the distance
    is taken, so the word has exactly the table distance in generator steps.
    """
    d = table.distance_of_code(code)
    if d is None:
        raise UnsolvableError("state is not reachable")
    dist = table.dist
    word: list[Move] = []
    while d > 0:
        for k, nb in stepper.neighbors(code):
            if dist[nb] == d - 1:
                word += stepper.generators[k].word
                code, d = nb, d - 1
                break
        else:
            raise AssertionError("distance table is inconsistent")
    return word


def optimal_solve(spec: PuzzleSpec, config: Configuration, table: DistanceTable) -> list[Move]:
    """A shortest solving word, by greedy descent on a full distance table."""
    if table.spec.shape != spec.shape or table.spec.group is not spec.group:
        raise ValueError("distance table belongs to a different puzzle")
    moves = enumerate_moves(spec)
    _require_inverse_closed(spec, moves)
    stepper = _stepper_cache.get(id(table))
    if stepper is None:
        stepper = CodeStepper(spec, move_generators(spec, moves))
        _stepper_cache.clear()
        _stepper_cache[id(table)] = stepper
    return descend(table, stepper, encode(spec, config))


_stepper_cache: dict[int, CodeStepper] = {}


@dataclass(frozen=True)
class CountReport:
    shape: tuple[int, int]
    bfs_count: int
    formula_count: int

    @property
    def match(self) -> bool:
        return self.bfs_count == self.formula_count

    def __str__(self) -> str:
        m, n = self.shape
        verdict = "match" if self.match else "MISMATCH"
        return f"{m}x{n}: BFS {self.bfs_count}, formula {self.formula_count} -> {verdict}"


def verify_counts(spec: PuzzleSpec, stats: CayleyStats | None = None,
                  memory_budget: int = DEFAULT_MEMORY_BUDGET) -> CountReport:
    if stats is None:
        stats = bfs_analyze(spec, memory_budget)
    return CountReport(spec.shape, stats.reachable_count, order_of_H(spec))


def local_bound(m: int, n: int) -> int:
    """Worst-case length of the commutator method on an m x n cube board."""
    return 8 * m * n + m + n - 1


def diameter_lower_bound(count: int, move_count: int) -> float:
    """Counting bound: a regular graph of this degree needs this many levels."""
    return math.log(count) / math.log(move_count) - 1


def format_table_row(spec: PuzzleSpec, stats: CayleyStats) -> str:
    mean = stats.mean_distance
    return (f"{spec.m}x{spec.n}  diameter {stats.diameter}  average {float(mean):.2f}  "
            f"median {stats.median_distance}  local {local_bound(spec.m, spec.n)}  "
            f"configurations {stats.reachable_count}")
