"""Boards, moves and move words for the generalized picture cube puzzle.

A board is an ``m x n`` matrix over a finite group G.  Row moves multiply
every entry of one row on the right by an element of R; column moves do the
same for a column with an element of C.  The solved board is the identity
matrix.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConfigFormatError
from .group import GroupTable, cube_elements, perm_parity, s4_table

QUARTER = "quarter"
HALF = "half"
ROW = "row"
COL = "col"

_DEFAULT_ROW_NAMES = "abcdefgh"
_DEFAULT_COL_NAMES = "stvwxyz"


@dataclass(frozen=True, eq=False)
class PuzzleSpec:
    group: GroupTable
    row_elements: tuple[int, ...]
    col_elements: tuple[int, ...]
    m: int
    n: int
    metric: str = QUARTER
    row_names: tuple[str, ...] | None = None
    col_names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("board dimensions must be positive")
        if self.metric not in (QUARTER, HALF):
            raise ValueError(f"unknown metric {self.metric!r}")
        for x in self.row_elements + self.col_elements:
            if not 0 <= x < self.group.order:
                raise ValueError(f"element index {x} not in group of order {self.group.order}")
        if self.row_names is None:
            object.__setattr__(self, "row_names", tuple(_DEFAULT_ROW_NAMES[: len(self.row_elements)]))
        if self.col_names is None:
            object.__setattr__(self, "col_names", tuple(_DEFAULT_COL_NAMES[: len(self.col_elements)]))

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    @property
    def move_count(self) -> int:
        return len(enumerate_moves(self))

    @property
    def is_cube(self) -> bool:
        if self.group is not s4_table():
            return False
        c = cube_elements()
        return set(self.row_elements) == {c["u"], c["d"]} and set(self.col_elements) == {c["l"], c["r"]}

    def resized(self, m: int, n: int) -> PuzzleSpec:
        return PuzzleSpec(self.group, self.row_elements, self.col_elements, m, n,
                          self.metric, self.row_names, self.col_names)

    def with_metric(self, metric: str) -> PuzzleSpec:
        return PuzzleSpec(self.group, self.row_elements, self.col_elements, self.m, self.n,
                          metric, self.row_names, self.col_names)

    def identity(self) -> Configuration:
        e = self.group.identity
        return Configuration(tuple((e,) * self.n for _ in range(self.m)))

    def name_of(self, axis: str, element: int) -> str:
        elements, names = ((self.row_elements, self.row_names) if axis == ROW
                           else (self.col_elements, self.col_names))
        return names[elements.index(element)]


def cube_spec(m: int, n: int, metric: str = QUARTER) -> PuzzleSpec:
    """The picture cube puzzle: G = S4, R = {u, d}, C = {l, r}."""
    c = cube_elements()
    return PuzzleSpec(s4_table(), (c["u"], c["d"]), (c["l"], c["r"]), m, n, metric,
                      ("U", "D"), ("L", "R"))


@dataclass(frozen=True)
class Configuration:
    """An ``m x n`` matrix of group element indices."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        return self.entries[i][j]

    def cells(self) -> Iterable[tuple[int, int, int]]:
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                yield i, j, x

    def with_entry(self, i: int, j: int, value: int) -> Configuration:
        rows = [list(r) for r in self.entries]
        rows[i][j] = value
        return Configuration(tuple(map(tuple, rows)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Configuration:
        return cls(tuple(tuple(int(x) for x in r) for r in rows))


@dataclass(frozen=True)
class Move:
    """One line rotation.  ``index`` is 1-based."""

    axis: str
    index: int
    element: int
    power: int = 1

    def token(self, spec: PuzzleSpec) -> str:
        return spec.name_of(self.axis, self.element) + str(self.index) + ("²" if self.power == 2 else "")


MoveSequence = list  # a list of Move


def validate_move(spec: PuzzleSpec, mv: Move) -> None:
    limit, allowed = (spec.m, spec.row_elements) if mv.axis == ROW else (spec.n, spec.col_elements)
    if mv.axis not in (ROW, COL):
        raise ValueError(f"bad axis {mv.axis!r}")
    if not 1 <= mv.index <= limit:
        raise ValueError(f"line index {mv.index} out of range for {mv.axis}")
    if mv.element not in allowed:
        raise ValueError(f"element {mv.element} is not a legal {mv.axis} move")
    if mv.power not in (1, 2) or (mv.power == 2 and spec.metric != HALF):
        raise ValueError("power-2 moves need the half-turn metric")


def move_effect(spec: PuzzleSpec, mv: Move) -> int:
    """The group element a move multiplies each affected entry by."""
    return spec.group.power(mv.element, mv.power)


def apply_move(spec: PuzzleSpec, config: Configuration, mv: Move) -> Configuration:
    mul = spec.group.mul
    g = move_effect(spec, mv)
    rows = config.entries
    if mv.axis == ROW:
        i = mv.index - 1
        new_row = tuple(mul[x][g] for x in rows[i])
        return Configuration(rows[:i] + (new_row,) + rows[i + 1:])
    j = mv.index - 1
    return Configuration(tuple(r[:j] + (mul[r[j]][g],) + r[j + 1:] for r in rows))


def apply_sequence(spec: PuzzleSpec, config: Configuration, seq: Iterable[Move]) -> Configuration:
    for mv in seq:
        config = apply_move(spec, config, mv)
    return config


def _line_moves(spec: PuzzleSpec, axis: str, index: int) -> list[Move]:
    elements = spec.row_elements if axis == ROW else spec.col_elements
    g = spec.group
    moves = [Move(axis, index, x) for x in elements]
    if spec.metric == HALF:
        effects = set(elements)
        for x in elements:
            sq = g.power(x, 2)
            if sq != g.identity and sq not in effects:
                effects.add(sq)
                moves.append(Move(axis, index, x, 2))
    return moves


def enumerate_moves(spec: PuzzleSpec) -> list[Move]:
    """All legal moves: rows first (by index, then R order), then columns.

    In the half-turn metric each line also gets one double move per distinct
    square, e.g. ``U1²`` (``= D1²``) for the cube.
    """
    moves = []
    for i in range(1, spec.m + 1):
        moves += _line_moves(spec, ROW, i)
    for j in range(1, spec.n + 1):
        moves += _line_moves(spec, COL, j)
    return moves


def inverse_moves(spec: PuzzleSpec, mv: Move) -> list[Move]:
    """A shortest legal word undoing ``mv`` on its line."""
    g = spec.group
    target = g.inv[move_effect(spec, mv)]
    if target == g.identity:
        return []
    candidates = _line_moves(spec, mv.axis, mv.index)
    for cand in candidates:
        if move_effect(spec, cand) == target:
            return [cand]
    # Fall back to repeating the move itself: g^-1 = g^(ord-1).
    base = Move(mv.axis, mv.index, mv.element)
    return [base] * ((-mv.power) % g.element_order(mv.element))


def invert_sequence(spec: PuzzleSpec, seq: Sequence[Move]) -> list[Move]:
    out: list[Move] = []
    for mv in reversed(seq):
        out += inverse_moves(spec, mv)
    return out


def word_length(seq: Sequence[Move], metric: str = QUARTER) -> int:
    """Length of a word in the given metric; a double move counts 2 quarter turns."""
    if metric == HALF:
        return len(seq)
    return sum(mv.power for mv in seq)


def format_word(spec: PuzzleSpec, seq: Sequence[Move]) -> str:
    return " ".join(mv.token(spec) for mv in seq)


_TOKEN_RE = re.compile(r"([A-Za-z]+)(\d+)(²|\^2)?$")


def parse_word(spec: PuzzleSpec, text: str) -> list[Move]:
    seq = []
    for tok in text.split():
        match = _TOKEN_RE.match(tok)
        if not match:
            raise ConfigFormatError(f"bad move token {tok!r}")
        name, index, sq = match.group(1), int(match.group(2)), match.group(3)
        if name in spec.row_names:
            mv = Move(ROW, index, spec.row_elements[spec.row_names.index(name)], 2 if sq else 1)
        elif name in spec.col_names:
            mv = Move(COL, index, spec.col_elements[spec.col_names.index(name)], 2 if sq else 1)
        else:
            raise ConfigFormatError(f"unknown move name {name!r}")
        try:
            validate_move(spec, mv)
        except ValueError as exc:
            raise ConfigFormatError(str(exc)) from None
        seq.append(mv)
    return seq


def scramble_walk(spec: PuzzleSpec, seed: int, length: int) -> tuple[Configuration, list[Move]]:
    """Random walk of ``length`` uniform moves from the solved board.

    Uses ``random.Random`` (MT19937) so results are reproducible everywhere.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    rng = random.Random(seed)
    moves = enumerate_moves(spec)
    word = [moves[rng.randrange(len(moves))] for _ in range(length)]
    return apply_sequence(spec, spec.identity(), word), word


def scramble_uniform_cube(m: int, n: int, seed: int) -> Configuration:
    """A uniformly random solvable cube board.

    Row signs (first fixed to +1) and column signs are drawn at random and each
    entry is drawn uniformly from the 12 permutations whose parity is the
    product of its row and column sign.
    """
    rng = random.Random(seed)
    g = s4_table()
    by_parity = {1: [], -1: []}
    for idx, e in enumerate(g.elements):
        by_parity[perm_parity(e)].append(idx)
    alpha = [1] + [rng.choice((1, -1)) for _ in range(m - 1)]
    beta = [rng.choice((1, -1)) for _ in range(n)]
    return Configuration(tuple(
        tuple(rng.choice(by_parity[alpha[i] * beta[j]]) for j in range(n)) for i in range(m)
    ))


def format_config(spec: PuzzleSpec, config: Configuration) -> str:
    """Text form: ``"m n"`` then one line of 4-digit one-line tokens per row."""
    elements = spec.group.elements
    if elements is None or any(len(e) != 4 for e in elements):
        raise ValueError("text format is defined for S4 boards only")
    lines = [f"{config.m} {config.n}"]
    for row in config.entries:
        lines.append(" ".join("".join(map(str, elements[x])) for x in row))
    return "\n".join(lines) + "\n"


def parse_config(spec: PuzzleSpec, text: str) -> Configuration:
    g = spec.group
    lines = text.rstrip("\n").split("\n") if text.strip() else []
    if not lines:
        raise ConfigFormatError("empty configuration")
    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise ConfigFormatError(f"bad header line {lines[0]!r}")
    m, n = int(header[0]), int(header[1])
    if m < 1 or n < 1:
        raise ConfigFormatError("board dimensions must be positive")
    if len(lines) != m + 1:
        raise ConfigFormatError(f"expected {m} rows, found {len(lines) - 1} lines")
    rows = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n:
            raise ConfigFormatError(f"expected {n} tokens in row {line!r}")
        row = []
        for tok in tokens:
            if len(tok) != 4 or not tok.isdigit() or sorted(tok) != list("1234"):
                raise ConfigFormatError(f"not a permutation token: {tok!r}")
            row.append(g.index(tuple(int(c) for c in tok)))
        rows.append(tuple(row))
    return Configuration(tuple(rows))
