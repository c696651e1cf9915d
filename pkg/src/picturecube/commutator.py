"""Local solving with row/column commutators.

The word ``x_i y_j x_i^-1 y_j^-1`` (x a row element, y a column element)
changes only cell (i, j), which it multiplies by ``[x, y]``.  A recipe is a
template word over such commutators whose effect cancels one cell's entry;
solving is then a matter of running a recipe on every cell.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from pathlib import Path

from .errors import UnsolvableError
from .group import GroupTable, commutator, derived_subgroup
from .puzzle import COL, ROW, Configuration, Move, PuzzleSpec, apply_sequence, cube_spec
from .solvability import parity_normalize

GOLDEN_RECIPES = Path(__file__).parent / "data" / "a4_recipes.txt"

Template = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class CommutatorRecipe:
    """Word that, run at cell (i, j), multiplies that cell by ``target^-1``."""

    target: int
    word: Template

    def instantiate(self, i: int, j: int) -> list[Move]:
        """Moves for the cell in row ``i``, column ``j`` (1-based)."""
        return [Move(axis, i if axis == ROW else j, x) for axis, x in self.word]

    def __len__(self) -> int:
        return len(self.word)


def _inverse_template(g: GroupTable, word: Template, allowed: dict[str, tuple[int, ...]]) -> Template:
    out = []
    for axis, x in reversed(word):
        if g.inv[x] in allowed[axis]:
            out.append((axis, g.inv[x]))
        else:
            out += [(axis, x)] * (g.element_order(x) - 1)
    return tuple(out)


def _line_words(g: GroupTable, elements: tuple[int, ...], axis: str, max_len: int) -> dict[int, Template]:
    """Shortest word over ``elements`` for each non-identity element it reaches."""
    words = {g.identity: ()}
    queue = deque([g.identity])
    while queue:
        x = queue.popleft()
        if len(words[x]) == max_len:
            continue
        for s in elements:
            y = g.mul[x][s]
            if y not in words:
                words[y] = words[x] + ((axis, s),)
                queue.append(y)
    del words[g.identity]
    return words


def commutator_basis(spec: PuzzleSpec, factor_len: int = 1) -> list[tuple[int, Template]]:
    """All ``[x_i, y_j]`` and ``[y_j, x_i]`` words with their cell effects.

    ``x`` ranges over row words and ``y`` over column words of length at most
    ``factor_len``.
    """
    g = spec.group
    allowed = {ROW: spec.row_elements, COL: spec.col_elements}
    rows = _line_words(g, spec.row_elements, ROW, factor_len)
    cols = _line_words(g, spec.col_elements, COL, factor_len)
    basis = []
    for a, wa in rows.items():
        for b, wb in cols.items():
            ia, ib = _inverse_template(g, wa, allowed), _inverse_template(g, wb, allowed)
            basis.append((commutator(g, a, b), wa + wb + ia + ib))
            basis.append((commutator(g, b, a), wb + wa + ib + ia))
    return basis


def _rank_key(spec: PuzzleSpec):
    ranks = {(ROW, x): k for k, x in enumerate(spec.row_elements)}
    ranks.update({(COL, x): len(spec.row_elements) + k for k, x in enumerate(spec.col_elements)})

    def key(word: Template):
        return len(word), tuple(ranks[mv] for mv in word)
    return key


def build_recipe_table(spec: PuzzleSpec | None = None, factor_len: int = 1,
                       max_commutators: int | None = 2) -> dict[int, CommutatorRecipe]:
    """Recipes for every element reachable as a product of basis commutators.

    Breadth-first in the number of commutators; within a layer the shortest
    word wins, then the lexicographically smallest in move-enumeration order.
    With the defaults this is the cube table over A4.
    """
    if spec is None:
        spec = cube_spec(1, 1)
    g = spec.group
    key = _rank_key(spec)
    best: dict[int, Template] = {}
    for effect, word in commutator_basis(spec, factor_len):
        if effect != g.identity and (effect not in best or key(word) < key(best[effect])):
            best[effect] = word
    basis = sorted(best.items(), key=lambda item: key(item[1]))

    found: dict[int, Template] = {g.identity: ()}
    layer = {g.identity: ()}
    depth = 0
    while layer and (max_commutators is None or depth < max_commutators):
        nxt: dict[int, Template] = {}
        for x, wx in layer.items():
            for c, wc in basis:
                y = g.mul[x][c]
                cand = wx + wc
                if y not in found and (y not in nxt or key(cand) < key(nxt[y])):
                    nxt[y] = cand
        found.update(nxt)
        layer = nxt
        depth += 1
    # A word with effect e cancels the entry inv(e).
    return {g.inv[x]: CommutatorRecipe(g.inv[x], w) for x, w in found.items()}


@functools.lru_cache(maxsize=None)
def _cached_recipes(group: GroupTable, rows: tuple[int, ...], cols: tuple[int, ...],
                    is_cube: bool) -> dict[int, CommutatorRecipe]:
    if is_cube:
        return build_recipe_table(cube_spec(1, 1))
    spec = PuzzleSpec(group, rows, cols, 1, 1)
    return build_recipe_table(spec, factor_len=4, max_commutators=None)


def recipes_for(spec: PuzzleSpec) -> dict[int, CommutatorRecipe]:
    return _cached_recipes(spec.group, spec.row_elements, spec.col_elements, spec.is_cube)


def solve_local(spec: PuzzleSpec, config: Configuration) -> list[Move]:
    """Solve cell by cell (row-major) with commutator recipes.

    For the cube, a parity-normalizing prefix first makes every entry even.
    Other groups need every entry to lie in the group generated by the
    commutators (all of G for a non-abelian simple G).
    """
    seq: list[Move] = []
    if spec.is_cube:
        seq = parity_normalize(config, spec)
        config = apply_sequence(spec, config, seq)
    recipes = recipes_for(spec)
    for i, j, x in config.cells():
        recipe = recipes.get(x)
        if recipe is None:
            raise UnsolvableError(f"entry at ({i + 1},{j + 1}) is out of reach of commutators")
        seq += recipe.instantiate(i + 1, j + 1)
    return seq


def format_recipes(spec: PuzzleSpec, recipes: dict[int, CommutatorRecipe]) -> str:
    """One line per target: one-line notation, then the template word or ``-``.

    Template tokens are ``U``/``D`` plus ``i`` for the cell's row and
    ``L``/``R`` plus ``j`` for its column.
    """
    lines = []
    for target in sorted(recipes, key=lambda t: spec.group.elements[t]):
        recipe = recipes[target]
        word = " ".join(spec.name_of(axis, x) + ("i" if axis == ROW else "j") for axis, x in recipe.word)
        lines.append("".join(map(str, spec.group.elements[target])) + " " + (word or "-"))
    return "\n".join(lines) + "\n"


def check_generic_coverage(spec: PuzzleSpec) -> bool:
    """True if commutator recipes reach every element of the derived subgroup."""
    return derived_subgroup(spec.group) <= set(recipes_for(spec))
