"""Membership in the reachable subgroup H, its order, and line-by-line solving."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsolvableError, UnsupportedSpecError
from .group import cube_elements, is_simple, perm_parity, s4_table, subgroup_closure
from .puzzle import COL, ROW, Configuration, Move, PuzzleSpec, apply_sequence


@dataclass(frozen=True)
class ParityMatrix:
    signs: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return "\n".join(" ".join("+" if s > 0 else "-" for s in row) for row in self.signs)


@dataclass(frozen=True)
class AbelianSolution:
    """Row factors ``a`` and column factors ``b`` with ``g_ij = a_i b_j``."""

    row_factors: tuple[int, ...]
    col_factors: tuple[int, ...]


def _require_cube(spec: PuzzleSpec) -> None:
    if not spec.is_cube:
        raise UnsupportedSpecError("parity criterion is defined for the cube puzzle only")


def parity_matrix(config: Configuration, spec: PuzzleSpec | None = None) -> ParityMatrix:
    elements = (spec.group if spec is not None else s4_table()).elements
    return ParityMatrix(tuple(tuple(perm_parity(elements[x]) for x in row) for row in config.entries))


def is_product_form(p: ParityMatrix) -> bool:
    """True iff every sign equals (first-column sign)(first-row sign)(corner sign)."""
    s = p.signs
    corner = s[0][0]
    return all(s[i][j] * s[0][j] * s[i][0] * corner == 1
               for i in range(1, len(s)) for j in range(1, len(s[0])))


def is_solvable(spec: PuzzleSpec, config: Configuration) -> bool:
    _require_cube(spec)
    return is_product_form(parity_matrix(config, spec))


def order_of_H(spec: PuzzleSpec) -> int:
    """Closed-form order of the reachable subgroup.

    Supported regimes: the cube puzzle; Abelian G with R and C each
    generating G; non-abelian simple G with R and C each generating G.
    """
    m, n = spec.m, spec.n
    if spec.is_cube:
        return 2 ** (m + n - 1) * 12 ** (m * n)
    g = spec.group
    full = g.order
    generates = (len(subgroup_closure(g, spec.row_elements)) == full
                 and len(subgroup_closure(g, spec.col_elements)) == full)
    if not generates:
        raise UnsupportedSpecError("R or C generates a proper subgroup")
    if g.is_abelian():
        return full ** (m + n - 1)
    if is_simple(g):
        return full ** (m * n)
    raise UnsupportedSpecError("no closed form for this group")


def _line_move(spec: PuzzleSpec, axis: str, index: int, needed: int) -> Move:
    allowed = spec.row_elements if axis == ROW else spec.col_elements
    if needed not in allowed:
        raise UnsupportedSpecError(f"element {spec.group.label(needed)} is not a single legal move")
    return Move(axis, index, needed)


def abelian_factors(spec: PuzzleSpec, config: Configuration) -> AbelianSolution:
    """Factor a board of an Abelian puzzle as ``g_ij = a_i b_j``.

    Raises UnsolvableError when the first row and column do not determine the
    rest of the board.
    """
    g = spec.group
    if not g.is_abelian():
        raise UnsupportedSpecError("group is not Abelian")
    e = config.entries
    a = tuple(e[i][0] for i in range(spec.m))
    b = tuple(g.mul[g.inv[e[0][0]]][e[0][j]] for j in range(spec.n))
    for i in range(spec.m):
        for j in range(spec.n):
            if g.mul[a[i]][b[j]] != e[i][j]:
                raise UnsolvableError(f"entry ({i + 1},{j + 1}) is not determined by row 1 and column 1")
    return AbelianSolution(a, b)


def abelian_solve(spec: PuzzleSpec, config: Configuration) -> list[Move]:
    """Solve the first row with column moves, then column 1 with row moves.

    Each correction is a single move, so every needed element must itself be
    a legal move (always true when R = C = G).
    """
    g = spec.group
    if not g.is_abelian():
        raise UnsupportedSpecError("group is not Abelian")
    cols = [_line_move(spec, COL, j + 1, g.inv[x])
            for j, x in enumerate(config.entries[0]) if x != g.identity]
    after = apply_sequence(spec, config, cols)
    rows = [_line_move(spec, ROW, i + 1, g.inv[after.entries[i][0]])
            for i in range(1, spec.m) if after.entries[i][0] != g.identity]
    after = apply_sequence(spec, after, rows)
    if any(x != g.identity for _, _, x in after.cells()):
        raise UnsolvableError("residue left after solving row 1 and column 1")
    return cols + rows


def parity_normalize(config: Configuration, spec: PuzzleSpec | None = None) -> list[Move]:
    """Quarter turns making every entry even: the {+1,-1} puzzle on parities.

    Toggles use ``u`` for rows and ``l`` for columns.  At most m+n-1 moves.
    """
    p = parity_matrix(config, spec).signs
    if not is_product_form(ParityMatrix(p)):
        raise UnsolvableError("parity pattern is not a product of row and column signs")
    c = cube_elements()
    m, n = len(p), len(p[0])
    seq = [Move(COL, j + 1, c["l"]) for j in range(n) if p[0][j] < 0]
    # After the column toggles, row i's parity is p[i][0] * p[0][0].
    seq += [Move(ROW, i + 1, c["u"]) for i in range(1, m) if p[i][0] * p[0][0] < 0]
    return seq
