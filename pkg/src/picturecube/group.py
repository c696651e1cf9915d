"""Finite groups as explicit multiplication tables.

Permutations are written in one-line notation with 1-based images, and a
product ``p * q`` means "apply p, then q".  This is the right-action
convention: a cube in state ``g`` turned by ``u`` ends up in state ``g * u``.
"""

from __future__ import annotations

import functools
import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import BoundExceededError, MalformedCycleError

_CYCLE_RE = re.compile(r"\((\d*)\)")


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Product of two 1-based image tuples, p first."""
    return tuple(q[x - 1] for x in p)


def invert(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p, start=1):
        out[x - 1] = i
    return tuple(out)


def _images(p) -> tuple[int, ...]:
    return p.images if isinstance(p, Perm4) else tuple(p)


def perm_parity(p) -> int:
    """Sign of a permutation: +1 if even, -1 if odd."""
    images = _images(p)
    seen = [False] * len(images)
    transpositions = 0
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x] - 1
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


def cycles_to_images(text: str, degree: int) -> tuple[int, ...]:
    """Parse disjoint-cycle notation such as ``"(1423)"`` or ``"(12)(34)"``.

    Symbols are single digits in ``1..degree``; fixed points are omitted and
    ``"()"`` is the identity.
    """
    if not 1 <= degree <= 9:
        raise MalformedCycleError(f"degree {degree} not supported")
    stripped = text.replace(" ", "")
    if not stripped:
        raise MalformedCycleError("empty cycle string")
    groups = _CYCLE_RE.findall(stripped)
    if "".join(f"({g})" for g in groups) != stripped:
        raise MalformedCycleError(f"malformed cycle notation: {text!r}")
    if len(groups) > 1 and "" in groups:
        raise MalformedCycleError(f"empty cycle inside product: {text!r}")
    images = list(range(1, degree + 1))
    used: set[int] = set()
    for g in groups:
        symbols = [int(c) for c in g]
        for s in symbols:
            if not 1 <= s <= degree:
                raise MalformedCycleError(f"symbol {s} outside 1..{degree}")
            if s in used:
                raise MalformedCycleError(f"symbol {s} repeated in {text!r}")
            used.add(s)
        for a, b in zip(symbols, symbols[1:] + symbols[:1]):
            images[a - 1] = b
    return tuple(images)


def images_to_cycles(images: Sequence[int]) -> str:
    seen: set[int] = set()
    parts = []
    for start in range(1, len(images) + 1):
        if start in seen or images[start - 1] == start:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(str(x))
            x = images[x - 1]
        parts.append("(" + "".join(cycle) + ")")
    return "".join(parts) or "()"


@dataclass(frozen=True, order=True)
class Perm4:
    """A permutation of {1,2,3,4}; ``images[i]`` is where ``i+1`` maps."""

    images: tuple[int, int, int, int]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != [1, 2, 3, 4]:
            raise ValueError(f"not a permutation of 1..4: {self.images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls) -> Perm4:
        return cls((1, 2, 3, 4))

    def __mul__(self, other: Perm4) -> Perm4:
        return Perm4(compose(self.images, other.images))

    def inverse(self) -> Perm4:
        return Perm4(invert(self.images))

    def parity(self) -> int:
        return perm_parity(self)

    def one_line(self) -> str:
        return "".join(map(str, self.images))

    def __str__(self) -> str:
        return format_cycles(self)


def parse_cycles(text: str) -> Perm4:
    return Perm4(cycles_to_images(text, 4))


def format_cycles(p: Perm4) -> str:
    return images_to_cycles(p.images)


# One choice of the four cube rotations acting on the cube's main diagonals.
UP = parse_cycles("(1423)")
DOWN = parse_cycles("(1324)")
LEFT = parse_cycles("(1342)")
RIGHT = parse_cycles("(1243)")


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its full multiplication table.

    Elements are the integers ``0..order-1``.  ``elements`` optionally holds
    the concrete objects (1-based permutation image tuples) behind each index.
    """

    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    identity: int = 0
    labels: tuple[str, ...] | None = None
    elements: tuple | None = None
    _lookup: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.elements is not None and not self._lookup:
            self._lookup.update((e, i) for i, e in enumerate(self.elements))

    @property
    def order(self) -> int:
        return len(self.inv)

    def multiply(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def product(self, items: Iterable[int]) -> int:
        acc = self.identity
        for x in items:
            acc = self.mul[acc][x]
        return acc

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        acc = self.identity
        for _ in range(k):
            acc = self.mul[acc][a]
        return acc

    def element_order(self, a: int) -> int:
        k, acc = 1, a
        while acc != self.identity:
            acc = self.mul[acc][a]
            k += 1
        return k

    def index(self, element) -> int:
        """Index of a concrete element (a Perm4 or an image tuple)."""
        return self._lookup[_images(element)]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    @functools.cached_property
    def mul_array(self) -> np.ndarray:
        return np.array(self.mul, dtype=np.int64)

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.mul[a][b] == self.mul[b][a] for a in range(n) for b in range(a + 1, n))

    def check_axioms(self) -> None:
        """Exhaustive group-law check; raises AssertionError on failure."""
        n, mul, e = self.order, self.mul, self.identity
        for x in range(n):
            assert mul[e][x] == x and mul[x][e] == x, f"identity law fails at {x}"
            assert mul[x][self.inv[x]] == e, f"inverse law fails at {x}"
        for a, b, c in itertools.product(range(n), repeat=3):
            assert mul[mul[a][b]][c] == mul[a][mul[b][c]], f"not associative at {(a, b, c)}"


def table_from_elements(elements: Sequence[tuple[int, ...]]) -> GroupTable:
    """Build a table from a list of permutations closed under composition."""
    elements = tuple(tuple(e) for e in elements)
    lookup = {e: i for i, e in enumerate(elements)}
    mul = tuple(tuple(lookup[compose(a, b)] for b in elements) for a in elements)
    inv = tuple(lookup[invert(a)] for a in elements)
    identity = lookup[tuple(range(1, len(elements[0]) + 1))]
    labels = tuple(images_to_cycles(e) for e in elements)
    return GroupTable(mul, inv, identity, labels, elements, lookup)


@functools.lru_cache(maxsize=None)
def s4_table() -> GroupTable:
    """S4 with elements in lexicographic order of their one-line notation."""
    return table_from_elements(list(itertools.permutations((1, 2, 3, 4))))


def cube_elements() -> dict[str, int]:
    """Indices in ``s4_table()`` of the up/down/left/right rotations."""
    g = s4_table()
    return {"u": g.index(UP), "d": g.index(DOWN), "l": g.index(LEFT), "r": g.index(RIGHT)}


def group_from_generators(order_bound: int, generators: Sequence, degree: int | None = None) -> GroupTable:
    """Breadth-first closure of permutation generators.

    Elements are indexed in discovery order with the identity first.
    """
    gens = [_images(g) for g in generators]
    if degree is None:
        degree = len(gens[0]) if gens else 1
    if any(len(g) != degree for g in gens):
        raise ValueError("generators act on different point sets")
    identity = tuple(range(1, degree + 1))
    found = {identity: 0}
    elements = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in found:
                found[y] = len(elements)
                elements.append(y)
                if len(elements) > order_bound:
                    raise BoundExceededError(f"closure exceeds order bound {order_bound}")
                queue.append(y)
    return table_from_elements(elements)


def cyclic_table(k: int) -> GroupTable:
    """Z_k as rotations of k points; index i is the rotation by i."""
    rotation = tuple(list(range(2, k + 1)) + [1]) if k > 1 else (1,)
    return group_from_generators(k, [rotation])


def alternating_table(degree: int) -> GroupTable:
    """A_n for 3 <= n <= 9 from a 3-cycle and an (n or n-1)-cycle."""
    if not 3 <= degree <= 9:
        raise ValueError("degree must lie in 3..9")
    three = cycles_to_images("(123)", degree)
    if degree % 2:
        long = "(" + "".join(map(str, range(1, degree + 1))) + ")"
    else:
        long = "(" + "".join(map(str, range(2, degree + 1))) + ")"
    gens = [three] if degree == 3 else [three, cycles_to_images(long, degree)]
    order = 1
    for k in range(3, degree + 1):
        order *= k
    return group_from_generators(order, gens, degree)


def commutator(g: GroupTable, a: int, b: int) -> int:
    """``a b a^-1 b^-1``."""
    m, inv = g.mul, g.inv
    return m[m[m[a][b]][inv[a]]][inv[b]]


def subgroup_closure(g: GroupTable, generators: Iterable[int]) -> frozenset[int]:
    gens = list(generators)
    seen = {g.identity}
    queue = deque([g.identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = g.mul[x][s]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def derived_subgroup(g: GroupTable) -> frozenset[int]:
    n = g.order
    return subgroup_closure(g, {commutator(g, a, b) for a in range(n) for b in range(n)})


def is_simple(g: GroupTable) -> bool:
    """True when the only normal subgroups are trivial and the whole group."""
    if g.order == 1:
        return False
    n = g.order
    for x in range(n):
        if x == g.identity:
            continue
        conj_class = {g.mul[g.mul[g.inv[y]][x]][y] for y in range(n)}
        if len(subgroup_closure(g, conj_class)) != n:
            return False
    return True
