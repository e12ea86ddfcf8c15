"""Standard Young tableaux from single-source games on a path diagram.

For the path diagram with ``n - 1`` vertices and a single source at
vertex ``k``, legal firing sequences correspond to reduced words of
Grassmannian permutations in ``S_n``.  Each firing sequence grows a
standard tableau one box per move: firing vertex ``i`` at step ``j``
places ``j`` on the diagonal of content ``i - k`` (column minus row),
in the unique addable cell there.  Peeling entries off a tableau in
decreasing order inverts the construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from math import factorial
from typing import Iterator, Sequence

from .diagram import catalog_diagram
from .game import modified_game
from .weyl import WeylElement, action_length, apply_action, element_from_moves
from . import game as _game
from . import roots as _roots

__all__ = [
    "TableauError",
    "ShapeError",
    "YoungShape",
    "StandardTableau",
    "GrassmannianPermutation",
    "grassmannian_from_element",
    "shape_of",
    "fill_tableau",
    "sequence_of_tableau",
    "count_syt",
    "enumerate_standard_tableaux",
    "addable_cells",
    "one_line_from_moves",
]

YoungShape = tuple[int, ...]


class ShapeError(ValueError):
    """Not a partition, or a partition outside its bounding rectangle."""


class TableauError(ValueError):
    """A filling violates the standard tableau conditions."""


def validate_shape(shape: Sequence[int]) -> YoungShape:
    parts = tuple(int(p) for p in shape if p)
    if any(p < 0 for p in parts):
        raise ShapeError("row lengths must be non-negative")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ShapeError(f"{tuple(shape)} is not weakly decreasing")
    return parts


def addable_cells(shape: YoungShape) -> tuple[tuple[int, int], ...]:
    """Cells ``(row, col)`` (1-based) whose addition keeps a partition shape."""
    cells = [(1, shape[0] + 1)] if shape else [(1, 1)]
    for r in range(1, len(shape)):
        if shape[r] < shape[r - 1]:
            cells.append((r + 1, shape[r] + 1))
    if shape:
        cells.append((len(shape) + 1, 1))
    return tuple(cells)


def removable_cells(shape: YoungShape) -> tuple[tuple[int, int], ...]:
    cells = []
    for r in range(len(shape)):
        if r + 1 == len(shape) or shape[r] > shape[r + 1]:
            cells.append((r + 1, shape[r]))
    return tuple(cells)


@dataclass(frozen=True)
class StandardTableau:
    """Rows of a bijective filling, strictly increasing along rows and columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = [x for row in self.rows for x in row]
        m = len(entries)
        if sorted(entries) != list(range(1, m + 1)):
            raise TableauError("entries must be exactly 1..m")
        validate_shape(self.shape)
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise TableauError("rows must strictly increase")
        for r in range(len(self.rows) - 1):
            upper, lower = self.rows[r], self.rows[r + 1]
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise TableauError("columns must strictly increase")

    @property
    def shape(self) -> YoungShape:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def cell_of(self, value: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows, start=1):
            for c, x in enumerate(row, start=1):
                if x == value:
                    return (r, c)
        raise TableauError(f"{value} not present in tableau")

    def to_json_dict(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def render(self) -> str:
        width = len(str(self.size))
        return "\n".join(
            " ".join(str(x).rjust(width) for x in row) for row in self.rows
        )


@dataclass(frozen=True)
class GrassmannianPermutation:
    """Permutation of ``1..n`` increasing on positions ``1..k`` and ``k+1..n``."""

    one_line: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        n = len(self.one_line)
        if sorted(self.one_line) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..n")
        if not 1 <= self.k <= n - 1:
            raise ValueError("the source position must satisfy 1 <= k <= n-1")
        ol = self.one_line
        for p in range(n - 1):
            if p + 1 != self.k and ol[p] > ol[p + 1]:
                raise ValueError(
                    f"{ol} descends at position {p + 1}, so it is not "
                    f"minimal for the source at {self.k}"
                )

    @property
    def n(self) -> int:
        return len(self.one_line)

    @property
    def length(self) -> int:
        ol = self.one_line
        return sum(
            1
            for p in range(len(ol))
            for q in range(p + 1, len(ol))
            if ol[p] > ol[q]
        )


def one_line_from_moves(moves: Sequence[int], n: int) -> tuple[int, ...]:
    """One-line form of ``s_{i_m} ... s_{i_1}`` acting on values.

    ``s_i`` swaps the values ``i`` and ``i+1``; multiplying by a generator
    on the right swaps two positions of the one-line word, so the word is
    folded left to right over the reversed move sequence.
    """
    perm = list(range(1, n + 1))
    for i in reversed(tuple(moves)):
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def grassmannian_from_element(w: WeylElement, k: int) -> GrassmannianPermutation:
    """Interpret a type-A group element as a permutation of values."""
    n = w.n + 1
    diagram = catalog_diagram("A", n - 1)
    word = _game._peel_reduced_word(diagram, w.action)
    ol = one_line_from_moves(tuple(reversed(word)), n)
    return GrassmannianPermutation(ol, k)


def shape_of(perm: GrassmannianPermutation) -> YoungShape:
    """Partition inside the ``k x (n-k)`` rectangle attached to ``perm``.

    Row ``i`` has ``one_line(k+1-i) - (k+1-i)`` boxes; the box count always
    equals the permutation's length, which is asserted.
    """
    k, ol = perm.k, perm.one_line
    parts = tuple(ol[k - i] - (k + 1 - i) for i in range(1, k + 1))
    if any(p < 0 for p in parts):
        raise ValueError(f"{ol} is not minimal for k={k}")
    shape = validate_shape(parts)
    if sum(shape) != perm.length:
        raise AssertionError(
            f"shape {shape} has {sum(shape)} boxes but the permutation "
            f"has length {perm.length}"
        )
    if shape and shape[0] > perm.n - k:
        raise ShapeError(f"shape {shape} overflows the {k} x {perm.n - k} rectangle")
    return shape


def _legal_moves_check(moves: Sequence[int], n: int, k: int) -> None:
    diagram = catalog_diagram("A", n - 1)
    spec = modified_game(diagram, {k})
    _game._validate_moves(spec, tuple(moves))


def fill_tableau(moves: Sequence[int], n: int, k: int) -> StandardTableau:
    """Grow a standard tableau from a legal firing sequence.

    Step ``j`` firing vertex ``i`` places ``j`` in the unique addable cell
    of content ``i - k``.  A missing or ambiguous cell would contradict
    the correspondence and raises an internal consistency failure.
    """
    moves = tuple(moves)
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    _legal_moves_check(moves, n, k)
    rows: list[list[int]] = []
    for j, i in enumerate(moves, start=1):
        shape = tuple(len(r) for r in rows)
        wanted = i - k
        hits = [(r, c) for (r, c) in addable_cells(shape) if c - r == wanted]
        if len(hits) != 1:
            raise AssertionError(
                f"step {j} (vertex {i}) found {len(hits)} addable cells of "
                f"content {wanted}; the filling rule requires exactly one"
            )
        r, c = hits[0]
        if r > len(rows):
            rows.append([])
        rows[r - 1].append(j)
    tableau = StandardTableau(tuple(tuple(r) for r in rows))
    if tableau.shape and tableau.shape[0] > n - k or len(tableau.shape) > k:
        raise AssertionError("filling escaped the bounding rectangle")
    return tableau


def sequence_of_tableau(t: StandardTableau, n: int, k: int) -> tuple[int, ...]:
    """Recover the firing sequence that builds ``t``: the inverse filling.

    The content of the cell holding the largest entry determines the last
    move, and the construction recurses on the rest.  The round trip
    through the filling rule is asserted.
    """
    shape = t.shape
    if len(shape) > k or (shape and shape[0] > n - k):
        raise ShapeError(
            f"shape {shape} does not fit the {k} x {n - k} rectangle"
        )
    moves: list[int] = []
    rows = [list(r) for r in t.rows]
    for value in range(t.size, 0, -1):
        r, c = t.cell_of(value)
        if len(rows[r - 1]) != c:
            raise TableauError(
                f"entry {value} at ({r},{c}) is not a removable corner"
            )
        moves.append(k + (c - r))
        rows[r - 1].pop()
        if not rows[r - 1]:
            rows.pop()
    moves.reverse()
    if fill_tableau(moves, n, k) != t:
        raise AssertionError("peeling and filling failed to round-trip")
    return tuple(moves)


def count_syt(shape: Sequence[int]) -> int:
    """Number of standard fillings, by the product of hook lengths."""
    parts = validate_shape(shape)
    m = sum(parts)
    if m == 0:
        return 1
    cols = [0] * (parts[0] if parts else 0)
    for p in parts:
        for c in range(p):
            cols[c] += 1
    hooks = 1
    for r, p in enumerate(parts):
        for c in range(p):
            hooks *= (p - c) + (cols[c] - r) - 1
    return factorial(m) // hooks


def enumerate_standard_tableaux(shape: Sequence[int]) -> Iterator[StandardTableau]:
    """All standard fillings of ``shape``, by placing m..1 at corners."""
    parts = validate_shape(shape)

    def rec(current: YoungShape, value: int, cells: dict[tuple[int, int], int]):
        if value == 0:
            rows = []
            for r in range(1, len(parts) + 1):
                rows.append(tuple(cells[(r, c)] for c in range(1, parts[r - 1] + 1)))
            yield StandardTableau(tuple(rows))
            return
        for (r, c) in removable_cells(current):
            cells[(r, c)] = value
            smaller = list(current)
            smaller[r - 1] -= 1
            yield from rec(validate_shape(smaller), value - 1, cells)
            del cells[(r, c)]

    yield from rec(parts, sum(parts), {})
