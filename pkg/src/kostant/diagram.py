"""Dynkin diagrams as weighted directed multigraphs.

A diagram on vertices ``1..n`` stores, for every ordered pair ``(u, v)``,
the number of arrows pointing from ``u`` to ``v``.  Simply-laced edges
carry one arrow each way; a double or triple edge carries 2 or 3 arrows
in the long-to-short direction and a single arrow back.  The Cartan
matrix is derived from the arrow counts by ``a[u][v] = -arrows(v -> u)``
for ``u != v`` (and 2 on the diagonal), so the matrix and the picture
stay in lockstep with one fixed sign convention.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

__all__ = [
    "DiagramError",
    "CartanMatrix",
    "DynkinDiagram",
    "catalog_diagram",
    "custom_diagram",
    "diagram_from_json",
    "iter_catalog",
    "CATALOG_FAMILIES",
]


class DiagramError(ValueError):
    """Raised for malformed or unclassifiable diagram input."""


CATALOG_FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


def _valid_catalog_pair(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in ("B", "C"):
        return rank >= 2
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


@dataclass(frozen=True)
class CartanMatrix:
    """Integer matrix of pairings between simple roots and simple coroots."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=int)

    def entry(self, i: int, j: int) -> int:
        """Pairing of simple root ``i`` with simple coroot ``j`` (1-based)."""
        return self.rows[i - 1][j - 1]

    def transpose(self) -> "CartanMatrix":
        return CartanMatrix(tuple(zip(*self.rows)))

    def __post_init__(self) -> None:
        n = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise DiagramError("Cartan matrix must be square")
            if row[i] != 2:
                raise DiagramError("Cartan matrix diagonal must be 2")
            for j, a in enumerate(row):
                if i != j and a > 0:
                    raise DiagramError("off-diagonal Cartan entries must be <= 0")
                if (a == 0) != (self.rows[j][i] == 0):
                    raise DiagramError("Cartan zero pattern must be symmetric")


def _symmetrizer(rows: Sequence[Sequence[int]]) -> list[Fraction] | None:
    """Positive diagonal d with d[i]*a[i][j] == d[j]*a[j][i], or None."""
    n = len(rows)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            u = stack.pop()
            for v in range(n):
                if u == v or rows[u][v] == 0:
                    continue
                need = d[u] * Fraction(rows[u][v], rows[v][u])
                if d[v] is None:
                    d[v] = need
                    stack.append(v)
                elif d[v] != need:
                    return None
    return [x for x in d]  # type: ignore[misc]


def _is_positive_definite(sym: list[list[Fraction]]) -> bool:
    """Exact leading-principal-minor test via fraction elimination."""
    n = len(sym)
    m = [row[:] for row in sym]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


@dataclass(frozen=True)
class DynkinDiagram:
    """Weighted directed multigraph on vertices ``1..n``.

    ``inbound[v][u]`` (0-based) is the number of arrows pointing from
    vertex ``u+1`` into vertex ``v+1``; it is the multiplier applied to
    the neighbor ``u+1`` when vertex ``v+1`` fires.
    """

    n: int
    inbound: tuple[tuple[int, ...], ...]
    label: str = "custom"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DiagramError("rank must be a positive integer")
        if len(self.inbound) != self.n or any(len(r) != self.n for r in self.inbound):
            raise DiagramError("arrow table must be n x n")
        for v in range(self.n):
            if self.inbound[v][v] != 0:
                raise DiagramError(f"self-loop at vertex {v + 1}")
            for u in range(self.n):
                m = self.inbound[v][u]
                if m < 0:
                    raise DiagramError("arrow multiplicities must be non-negative")
                if (m > 0) != (self.inbound[u][v] > 0):
                    raise DiagramError(
                        f"one-sided edge between {u + 1} and {v + 1}: "
                        "adjacency must be mutual"
                    )

    # -- basic structure ---------------------------------------------------

    def arrows(self, u: int, v: int) -> int:
        """Number of arrows pointing from vertex ``u`` to vertex ``v``."""
        return self.inbound[v - 1][u - 1]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        row = self.inbound[v - 1]
        return tuple(u + 1 for u in range(self.n) if row[u] > 0)

    def edge_pairs(self) -> Iterator[tuple[int, int]]:
        """Unordered adjacent pairs ``(u, v)`` with ``u < v``."""
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.inbound[v][u] > 0:
                    yield (u + 1, v + 1)

    def cartan(self) -> CartanMatrix:
        rows = tuple(
            tuple(
                2 if u == v else -self.inbound[v][u] for v in range(self.n)
            )
            for u in range(self.n)
        )
        return CartanMatrix(rows)

    def dual(self) -> "DynkinDiagram":
        """Diagram with all arrows reversed (transposed Cartan matrix)."""
        transposed = tuple(zip(*self.inbound))
        if self.inbound == transposed:
            label = self.label
        elif self.label.startswith("B"):
            label = "C" + self.label[1:]
        elif self.label.startswith("C"):
            label = "B" + self.label[1:]
        else:
            label = self.label + "v"
        return DynkinDiagram(self.n, transposed, label)

    # -- classification ----------------------------------------------------

    @cached_property
    def is_crystallographic(self) -> bool:
        """True when the diagram presents a finite crystallographic root system.

        Requires every edge product ``arrows(u,v) * arrows(v,u)`` to lie in
        {1, 2, 3}, a consistent symmetrization, and a positive-definite
        symmetrized form.  Affine graphs (zero determinant) and wilder
        custom graphs fail this; games can still be played on them, but
        root and Weyl-group operations are refused.
        """
        for u in range(self.n):
            for v in range(u + 1, self.n):
                prod = self.inbound[v][u] * self.inbound[u][v]
                if prod > 3:
                    return False
        rows = self.cartan().rows
        d = _symmetrizer(rows)
        if d is None:
            return False
        sym = [
            [d[i] * rows[i][j] for j in range(self.n)] for i in range(self.n)
        ]
        return _is_positive_definite(sym)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        edges = []
        for u, v in self.edge_pairs():
            edges.append({"from": u, "to": v, "arrows": self.arrows(u, v)})
            if self.arrows(v, u) != 1:
                edges.append({"from": v, "to": u, "arrows": self.arrows(v, u)})
        return {"n": self.n, "edges": edges, "label": self.label}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def ascii_art(self) -> str:
        """One-line picture for path diagrams, an edge list otherwise."""
        pairs = list(self.edge_pairs())
        is_path = pairs == [(i, i + 1) for i in range(1, self.n)]
        if not is_path:
            return ", ".join(self._edge_text(u, v) for u, v in pairs) or "o"
        out = "o"
        for i in range(1, self.n):
            out += self._edge_sep(i, i + 1) + "o"
        return out

    def _edge_sep(self, u: int, v: int) -> str:
        fwd, back = self.arrows(u, v), self.arrows(v, u)
        if fwd == back == 1:
            return "--"
        if fwd > back:
            return {2: "=>", 3: "3>"}.get(fwd, f"{fwd}>")
        return {2: "<=", 3: "<3"}.get(back, f"<{back}")

    def _edge_text(self, u: int, v: int) -> str:
        return f"{u}{self._edge_sep(u, v)}{v}"


def _edges_to_inbound(
    n: int, records: Iterable[tuple[int, int, int]]
) -> tuple[tuple[int, ...], ...]:
    inbound = [[0] * n for _ in range(n)]
    given: set[tuple[int, int]] = set()
    for u, v, m in records:
        if not (1 <= u <= n and 1 <= v <= n):
            raise DiagramError(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise DiagramError(f"self-loop at vertex {u}")
        if (u, v) in given:
            raise DiagramError(f"duplicate edge record ({u}, {v})")
        if m < 0:
            raise DiagramError("arrow multiplicity must be non-negative")
        given.add((u, v))
        inbound[v - 1][u - 1] = m
    # A pair given in one direction only defaults to a single return arrow.
    for u, v in list(given):
        if (v, u) not in given and inbound[v - 1][u - 1] > 0:
            inbound[u - 1][v - 1] = 1
    return tuple(tuple(row) for row in inbound)


def custom_diagram(
    n: int,
    edges: Iterable[tuple[int, int, int] | tuple[int, int]],
    label: str = "custom",
) -> DynkinDiagram:
    """Build a diagram from directed edge records ``(from, to, arrows)``.

    A record with the reverse direction omitted gets a single arrow back.
    Vertices must be numbered contiguously from 1.
    """
    records = []
    for e in edges:
        if len(e) == 2:
            u, v = e  # type: ignore[misc]
            m = 1
        else:
            u, v, m = e  # type: ignore[misc]
        records.append((u, v, m))
    touched = {u for u, _, _ in records} | {v for _, v, _ in records}
    if touched and (min(touched) < 1 or max(touched) > n):
        raise DiagramError("vertex indices must be contiguous from 1")
    return DynkinDiagram(n, _edges_to_inbound(n, records), label)


def diagram_from_json(text: str | Mapping) -> DynkinDiagram:
    data = json.loads(text) if isinstance(text, str) else dict(text)
    try:
        n = int(data["n"])
        edges = data.get("edges", [])
        label = str(data.get("label", "custom"))
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"malformed diagram JSON: {exc}") from exc
    records = []
    for e in edges:
        records.append((int(e["from"]), int(e["to"]), int(e.get("arrows", 1))))
    return DynkinDiagram(n, _edges_to_inbound(n, records), label)


def catalog_diagram(family: str, rank: int) -> DynkinDiagram:
    """Standard crystallographic diagram with Bourbaki vertex numbering.

    ``B_n`` carries the double arrow from the long chain into the short
    terminal vertex ``n``; ``C_n`` is its arrow-reverse.  ``F_4`` is the
    path ``1--2=>3--4`` and ``G_2`` has the triple arrow from the long
    vertex 2 into the short vertex 1.
    """
    family = family.upper()
    if family not in CATALOG_FAMILIES or not _valid_catalog_pair(family, rank):
        raise DiagramError(f"no crystallographic diagram of type {family}{rank}")
    n = rank
    chain = [(i, i + 1, 1) for i in range(1, n)]
    edges: list[tuple[int, int, int]]
    if family == "A":
        edges = chain
    elif family == "B":
        edges = chain[:-1] + [(n - 1, n, 2), (n, n - 1, 1)]
    elif family == "C":
        edges = chain[:-1] + [(n - 1, n, 1), (n, n - 1, 2)]
    elif family == "D":
        edges = [(i, i + 1, 1) for i in range(1, n - 1)] + [(n - 2, n, 1)]
    elif family == "E":
        spine = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        edges = [(a, b, 1) for a, b in zip(spine, spine[1:])] + [(2, 4, 1)]
    elif family == "F":
        edges = [(1, 2, 1), (2, 3, 2), (3, 2, 1), (3, 4, 1)]
    else:  # G
        edges = [(2, 1, 3), (1, 2, 1)]
    return DynkinDiagram(n, _edges_to_inbound(n, edges), f"{family}{n}")


def iter_catalog(max_rank: int, min_rank: int = 1) -> Iterator[DynkinDiagram]:
    """All catalog diagrams with ``min_rank <= rank <= max_rank``.

    ``C_2`` is skipped (it is ``B_2`` with vertices relabeled), matching
    the usual sweep convention.
    """
    for rank in range(min_rank, max_rank + 1):
        for family in CATALOG_FAMILIES:
            if family == "C" and rank == 2:
                continue
            if _valid_catalog_pair(family, rank):
                yield catalog_diagram(family, rank)
