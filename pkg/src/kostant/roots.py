"""Positive roots and coroots as integer coefficient vectors.

Roots live in the basis of simple roots, coroots in the basis of simple
coroots; both are plain tuples of non-negative ints.  The pairing of a
vector ``x = sum c_j alpha_j`` with the simple coroot ``alpha_i^vee`` is
``sum_j c_j * a[j][i]`` over the Cartan matrix, and every reflection and
sadness test in the package reduces to that single formula.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .diagram import CartanMatrix, DynkinDiagram

__all__ = [
    "NotCrystallographicError",
    "NonFiniteTypeError",
    "Root",
    "pairing",
    "reflect",
    "height",
    "i_height",
    "support",
    "positive_roots",
    "positive_coroots",
    "roots_supported_on",
    "roots_outside",
    "highest_root",
]

Root = tuple[int, ...]


class NotCrystallographicError(ValueError):
    """Root-level operation requested on a non-crystallographic diagram."""


class NonFiniteTypeError(RuntimeError):
    """Reflection closure exceeded its cap; the root system is not finite."""


def pairing(cartan: CartanMatrix, vec: Sequence[int], i: int) -> int:
    """Pairing of ``vec`` (simple-root coordinates) with coroot ``i`` (1-based)."""
    col = i - 1
    rows = cartan.rows
    return sum(c * rows[j][col] for j, c in enumerate(vec) if c)


def reflect(cartan: CartanMatrix, vec: Sequence[int], i: int) -> Root:
    """Simple reflection ``s_i`` applied to a coefficient vector."""
    out = list(vec)
    out[i - 1] -= pairing(cartan, vec, i)
    return tuple(out)


def height(vec: Sequence[int]) -> int:
    return sum(vec)


def i_height(vec: Sequence[int], active: Iterable[int]) -> int:
    """Sum of the coefficients at the (1-based) indices in ``active``."""
    return sum(vec[i - 1] for i in active)


def support(vec: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i, c in enumerate(vec) if c)


def _require_crystallographic(diagram: DynkinDiagram) -> None:
    if not diagram.is_crystallographic:
        raise NotCrystallographicError(
            f"diagram {diagram.label!r} does not present a finite "
            "crystallographic root system"
        )


def positive_roots(diagram: DynkinDiagram, cap: int = 10_000) -> tuple[Root, ...]:
    """All positive roots, sorted by (height, lexicographic).

    Computed as the closure of the simple roots under simple reflections,
    keeping only vectors with non-negative coefficients.
    """
    _require_crystallographic(diagram)
    cartan = diagram.cartan()
    n = diagram.n
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen: set[Root] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt: list[Root] = []
        for root in frontier:
            for i in range(1, n + 1):
                image = reflect(cartan, root, i)
                if image in seen or any(c < 0 for c in image):
                    continue
                seen.add(image)
                nxt.append(image)
                if len(seen) > cap:
                    raise NonFiniteTypeError(
                        f"more than {cap} positive roots; "
                        "not a finite root system"
                    )
        frontier = nxt
    return tuple(sorted(seen, key=lambda r: (height(r), r)))


def positive_coroots(diagram: DynkinDiagram, cap: int = 10_000) -> tuple[Root, ...]:
    """Positive coroots in simple-coroot coordinates.

    These are exactly the positive roots of the arrow-reversed diagram.
    """
    return positive_roots(diagram.dual(), cap)


def roots_supported_on(
    roots: Iterable[Root], subset: Iterable[int]
) -> tuple[Root, ...]:
    """Roots whose support lies inside ``subset`` (1-based indices)."""
    allowed = frozenset(subset)
    return tuple(r for r in roots if support(r) <= allowed)


def roots_outside(roots: Iterable[Root], subset: Iterable[int]) -> tuple[Root, ...]:
    """Roots with at least one nonzero coefficient outside ``subset``."""
    allowed = frozenset(subset)
    return tuple(r for r in roots if not support(r) <= allowed)


def highest_root(diagram: DynkinDiagram) -> Root:
    """The unique maximal-height positive root of a connected diagram."""
    roots = positive_roots(diagram)
    top = roots[-1]
    ties = [r for r in roots if height(r) == height(top)]
    if len(ties) != 1:
        raise ValueError("highest root is not unique; diagram is disconnected?")
    return top
