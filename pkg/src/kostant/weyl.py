"""Brute-force Weyl group engine.

Elements are integer matrices acting on simple-root coordinates (row i
is the image of simple root i), generated breadth-first from the
identity.  This module is the independent oracle for everything the
game engine claims: lengths, inversion sets, reduced words, minimal
coset representatives and parabolic factorizations.

Conventions, fixed once and verified by tests:

* row-vector action: ``w(x)`` has coefficients ``x @ M_w``;
* products compose as functions, ``(v * w)(x) = v(w(x))``, so the
  matrix of ``v * w`` is ``M_w @ M_v``;
* a generator sequence written left to right denotes the product in
  that order: the word ``(1, 2)`` is ``s_1 s_2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .diagram import CartanMatrix, DynkinDiagram
from .roots import Root, positive_roots, roots_supported_on

__all__ = [
    "OracleTooLargeError",
    "WeylElement",
    "WeylGroup",
    "CosetSystem",
    "simple_reflection_matrix",
    "element_from_word",
    "element_from_moves",
    "apply_action",
    "action_length",
]

Action = tuple[tuple[int, ...], ...]


class OracleTooLargeError(RuntimeError):
    """Group enumeration would exceed the configured element cap."""


def _identity_action(n: int) -> Action:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _mat_mul(a: Action, b: Action) -> Action:
    n = len(a)
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def simple_reflection_matrix(cartan: CartanMatrix, i: int) -> Action:
    """Matrix of ``s_i`` on simple-root coordinates (1-based ``i``)."""
    n = cartan.n
    k = i - 1
    rows = []
    for j in range(n):
        row = [int(j == c) for c in range(n)]
        row[k] -= cartan.rows[j][k]
        rows.append(tuple(row))
    return tuple(rows)


def apply_action(vec: Sequence[int], action: Action) -> Root:
    n = len(action[0])
    return tuple(
        sum(c * action[j][k] for j, c in enumerate(vec) if c) for k in range(n)
    )


def element_from_word(cartan: CartanMatrix, word: Sequence[int]) -> Action:
    """Matrix of the product ``s_{word[0]} s_{word[1]} ...`` in written order."""
    acc = _identity_action(cartan.n)
    # M_{x*y} = M_y @ M_x, so fold the word from the left.
    for i in word:
        acc = _mat_mul(acc, simple_reflection_matrix(cartan, i))
    return acc


def element_from_moves(cartan: CartanMatrix, moves: Sequence[int]) -> Action:
    """Matrix of ``s_{i_m} ... s_{i_1}`` for a firing sequence ``(i_1..i_m)``."""
    return element_from_word(cartan, tuple(reversed(tuple(moves))))


def action_length(action: Action, pos_roots: Sequence[Root]) -> int:
    """Number of positive roots sent to negative roots (the length)."""
    count = 0
    for root in pos_roots:
        image = apply_action(root, action)
        if all(c <= 0 for c in image):
            count += 1
    return count


@dataclass(frozen=True)
class WeylElement:
    """Group element as an integer action matrix with cached length."""

    action: Action
    length: int

    @property
    def n(self) -> int:
        return len(self.action)

    def apply(self, vec: Sequence[int]) -> Root:
        return apply_action(vec, self.action)

    def to_json_dict(self) -> dict:
        return {"action": [list(r) for r in self.action], "length": self.length}


@dataclass(frozen=True)
class CosetSystem:
    """Minimal-length representatives of ``W / W_J``."""

    J: frozenset[int]
    reps: tuple[WeylElement, ...]
    longest: WeylElement


class WeylGroup:
    """Closure of the simple reflections, with lengths and descent tables."""

    def __init__(self, diagram: DynkinDiagram, cap: int = 200_000):
        if not diagram.is_crystallographic:
            raise ValueError(
                f"diagram {diagram.label!r} has no finite Weyl group"
            )
        self.diagram = diagram
        self.cartan = diagram.cartan()
        n = diagram.n
        self.rank = n
        self._gen_mats = [
            simple_reflection_matrix(self.cartan, i) for i in range(1, n + 1)
        ]
        identity = _identity_action(n)
        actions: list[Action] = [identity]
        index: dict[Action, int] = {identity: 0}
        lengths: list[int] = [0]
        right: list[list[int]] = []
        parent: list[int] = [-1]
        letter: list[int] = [0]
        frontier = [0]
        while frontier:
            nxt: list[int] = []
            for w in frontier:
                while len(right) <= w:
                    right.append([-1] * n)
                mw = actions[w]
                for i in range(n):
                    img = _mat_mul(self._gen_mats[i], mw)
                    j = index.get(img)
                    if j is None:
                        j = len(actions)
                        if j >= cap:
                            raise OracleTooLargeError(
                                f"Weyl group of {diagram.label!r} exceeds "
                                f"cap of {cap} elements"
                            )
                        actions.append(img)
                        index[img] = j
                        lengths.append(lengths[w] + 1)
                        parent.append(w)
                        letter.append(i + 1)
                        nxt.append(j)
                    right[w][i] = j
            frontier = nxt
        self._actions = actions
        self._index = index
        self._lengths = lengths
        self._right = right
        self._parent = parent
        self._letter = letter
        self._left: dict[tuple[int, int], int] = {}
        self._word_counts: dict[int, int] = {}

    # -- basic access --------------------------------------------------------

    def __len__(self) -> int:
        return len(self._actions)

    def __iter__(self) -> Iterator[WeylElement]:
        for i in range(len(self._actions)):
            yield self._element(i)

    def _element(self, idx: int) -> WeylElement:
        return WeylElement(self._actions[idx], self._lengths[idx])

    def _idx(self, w: WeylElement | Action) -> int:
        action = w.action if isinstance(w, WeylElement) else w
        try:
            return self._index[action]
        except KeyError:
            raise ValueError("element does not belong to this group") from None

    @property
    def identity(self) -> WeylElement:
        return self._element(0)

    def generator(self, i: int) -> WeylElement:
        """The simple reflection ``s_i`` (1-based)."""
        return self._element(self._right[0][i - 1])

    @cached_property
    def generators(self) -> tuple[WeylElement, ...]:
        return tuple(self.generator(i) for i in range(1, self.rank + 1))

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return positive_roots(self.diagram)

    def length(self, w: WeylElement) -> int:
        return self._lengths[self._idx(w)]

    def longest_element(self) -> WeylElement:
        top = max(range(len(self)), key=lambda i: (self._lengths[i], i))
        return self._element(top)

    # -- multiplication --------------------------------------------------------

    def mul(self, v: WeylElement, w: WeylElement) -> WeylElement:
        """Product ``v * w`` acting as ``v(w(x))``."""
        return self._element(self._idx(_mat_mul(w.action, v.action)))

    def inverse(self, w: WeylElement) -> WeylElement:
        word = self.canonical_word(w)
        return self.element_of_word(tuple(reversed(word)))

    def _right_idx(self, idx: int, i: int) -> int:
        return self._right[idx][i - 1]

    def _left_idx(self, idx: int, i: int) -> int:
        key = (idx, i)
        got = self._left.get(key)
        if got is None:
            got = self._index[_mat_mul(self._actions[idx], self._gen_mats[i - 1])]
            self._left[key] = got
        return got

    def right_mul(self, w: WeylElement, i: int) -> WeylElement:
        return self._element(self._right_idx(self._idx(w), i))

    def left_mul(self, i: int, w: WeylElement) -> WeylElement:
        return self._element(self._left_idx(self._idx(w), i))

    def element_of_word(self, word: Sequence[int]) -> WeylElement:
        """Product of generators in written order."""
        idx = 0
        for i in word:
            idx = self._right_idx(idx, i)
        return self._element(idx)

    def element_of_moves(self, moves: Sequence[int]) -> WeylElement:
        """``s_{i_m} ... s_{i_1}`` for a firing sequence: later moves act last."""
        return self.element_of_word(tuple(reversed(tuple(moves))))

    def canonical_word(self, w: WeylElement) -> tuple[int, ...]:
        """A fixed reduced word for ``w`` (from the generation tree)."""
        idx = self._idx(w)
        out: list[int] = []
        while idx != 0:
            out.append(self._letter[idx])
            idx = self._parent[idx]
        return tuple(reversed(out))

    # -- descents and inversions ----------------------------------------------

    def right_descents(self, w: WeylElement) -> frozenset[int]:
        idx = self._idx(w)
        return frozenset(
            i
            for i in range(1, self.rank + 1)
            if self._lengths[self._right_idx(idx, i)] < self._lengths[idx]
        )

    def left_descents(self, w: WeylElement) -> frozenset[int]:
        idx = self._idx(w)
        return frozenset(
            i
            for i in range(1, self.rank + 1)
            if self._lengths[self._left_idx(idx, i)] < self._lengths[idx]
        )

    def inversion_set(self, w: WeylElement) -> tuple[Root, ...]:
        """Positive roots sent negative by ``w``; its size is the length."""
        out = [
            root
            for root in self.positive_roots
            if all(c <= 0 for c in apply_action(root, w.action))
        ]
        return tuple(out)

    # -- reduced words ----------------------------------------------------------

    def reduced_words(self, w: WeylElement) -> frozenset[tuple[int, ...]]:
        """All reduced words for ``w`` (products in written order)."""
        memo: dict[int, frozenset[tuple[int, ...]]] = {}

        def rec(idx: int) -> frozenset[tuple[int, ...]]:
            got = memo.get(idx)
            if got is not None:
                return got
            if self._lengths[idx] == 0:
                result = frozenset({()})
            else:
                words: set[tuple[int, ...]] = set()
                for i in range(1, self.rank + 1):
                    down = self._left_idx(idx, i)
                    if self._lengths[down] < self._lengths[idx]:
                        words.update((i,) + rest for rest in rec(down))
                result = frozenset(words)
            memo[idx] = result
            return result

        return rec(self._idx(w))

    def reduced_word_count(self, w: WeylElement) -> int:
        def rec(idx: int) -> int:
            got = self._word_counts.get(idx)
            if got is not None:
                return got
            if self._lengths[idx] == 0:
                result = 1
            else:
                result = sum(
                    rec(self._left_idx(idx, i))
                    for i in range(1, self.rank + 1)
                    if self._lengths[self._left_idx(idx, i)] < self._lengths[idx]
                )
            self._word_counts[idx] = result
            return result

        return rec(self._idx(w))

    # -- parabolic structure ------------------------------------------------------

    def _minimal_reps_by_descent(self, J: frozenset[int]) -> list[int]:
        return [
            idx
            for idx in range(len(self))
            if all(
                self._lengths[self._right_idx(idx, j)] > self._lengths[idx]
                for j in J
            )
        ]

    def _minimal_reps_by_inversions(self, J: frozenset[int]) -> list[int]:
        j_roots = roots_supported_on(self.positive_roots, J)
        out = []
        for idx in range(len(self)):
            action = self._actions[idx]
            if all(
                any(c > 0 for c in apply_action(root, action)) for root in j_roots
            ):
                out.append(idx)
        return out

    def minimal_coset_reps(self, J: Iterable[int]) -> CosetSystem:
        """Minimal-length representatives of ``W / W_J``.

        Computed from the right-descent condition and cross-checked against
        the inversion-set characterization; the two must agree.
        """
        Jset = frozenset(J)
        if not Jset <= set(range(1, self.rank + 1)):
            raise ValueError("J must be a subset of the generator indices")
        by_descent = self._minimal_reps_by_descent(Jset)
        by_inversion = self._minimal_reps_by_inversions(Jset)
        if by_descent != by_inversion:
            raise AssertionError(
                "descent and inversion characterizations disagree on W^J"
            )
        reps = tuple(self._element(i) for i in by_descent)
        longest = max(reps, key=lambda w: w.length)
        ties = [w for w in reps if w.length == longest.length]
        if len(ties) != 1:
            raise AssertionError("longest minimal representative is not unique")
        return CosetSystem(Jset, reps, longest)

    def parabolic_subgroup_order(self, J: Iterable[int]) -> int:
        Jset = frozenset(J)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for idx in frontier:
                for j in Jset:
                    other = self._right_idx(idx, j)
                    if other not in seen:
                        seen.add(other)
                        nxt.append(other)
            frontier = nxt
        return len(seen)

    def parabolic_decompose(
        self, w: WeylElement, J: Iterable[int]
    ) -> tuple[WeylElement, WeylElement]:
        """Unique factorization ``w = w^J * w_J`` with additive lengths."""
        Jset = frozenset(J)
        idx = self._idx(w)
        tail: list[int] = []
        changed = True
        while changed:
            changed = False
            for j in sorted(Jset):
                down = self._right_idx(idx, j)
                if self._lengths[down] < self._lengths[idx]:
                    idx = down
                    tail.append(j)
                    changed = True
                    break
        w_j = self.element_of_word(tuple(reversed(tail)))
        w_up = self._element(idx)
        if w_up.length + w_j.length != w.length:
            raise AssertionError("parabolic factorization lost length additivity")
        return w_up, w_j
