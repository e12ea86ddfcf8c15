"""Deterministic finite automaton over the firing alphabet.

States are the reachable configurations of a modified game plus one
absorbing trap; reading letter ``i`` from a configuration follows the
fire when vertex ``i`` is sad and falls into the trap otherwise.  All
configuration states accept, so the accepted language is exactly the
set of legal firing sequences, i.e. the reduced words of the minimal
coset representatives read move order first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .diagram import DynkinDiagram
from .game import GameSpec, modified_game, reachable_graph

__all__ = [
    "LetterError",
    "ReducedWordDFA",
    "build_dfa",
    "dfa_from_json",
]


class LetterError(ValueError):
    """An input letter lies outside the generator alphabet."""


@dataclass(frozen=True)
class ReducedWordDFA:
    """Total DFA over letters ``1..n_letters`` with a single trap state."""

    n_letters: int
    labels: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    start: int
    trap: int

    def __post_init__(self) -> None:
        m = len(self.labels)
        if len(self.delta) != m or any(len(r) != self.n_letters for r in self.delta):
            raise ValueError("transition table must be |states| x |alphabet|")
        if any(self.delta[self.trap][a] != self.trap for a in range(self.n_letters)):
            raise ValueError("trap state must be absorbing")

    @property
    def states(self) -> range:
        return range(len(self.labels))

    @cached_property
    def accepting(self) -> frozenset[int]:
        return frozenset(s for s in self.states if s != self.trap)

    def _check_word(self, word: Sequence[int]) -> None:
        for letter in word:
            if not 1 <= letter <= self.n_letters:
                raise LetterError(
                    f"letter {letter} outside alphabet 1..{self.n_letters}"
                )

    def run(self, word: Sequence[int]) -> tuple[int, ...]:
        """State sequence visited while reading ``word`` (length + 1 states)."""
        self._check_word(word)
        state = self.start
        visited = [state]
        for letter in word:
            state = self.delta[state][letter - 1]
            visited.append(state)
        return tuple(visited)

    def accepts(self, word: Sequence[int]) -> bool:
        return self.run(word)[-1] != self.trap

    def enumerate_language(self, max_len: int) -> dict[int, tuple[tuple[int, ...], ...]]:
        """All accepted words of length at most ``max_len``, grouped by length.

        Every state accepts except the trap, so the language is closed
        under prefixes and a plain breadth-first expansion suffices.
        """
        by_length: dict[int, tuple[tuple[int, ...], ...]] = {0: ((),)}
        frontier: list[tuple[tuple[int, ...], int]] = [((), self.start)]
        for length in range(1, max_len + 1):
            nxt: list[tuple[tuple[int, ...], int]] = []
            for word, state in frontier:
                for letter in range(1, self.n_letters + 1):
                    target = self.delta[state][letter - 1]
                    if target != self.trap:
                        nxt.append((word + (letter,), target))
            if not nxt:
                break
            nxt.sort(key=lambda p: p[0])
            by_length[length] = tuple(w for w, _ in nxt)
            frontier = nxt
        return by_length

    def word_count(self, max_len: int) -> int:
        return sum(len(ws) for ws in self.enumerate_language(max_len).values())

    def minimize(self) -> "ReducedWordDFA":
        """Language-equivalent DFA with the minimum number of states.

        Plain partition refinement; merged states concatenate their labels.
        The result is relabeled in order of each block's smallest old state,
        which keeps the output deterministic.
        """
        m = len(self.labels)
        block = [0 if s != self.trap else 1 for s in range(m)]
        n_blocks = 2
        while True:
            signatures: dict[tuple[int, ...], int] = {}
            new_block = [0] * m
            for s in range(m):
                sig = (block[s],) + tuple(
                    block[self.delta[s][a]] for a in range(self.n_letters)
                )
                if sig not in signatures:
                    signatures[sig] = len(signatures)
                new_block[s] = signatures[sig]
            if len(signatures) == n_blocks:
                break
            block = new_block
            n_blocks = len(signatures)
        representatives: dict[int, int] = {}
        order: list[int] = []
        for s in range(m):
            if block[s] not in representatives:
                representatives[block[s]] = s
                order.append(block[s])
        renumber = {b: i for i, b in enumerate(order)}
        labels = []
        for b in order:
            members = [self.labels[s] for s in range(m) if block[s] == b]
            labels.append("|".join(members))
        delta = tuple(
            tuple(
                renumber[block[self.delta[representatives[b]][a]]]
                for a in range(self.n_letters)
            )
            for b in order
        )
        return ReducedWordDFA(
            n_letters=self.n_letters,
            labels=tuple(labels),
            delta=delta,
            start=renumber[block[self.start]],
            trap=renumber[block[self.trap]],
        )

    # -- export ------------------------------------------------------------

    def to_dot(self) -> str:
        lines = ["digraph dfa {", "  rankdir=LR;"]
        for s in self.states:
            shape = "ellipse" if s == self.trap else "doublecircle"
            lines.append(f'  q{s} [label="{self.labels[s]}", shape={shape}];')
        lines.append(f"  hidden_start [shape=point, style=invis];")
        lines.append(f"  hidden_start -> q{self.start};")
        for s in self.states:
            by_target: dict[int, list[int]] = {}
            for a in range(self.n_letters):
                by_target.setdefault(self.delta[s][a], []).append(a + 1)
            for target in sorted(by_target):
                letters = ",".join(f"s{a}" for a in by_target[target])
                style = ', style=dashed' if target == self.trap else ""
                lines.append(f'  q{s} -> q{target} [label="{letters}"{style}];')
        lines.append("}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "states": list(self.labels),
            "trap": self.trap,
            "start": self.start,
            "delta": [list(row) for row in self.delta],
            "accepting": sorted(self.accepting),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def build_dfa(
    diagram: DynkinDiagram,
    active: Iterable[int],
    node_cap: int = 1_000_000,
) -> ReducedWordDFA:
    """Compile the reachable-configuration graph into a total DFA."""
    spec = modified_game(diagram, active)
    graph = reachable_graph(spec, node_cap=node_cap)
    n = diagram.n
    trap = len(graph.nodes)
    delta = [[trap] * n for _ in range(trap + 1)]
    for src, v, dst in graph.edges:
        delta[src][v - 1] = dst
    labels = tuple(",".join(str(x) for x in c) for c in graph.nodes) + ("trap",)
    return ReducedWordDFA(
        n_letters=n,
        labels=labels,
        delta=tuple(tuple(row) for row in delta),
        start=graph.start,
        trap=trap,
    )


def dfa_from_json(text: str | Mapping) -> ReducedWordDFA:
    data = json.loads(text) if isinstance(text, str) else dict(text)
    delta = tuple(tuple(int(x) for x in row) for row in data["delta"])
    n_letters = len(delta[0]) if delta else 0
    return ReducedWordDFA(
        n_letters=n_letters,
        labels=tuple(str(s) for s in data["states"]),
        delta=delta,
        start=int(data["start"]),
        trap=int(data["trap"]),
    )
