"""The chip-firing game on a Dynkin diagram, classical and source-augmented.

A configuration assigns a non-negative chip count to every vertex.  A
vertex is sad when its chips fall strictly below half its weighted
neighbor sum (plus one for each active source sitting on it); only sad
vertices may fire, and firing replaces the vertex's count with that
weighted sum minus the old count.  The classical game starts from a
given configuration with no sources; the modified game starts from zero
with a nonempty active set driving the dynamics.

Two implementations of every step are kept deliberately distinct: the
combinatorial rule reads the arrow multiplicities, and the algebraic
rule reads Cartan pairings.  They must agree move for move, and the
verification entry points assert exactly that.
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .diagram import DynkinDiagram
from .roots import (
    Root,
    i_height,
    pairing,
    positive_coroots,
    roots_outside,
)
from .weyl import (
    WeylElement,
    WeylGroup,
    action_length,
    apply_action,
    element_from_moves,
    simple_reflection_matrix,
)
from . import roots as _roots

__all__ = [
    "Config",
    "VertexState",
    "GameSpec",
    "modified_game",
    "classical_game",
    "IllegalMoveError",
    "GraphTooLargeError",
    "vertex_state",
    "sad_vertices",
    "fire",
    "step_gain",
    "PlayResult",
    "play",
    "ConfigGraph",
    "reachable_graph",
    "AlgebraicState",
    "algebraic_step",
    "initial_algebraic_state",
    "word_of",
    "config_of_element",
    "BijectionReport",
    "verify_bijection",
    "RootCountingReport",
    "root_counting_check",
    "trace_dict",
]

Config = tuple[int, ...]

Strategy = str | Callable[[Config, tuple[int, ...]], int]


class VertexState(enum.Enum):
    SAD = "sad"
    HAPPY = "happy"
    EXCITED = "excited"


class IllegalMoveError(ValueError):
    """A vertex was fired while not sad."""

    def __init__(self, vertex: int, state: VertexState, step: int | None = None):
        self.vertex = vertex
        self.state = state
        self.step = step
        at = f" at step {step}" if step is not None else ""
        super().__init__(
            f"vertex {vertex} is {state.value}, not sad{at}; firing is illegal"
        )


class GraphTooLargeError(RuntimeError):
    """Reachable-configuration search exceeded its node cap."""


@dataclass(frozen=True)
class GameSpec:
    """A diagram plus game mode: active sources or a starting configuration."""

    diagram: DynkinDiagram
    mode: str = "modified"
    active: frozenset[int] = frozenset()
    initial: Config | None = None
    step_cap: int = 10_000

    def __post_init__(self) -> None:
        n = self.diagram.n
        if self.mode == "modified":
            if not self.active:
                raise ValueError("the modified game needs a nonempty active set")
            if not self.active <= set(range(1, n + 1)):
                raise ValueError("active set must be a subset of the vertices")
            if self.initial is not None:
                raise ValueError("the modified game always starts from zero")
        elif self.mode == "classical":
            if self.active:
                raise ValueError("the classical game has no active sources")
            if self.initial is None or len(self.initial) != n:
                raise ValueError("classical mode needs a length-n start")
            if any(c < 0 for c in self.initial):
                raise ValueError("chip counts must be non-negative")
            if not any(self.initial):
                raise ValueError("classical start needs at least one chip")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.step_cap < 1:
            raise ValueError("step cap must be positive")

    @property
    def start(self) -> Config:
        if self.mode == "modified":
            return (0,) * self.diagram.n
        return self.initial  # type: ignore[return-value]

    @property
    def inactive(self) -> frozenset[int]:
        return frozenset(range(1, self.diagram.n + 1)) - self.active

    def source(self, v: int) -> int:
        return 1 if v in self.active else 0

    def to_json_dict(self) -> dict:
        return {
            "diagram": self.diagram.to_json_dict(),
            "mode": self.mode,
            "active": sorted(self.active),
            "initial": list(self.initial) if self.initial is not None else None,
            "step_cap": self.step_cap,
        }


def modified_game(
    diagram: DynkinDiagram, active: Iterable[int], step_cap: int = 10_000
) -> GameSpec:
    return GameSpec(diagram, "modified", frozenset(active), None, step_cap)


def classical_game(
    diagram: DynkinDiagram, initial: Sequence[int], step_cap: int = 10_000
) -> GameSpec:
    return GameSpec(diagram, "classical", frozenset(), tuple(initial), step_cap)


# -- single moves, combinatorial route ------------------------------------------


def _weighted_neighbor_sum(c: Config, spec: GameSpec, v: int) -> int:
    row = spec.diagram.inbound[v - 1]
    return sum(row[u] * c[u] for u in range(spec.diagram.n) if row[u] and c[u])


def vertex_state(c: Config, spec: GameSpec, v: int) -> VertexState:
    """Sad, happy or excited: 2*chips versus weighted neighbor sum plus source."""
    lhs = 2 * c[v - 1]
    rhs = _weighted_neighbor_sum(c, spec, v) + spec.source(v)
    if lhs < rhs:
        return VertexState.SAD
    if lhs == rhs:
        return VertexState.HAPPY
    return VertexState.EXCITED


def sad_vertices(c: Config, spec: GameSpec) -> tuple[int, ...]:
    return tuple(
        v for v in spec.diagram.vertices()
        if vertex_state(c, spec, v) is VertexState.SAD
    )


def fire(c: Config, spec: GameSpec, v: int, step: int | None = None) -> Config:
    """Fire a sad vertex; only its own count changes."""
    state = vertex_state(c, spec, v)
    if state is not VertexState.SAD:
        raise IllegalMoveError(v, state, step)
    out = list(c)
    out[v - 1] = _weighted_neighbor_sum(c, spec, v) + spec.source(v) - c[v - 1]
    return tuple(out)


def step_gain(c: Config, spec: GameSpec, v: int) -> int:
    """Chip gain of firing ``v``, computed through the Cartan pairing.

    Equals ``source(v) - <c, alpha_v^vee>``; positive exactly when the
    vertex is sad.  Serves as the cross-check against the firing rule.
    """
    return spec.source(v) - pairing(spec.diagram.cartan(), c, v)


# -- full plays -------------------------------------------------------------------


@dataclass(frozen=True)
class PlayResult:
    """One play-through: the moves made and every configuration visited."""

    moves: tuple[int, ...]
    configs: tuple[Config, ...]
    final: Config | None
    diverged: bool

    @property
    def terminal(self) -> bool:
        return self.final is not None


def _pick(strategy: Strategy, rng: random.Random | None):
    if callable(strategy):
        return strategy
    if strategy == "lowest":
        return lambda c, sad: sad[0]
    if strategy == "highest":
        return lambda c, sad: sad[-1]
    if strategy == "random":
        if rng is None:
            raise ValueError("the random strategy needs a seed")
        return lambda c, sad: rng.choice(sad)
    raise ValueError(f"unknown strategy {strategy!r}")


def play(
    spec: GameSpec,
    strategy: Strategy = "lowest",
    seed: int | None = None,
    verify: bool = False,
) -> PlayResult:
    """Fire the strategy's chosen sad vertex until terminal or the step cap.

    Hitting the cap with sad vertices remaining reports divergence; it is
    a result, not an error.  With ``verify=True`` every step additionally
    checks the algebraic model against the firing rule.
    """
    rng = None
    if strategy == "random":
        if seed is None:
            raise ValueError("the random strategy needs an explicit seed")
        rng = random.Random(seed)
    choose = _pick(strategy, rng)
    c = spec.start
    configs = [c]
    moves: list[int] = []
    track_model = verify and spec.mode == "modified"
    state = initial_algebraic_state(spec) if track_model else None
    for _ in range(spec.step_cap):
        sad = sad_vertices(c, spec)
        if not sad:
            return PlayResult(tuple(moves), tuple(configs), c, False)
        v = choose(c, sad)
        if v not in sad:
            raise IllegalMoveError(v, vertex_state(c, spec, v), len(moves) + 1)
        gain = step_gain(c, spec, v)
        nxt = fire(c, spec, v)
        if verify:
            if track_model:
                assert state is not None
                state = algebraic_step(state, spec, v)
                if state.root_part != nxt:
                    raise AssertionError(
                        f"firing rule and reflection model disagree after "
                        f"firing {v}: {nxt} vs {state.root_part}"
                    )
            if sum(nxt) - sum(c) != gain:
                raise AssertionError(
                    f"chip increment at vertex {v} is not the pairing gain"
                )
        moves.append(v)
        configs.append(nxt)
        c = nxt
    if sad_vertices(c, spec):
        return PlayResult(tuple(moves), tuple(configs), None, True)
    return PlayResult(tuple(moves), tuple(configs), c, False)


# -- reachable configuration graph ----------------------------------------------


@dataclass(frozen=True)
class ConfigGraph:
    """All configurations reachable by legal fires, with labeled edges."""

    nodes: tuple[Config, ...]
    edges: tuple[tuple[int, int, int], ...]  # (source index, fired vertex, target index)
    start: int

    @cached_property
    def index(self) -> dict[Config, int]:
        return {c: i for i, c in enumerate(self.nodes)}

    @cached_property
    def out_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        table: list[list[tuple[int, int]]] = [[] for _ in self.nodes]
        for src, v, dst in self.edges:
            table[src].append((v, dst))
        return tuple(tuple(row) for row in table)

    @cached_property
    def in_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        table: list[list[tuple[int, int]]] = [[] for _ in self.nodes]
        for src, v, dst in self.edges:
            table[dst].append((v, src))
        return tuple(tuple(row) for row in table)

    @cached_property
    def sinks(self) -> tuple[int, ...]:
        return tuple(i for i, row in enumerate(self.out_edges) if not row)

    def longest_path_length(self) -> int:
        """Longest move count over all plays (the graph is acyclic)."""
        depth = [0] * len(self.nodes)
        for src, _, dst in self.edges:  # edges were recorded in BFS order
            depth[dst] = max(depth[dst], depth[src] + 1)
        return max(depth) if depth else 0

    def path_counts(self) -> list[int]:
        """Number of distinct plays from the start to each node."""
        counts = [0] * len(self.nodes)
        counts[self.start] = 1
        for src, _, dst in self.edges:
            counts[dst] += counts[src]
        return counts

    def to_dot(self) -> str:
        lines = ["digraph reachable {", "  rankdir=TB;"]
        for i, c in enumerate(self.nodes):
            label = ",".join(str(x) for x in c)
            lines.append(f'  n{i} [label="({label})"];')
        for src, v, dst in self.edges:
            lines.append(f'  n{src} -> n{dst} [label="{v}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "nodes": [list(c) for c in self.nodes],
            "edges": [
                {"from": src, "vertex": v, "to": dst}
                for src, v, dst in self.edges
            ],
            "start": self.start,
            "sinks": list(self.sinks),
        }


def reachable_graph(spec: GameSpec, node_cap: int = 1_000_000) -> ConfigGraph:
    """Breadth-first closure of the start under all legal fires."""
    start = spec.start
    nodes: list[Config] = [start]
    index: dict[Config, int] = {start: 0}
    edges: list[tuple[int, int, int]] = []
    queue = [0]
    while queue:
        nxt: list[int] = []
        for src in queue:
            c = nodes[src]
            for v in sad_vertices(c, spec):
                image = fire(c, spec, v)
                dst = index.get(image)
                if dst is None:
                    dst = len(nodes)
                    if dst >= node_cap:
                        raise GraphTooLargeError(
                            f"more than {node_cap} reachable configurations"
                        )
                    nodes.append(image)
                    index[image] = dst
                    nxt.append(dst)
                edges.append((src, v, dst))
        queue = nxt
    # BFS discovers edges out of shallower nodes first, so the edge list is
    # already topologically sorted by source depth.
    return ConfigGraph(tuple(nodes), tuple(edges), 0)


# -- algebraic model ----------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraicState:
    """Reflection-model state: root coefficients plus the fixed source part."""

    root_part: Config
    active: frozenset[int]

    @property
    def source_part(self) -> tuple[int, ...]:
        n = len(self.root_part)
        return tuple(1 if v in self.active else 0 for v in range(1, n + 1))


def initial_algebraic_state(spec: GameSpec) -> AlgebraicState:
    if spec.mode != "modified":
        raise ValueError("the algebraic model tracks the modified game")
    return AlgebraicState((0,) * spec.diagram.n, spec.active)


def algebraic_step(state: AlgebraicState, spec: GameSpec, v: int) -> AlgebraicState:
    """Extended reflection ``s_v``; legal only while the pairing is negative."""
    cartan = spec.diagram.cartan()
    margin = pairing(cartan, state.root_part, v) - (1 if v in state.active else 0)
    if margin >= 0:
        kind = VertexState.HAPPY if margin == 0 else VertexState.EXCITED
        raise IllegalMoveError(v, kind)
    out = list(state.root_part)
    out[v - 1] -= margin
    return AlgebraicState(tuple(out), state.active)


# -- words and the quotient correspondence -----------------------------------------


def _validate_moves(spec: GameSpec, moves: Sequence[int]) -> Config:
    c = spec.start
    for step, v in enumerate(moves, start=1):
        c = fire(c, spec, v, step=step)
    return c


def word_of(moves: Sequence[int], spec: GameSpec) -> WeylElement:
    """Group element of a legal firing sequence: later moves multiply on the left.

    The element is guaranteed reduced of length ``len(moves)`` and free of
    right descents into the inactive set; both facts are asserted here
    through inversion counts.
    """
    moves = tuple(moves)
    _validate_moves(spec, moves)
    diagram = spec.diagram
    if not diagram.is_crystallographic:
        raise _roots.NotCrystallographicError(
            "firing words only define group elements on crystallographic diagrams"
        )
    cartan = diagram.cartan()
    action = element_from_moves(cartan, moves)
    pos = _roots.positive_roots(diagram)
    length = action_length(action, pos)
    if length != len(moves):
        raise AssertionError(
            f"legal sequence {moves} gave a non-reduced word "
            f"(length {length} != {len(moves)})"
        )
    if spec.mode == "modified":
        for j in spec.inactive:
            alpha_j = tuple(int(i == j - 1) for i in range(diagram.n))
            if all(x <= 0 for x in apply_action(alpha_j, action)):
                raise AssertionError(
                    f"legal sequence {moves} left the minimal coset representatives "
                    f"(right descent at inactive vertex {j})"
                )
    return WeylElement(action, length)


def _peel_reduced_word(diagram: DynkinDiagram, action) -> tuple[int, ...]:
    """Reduced word (written order) by repeatedly removing right descents."""
    cartan = diagram.cartan()
    n = diagram.n
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    word: list[int] = []
    current = action
    while True:
        descent = None
        for i in range(n):
            if all(x <= 0 for x in apply_action(simples[i], current)):
                descent = i + 1
                break
        if descent is None:
            break
        word.append(descent)
        current = _mat_mul_local(simple_reflection_matrix(cartan, descent), current)
    if any(current[i][j] != int(i == j) for i in range(n) for j in range(n)):
        raise ValueError("matrix is not a product of the simple reflections")
    return tuple(reversed(word))


def _mat_mul_local(a, b):
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def config_of_element(
    w: WeylElement, diagram: DynkinDiagram, active: Iterable[int]
) -> Config:
    """Configuration corresponding to a minimal coset representative.

    Runs the reflection model along a reduced word of ``w`` read right to
    left; the result does not depend on the word chosen.
    """
    active = frozenset(active)
    spec = modified_game(diagram, active)
    word = _peel_reduced_word(diagram, w.action)
    for j in spec.inactive:
        alpha_j = tuple(int(i == j - 1) for i in range(diagram.n))
        if all(x <= 0 for x in apply_action(alpha_j, w.action)):
            raise ValueError(
                f"element has a right descent at inactive vertex {j}; "
                "it is not a minimal coset representative"
            )
    state = initial_algebraic_state(spec)
    for v in reversed(word):
        state = algebraic_step(state, spec, v)
    return state.root_part


# -- correspondence verification ---------------------------------------------------


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of checking configurations against minimal coset representatives."""

    diagram_label: str
    active: tuple[int, ...]
    node_count: int
    quotient_size: int
    counts_match: bool
    elements_bijective: bool
    descents_match_edges: bool
    path_counts_match: bool
    words_enumerated: bool
    word_sets_match: bool
    total_paths: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return (
            self.counts_match
            and self.elements_bijective
            and self.descents_match_edges
            and self.path_counts_match
            and (self.word_sets_match or not self.words_enumerated)
            and self.counterexample is None
        )


def verify_bijection(
    spec: GameSpec,
    group: WeylGroup | None = None,
    enumeration_cap: int = 20_000,
) -> BijectionReport:
    """Check the game/quotient correspondence exhaustively for one active set.

    Establishes that configurations biject with minimal coset
    representatives, that every edge is a length-increasing left
    multiplication, that in-edge labels at each node are exactly the left
    descents of its element, and that play counts equal reduced-word
    counts element by element.  When the total number of plays fits under
    ``enumeration_cap`` the word sets themselves are compared as well.
    """
    if spec.mode != "modified":
        raise ValueError("the correspondence concerns the modified game")
    diagram = spec.diagram
    W = group if group is not None else WeylGroup(diagram)
    graph = reachable_graph(spec)
    system = W.minimal_coset_reps(spec.inactive)
    rep_set = {w.action for w in system.reps}
    counts_match = len(graph.nodes) == len(system.reps)
    counterexample: str | None = None

    # Walk the graph carrying elements: every edge must be a left
    # multiplication by its label that raises length by one, and revisits
    # must agree (that agreement is the injectivity of the correspondence).
    elems: list[WeylElement | None] = [None] * len(graph.nodes)
    elems[graph.start] = W.identity
    elements_bijective = True
    for src, v, dst in graph.edges:
        src_el = elems[src]
        assert src_el is not None
        stepped = W.left_mul(v, src_el)
        if stepped.length != src_el.length + 1:
            elements_bijective = False
            counterexample = (
                f"firing {v} at {graph.nodes[src]} did not raise length"
            )
            break
        if elems[dst] is None:
            elems[dst] = stepped
        elif elems[dst] != stepped:
            elements_bijective = False
            counterexample = (
                f"configuration {graph.nodes[dst]} reached as two different "
                f"group elements"
            )
            break
    if elements_bijective:
        for idx, el in enumerate(elems):
            if el is None:
                elements_bijective = False
                counterexample = f"node {graph.nodes[idx]} unreachable in walk"
                break
            if el.action not in rep_set:
                elements_bijective = False
                counterexample = (
                    f"configuration {graph.nodes[idx]} maps outside the "
                    f"minimal representatives"
                )
                break
        else:
            if len({el.action for el in elems}) != len(elems):  # type: ignore[union-attr]
                elements_bijective = False
                counterexample = "two configurations share one group element"
    if elements_bijective and counts_match:
        # Independent direction: rebuild each configuration from its element.
        node_of_action = {
            elems[i].action: graph.nodes[i]  # type: ignore[union-attr]
            for i in range(len(graph.nodes))
        }
        for w in system.reps:
            expected = node_of_action.get(w.action)
            got = config_of_element(w, diagram, spec.active)
            if expected is None or got != expected:
                elements_bijective = False
                counterexample = (
                    f"element with word {W.canonical_word(w)} rebuilds "
                    f"{got}, expected {expected}"
                )
                break

    # Local structure: in-edge labels equal left descents, and each
    # in-neighbor is the element with the letter stripped.  Inductively this
    # makes {reversed plays reaching a node} equal {reduced words of its
    # element}.
    descents_match_edges = elements_bijective
    if elements_bijective:
        for idx in range(len(graph.nodes)):
            el = elems[idx]
            assert el is not None
            in_labels = frozenset(v for v, _ in graph.in_edges[idx])
            if in_labels != W.left_descents(el):
                descents_match_edges = False
                counterexample = (
                    f"in-edges {sorted(in_labels)} differ from left descents "
                    f"{sorted(W.left_descents(el))} at {graph.nodes[idx]}"
                )
                break

    # Count plays two ways: graph dynamic programming versus the oracle's
    # reduced-word recursion.
    path_counts_match = descents_match_edges
    total_paths = 0
    if descents_match_edges:
        counts = graph.path_counts()
        total_paths = sum(counts)
        for idx, count in enumerate(counts):
            el = elems[idx]
            assert el is not None
            if count != W.reduced_word_count(el):
                path_counts_match = False
                counterexample = (
                    f"{count} plays reach {graph.nodes[idx]} but its element "
                    f"has {W.reduced_word_count(el)} reduced words"
                )
                break

    words_enumerated = False
    word_sets_match = True
    if path_counts_match and total_paths <= enumeration_cap:
        words_enumerated = True
        paths: list[set[tuple[int, ...]]] = [set() for _ in graph.nodes]
        paths[graph.start].add(())
        for src, v, dst in graph.edges:
            paths[dst].update(p + (v,) for p in paths[src])
        for idx in range(len(graph.nodes)):
            el = elems[idx]
            assert el is not None
            reversed_paths = {tuple(reversed(p)) for p in paths[idx]}
            if reversed_paths != W.reduced_words(el):
                word_sets_match = False
                counterexample = (
                    f"play set and reduced-word set differ at {graph.nodes[idx]}"
                )
                break

    return BijectionReport(
        diagram_label=diagram.label,
        active=tuple(sorted(spec.active)),
        node_count=len(graph.nodes),
        quotient_size=len(system.reps),
        counts_match=counts_match,
        elements_bijective=elements_bijective,
        descents_match_edges=descents_match_edges,
        path_counts_match=path_counts_match,
        words_enumerated=words_enumerated,
        word_sets_match=word_sets_match,
        total_paths=total_paths,
        counterexample=counterexample,
    )


# -- chip total versus coroot heights ----------------------------------------------


@dataclass(frozen=True)
class RootCountingReport:
    diagram_label: str
    active: tuple[int, ...]
    final_config: Config
    total_chips: int
    coroot_height_sum: int
    steps: int

    @property
    def equal(self) -> bool:
        return self.total_chips == self.coroot_height_sum


def root_counting_check(
    diagram: DynkinDiagram, active: Iterable[int]
) -> RootCountingReport:
    """Play to termination and compare chips against coroot height sums.

    The total chip count of the final configuration must equal the sum of
    the active-set heights of all positive coroots lying outside the
    subsystem spanned by the inactive vertices.  Per-step increments are
    verified against the pairing gain along the way.
    """
    active = frozenset(active)
    spec = modified_game(diagram, active)
    result = play(spec, strategy="lowest", verify=True)
    if result.final is None:
        raise AssertionError("modified game failed to terminate under the cap")
    coroots = positive_coroots(diagram)
    outside = roots_outside(coroots, spec.inactive)
    total = sum(result.final)
    expected = sum(i_height(c, active) for c in outside)
    return RootCountingReport(
        diagram_label=diagram.label,
        active=tuple(sorted(active)),
        final_config=result.final,
        total_chips=total,
        coroot_height_sum=expected,
        steps=len(result.moves),
    )


# -- serialization ------------------------------------------------------------------


def trace_dict(spec: GameSpec, result: PlayResult) -> dict:
    """Game trace: spec, moves, every configuration, final state and word."""
    word: list[int] | None = None
    if spec.mode == "modified" and spec.diagram.is_crystallographic:
        word = list(reversed(result.moves))
    return {
        "spec": spec.to_json_dict(),
        "moves": list(result.moves),
        "configs": [list(c) for c in result.configs],
        "final": list(result.final) if result.final is not None else None,
        "diverged": result.diverged,
        "word": word,
    }


def trace_json(spec: GameSpec, result: PlayResult) -> str:
    return json.dumps(trace_dict(spec, result), sort_keys=True)
