"""Exhaustive cross-checks between the game and its independent oracles.

Each sweep runs two separately implemented routes to the same answer
over a whole family of inputs and reports every case checked.  The
sweeps power both the command-line ``verify`` subcommands and the
acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .automaton import build_dfa
from .diagram import DynkinDiagram, catalog_diagram, iter_catalog
from .game import (
    modified_game,
    reachable_graph,
    root_counting_check,
    verify_bijection,
)
from .tableaux import count_syt, fill_tableau, sequence_of_tableau, shape_of
from .tableaux import grassmannian_from_element
from .weyl import WeylGroup

__all__ = [
    "SweepOutcome",
    "bijection_sweep",
    "root_counting_sweep",
    "dfa_language_sweep",
    "syt_bijection_sweep",
    "binomial_count_sweep",
]


@dataclass
class SweepOutcome:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return f"{self.name}: {self.checked} cases checked, {status}"


def _nonempty_subsets(n: int):
    for r in range(1, n + 1):
        yield from combinations(range(1, n + 1), r)


def bijection_sweep(max_rank: int) -> SweepOutcome:
    """Configurations versus minimal coset representatives, all active sets."""
    outcome = SweepOutcome(f"bijection sweep (rank <= {max_rank})")
    for diagram in iter_catalog(max_rank):
        group = WeylGroup(diagram)
        for active in _nonempty_subsets(diagram.n):
            report = verify_bijection(modified_game(diagram, active), group=group)
            outcome.checked += 1
            if not report.ok:
                outcome.fail(
                    f"{diagram.label} I={active}: {report.counterexample}"
                )
    return outcome


def quotient_count_sweep(max_rank: int) -> SweepOutcome:
    """Reachable-configuration counts versus |W| / |W_J|."""
    outcome = SweepOutcome(f"quotient count sweep (rank <= {max_rank})")
    for diagram in iter_catalog(max_rank):
        group = WeylGroup(diagram)
        for active in _nonempty_subsets(diagram.n):
            graph = reachable_graph(modified_game(diagram, active))
            J = frozenset(range(1, diagram.n + 1)) - set(active)
            expected = len(group) // group.parabolic_subgroup_order(J)
            outcome.checked += 1
            if len(graph.nodes) != expected:
                outcome.fail(
                    f"{diagram.label} I={active}: {len(graph.nodes)} "
                    f"configurations, quotient has {expected}"
                )
    return outcome


def root_counting_sweep(max_rank: int) -> SweepOutcome:
    """Final chip totals versus coroot height sums, all active sets."""
    outcome = SweepOutcome(f"root counting sweep (rank <= {max_rank})")
    for diagram in iter_catalog(max_rank):
        for active in _nonempty_subsets(diagram.n):
            report = root_counting_check(diagram, active)
            outcome.checked += 1
            if not report.equal:
                outcome.fail(
                    f"{diagram.label} I={active}: chips {report.total_chips} "
                    f"!= coroot sum {report.coroot_height_sum}"
                )
    return outcome


def binomial_count_sweep(max_n: int) -> SweepOutcome:
    """Single-source counts on the path: C(n, k) configurations."""
    outcome = SweepOutcome(f"binomial count sweep (n <= {max_n})")
    for n in range(2, max_n + 1):
        diagram = catalog_diagram("A", n - 1)
        for k in range(1, n):
            graph = reachable_graph(modified_game(diagram, {k}))
            outcome.checked += 1
            if len(graph.nodes) != comb(n, k):
                outcome.fail(
                    f"A{n - 1} I={{{k}}}: {len(graph.nodes)} != C({n},{k})"
                )
    return outcome


def dfa_language_sweep(max_rank: int) -> SweepOutcome:
    """Accepted words versus oracle reduced words, every inactive set.

    The automaton's language, read to the maximal word length, must equal
    the reversed reduced words of all minimal coset representatives.
    """
    outcome = SweepOutcome(f"automaton language sweep (rank <= {max_rank})")
    for diagram in iter_catalog(max_rank):
        group = WeylGroup(diagram)
        n = diagram.n
        for active in _nonempty_subsets(n):
            J = frozenset(range(1, n + 1)) - set(active)
            system = group.minimal_coset_reps(J)
            expected: set[tuple[int, ...]] = set()
            for w in system.reps:
                for word in group.reduced_words(w):
                    expected.add(tuple(reversed(word)))
            dfa = build_dfa(diagram, active)
            max_len = system.longest.length
            accepted = {
                word
                for words in dfa.enumerate_language(max_len).values()
                for word in words
            }
            outcome.checked += 1
            if accepted != expected:
                outcome.fail(
                    f"{diagram.label} J={sorted(J)}: language has "
                    f"{len(accepted)} words, oracle has {len(expected)}"
                )
                continue
            longer = dfa.enumerate_language(max_len + 1).get(max_len + 1)
            if longer:
                outcome.fail(
                    f"{diagram.label} J={sorted(J)}: accepted a word longer "
                    f"than the longest representative"
                )
    return outcome


def syt_bijection_sweep(max_n: int) -> SweepOutcome:
    """Game sequences versus standard tableaux for every single source.

    For each minimal representative the number of legal sequences must be
    the hook-length count of its shape, the fillings must be distinct
    standard tableaux of that shape, and peeling must invert filling.
    """
    outcome = SweepOutcome(f"tableau bijection sweep (n <= {max_n})")
    for n in range(2, max_n + 1):
        diagram = catalog_diagram("A", n - 1)
        group = WeylGroup(diagram)
        for k in range(1, n):
            spec = modified_game(diagram, {k})
            graph = reachable_graph(spec)
            # Collect every play per reachable configuration.
            plays: list[set[tuple[int, ...]]] = [set() for _ in graph.nodes]
            plays[graph.start].add(())
            for src, v, dst in graph.edges:
                plays[dst].update(p + (v,) for p in plays[src])
            J = frozenset(range(1, n)) - {k}
            system = group.minimal_coset_reps(J)
            by_config = {}
            from .game import config_of_element

            for w in system.reps:
                by_config[config_of_element(w, diagram, {k})] = w
            for idx, config in enumerate(graph.nodes):
                w = by_config[config]
                perm = grassmannian_from_element(w, k)
                shape = shape_of(perm)
                sequences = plays[idx]
                outcome.checked += 1
                if len(sequences) != count_syt(shape):
                    outcome.fail(
                        f"A{n - 1} k={k}: {len(sequences)} plays for shape "
                        f"{shape}, hook count {count_syt(shape)}"
                    )
                    continue
                tableaux = set()
                for seq in sequences:
                    t = fill_tableau(seq, n, k)
                    if t.shape != shape:
                        outcome.fail(
                            f"A{n - 1} k={k}: filling of {seq} has shape "
                            f"{t.shape}, expected {shape}"
                        )
                        break
                    if sequence_of_tableau(t, n, k) != seq:
                        outcome.fail(
                            f"A{n - 1} k={k}: round trip failed for {seq}"
                        )
                        break
                    tableaux.add(t)
                else:
                    if len(tableaux) != len(sequences):
                        outcome.fail(
                            f"A{n - 1} k={k}: fillings collide for shape {shape}"
                        )
    return outcome
