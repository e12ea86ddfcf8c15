"""Picard number, index and dimension data for parabolic subsets.

For a diagram with simple roots ``Delta`` and a proper subset
``Delta_P``, the associated coadjoint-orbit data are three integers:
the Picard number ``|Delta \\ Delta_P|``, the dimension
``|Phi+ \\ Phi+_{Delta_P}|``, and for each excluded simple root
``beta`` the pairing sum ``n_beta`` over the roots outside the
subsystem.  The strong inequality bounds ``sum (n_beta - 1)`` by the
dimension; the gcd consequence bounds ``picard * (gcd(n_beta) - 1)``.
This module computes the data exactly and sweeps every catalog diagram
for violations (there are none) and equality cases.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .diagram import DynkinDiagram, iter_catalog
from .roots import pairing, positive_roots, roots_outside, roots_supported_on

__all__ = [
    "DegenerateDatumError",
    "ParabolicDatum",
    "parabolic_datum",
    "InequalityCheck",
    "check_strong_inequality",
    "check_mukai_consequence",
    "SweepRow",
    "SweepReport",
    "sweep",
]


class DegenerateDatumError(ValueError):
    """The subset equals the whole simple system; no data to compute."""


@dataclass(frozen=True)
class ParabolicDatum:
    diagram: DynkinDiagram
    delta_p: frozenset[int]
    picard: int
    dimension: int
    n_beta: dict[int, int]
    index_gcd: int

    def __post_init__(self) -> None:
        if any(v < 2 for v in self.n_beta.values()):
            raise AssertionError("every pairing sum n_beta must be at least 2")
        if self.dimension < self.picard:
            raise AssertionError("dimension cannot fall below the Picard number")


def parabolic_datum(
    diagram: DynkinDiagram, delta_p: Iterable[int]
) -> ParabolicDatum:
    """Exact Picard/dimension/index data for a proper subset of vertices."""
    subset = frozenset(delta_p)
    vertices = set(range(1, diagram.n + 1))
    if not subset <= vertices:
        raise ValueError("subset contains unknown vertices")
    if subset == vertices:
        raise DegenerateDatumError("subset must be a proper subset of the vertices")
    cartan = diagram.cartan()
    pos = positive_roots(diagram)
    outside = roots_outside(pos, subset)
    excluded = sorted(vertices - subset)
    n_beta = {
        beta: sum(pairing(cartan, alpha, beta) for alpha in outside)
        for beta in excluded
    }
    index_gcd = 0
    for value in n_beta.values():
        index_gcd = gcd(index_gcd, value)
    return ParabolicDatum(
        diagram=diagram,
        delta_p=subset,
        picard=len(excluded),
        dimension=len(outside),
        n_beta=n_beta,
        index_gcd=index_gcd,
    )


@dataclass(frozen=True)
class InequalityCheck:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs


def check_strong_inequality(datum: ParabolicDatum) -> InequalityCheck:
    """``sum_beta (n_beta - 1) <= dimension``."""
    lhs = sum(v - 1 for v in datum.n_beta.values())
    return InequalityCheck(lhs, datum.dimension)


def check_mukai_consequence(datum: ParabolicDatum) -> InequalityCheck:
    """``picard * (gcd(n_beta) - 1) <= dimension``.

    Weaker than the strong inequality since the gcd is at most each
    ``n_beta``; that domination is asserted.
    """
    lhs = datum.picard * (datum.index_gcd - 1)
    strong = check_strong_inequality(datum)
    if lhs > strong.lhs:
        raise AssertionError("gcd consequence exceeded the strong left side")
    return InequalityCheck(lhs, datum.dimension)


@dataclass(frozen=True)
class SweepRow:
    family: str
    label: str
    delta_p_mask: int
    picard: int
    dimension: int
    index_gcd: int
    lhs_strong: int
    lhs_mukai: int
    holds: bool
    equality: bool


@dataclass(frozen=True)
class SweepReport:
    rows: tuple[SweepRow, ...]
    checked: int

    @property
    def violations(self) -> tuple[SweepRow, ...]:
        return tuple(r for r in self.rows if not r.holds)

    @property
    def equality_cases(self) -> tuple[SweepRow, ...]:
        return tuple(r for r in self.rows if r.equality)

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(
            "diagram,label,delta_p_bitmask,picard,dimension,gcd,"
            "lhs_strong,lhs_mukai,holds,equality\n"
        )
        for r in self.rows:
            out.write(
                f"{r.family},{r.label},{r.delta_p_mask},{r.picard},"
                f"{r.dimension},{r.index_gcd},{r.lhs_strong},{r.lhs_mukai},"
                f"{str(r.holds).lower()},{str(r.equality).lower()}\n"
            )
        return out.getvalue()


def _mask_to_subset(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(1, n + 1) if mask & (1 << (v - 1)))


def sweep(max_rank: int) -> SweepReport:
    """Every catalog diagram of rank at most ``max_rank``, every proper subset.

    Rows are ordered by diagram and subset bitmask.  Positive-root data
    only, so ranks up to 8 stay cheap.
    """
    rows: list[SweepRow] = []
    for diagram in iter_catalog(max_rank):
        n = diagram.n
        for mask in range(2**n - 1):
            datum = parabolic_datum(diagram, _mask_to_subset(mask, n))
            strong = check_strong_inequality(datum)
            mukai = check_mukai_consequence(datum)
            rows.append(
                SweepRow(
                    family=diagram.label[0],
                    label=diagram.label,
                    delta_p_mask=mask,
                    picard=datum.picard,
                    dimension=datum.dimension,
                    index_gcd=datum.index_gcd,
                    lhs_strong=strong.lhs,
                    lhs_mukai=mukai.lhs,
                    holds=strong.holds and mukai.holds,
                    equality=mukai.equality,
                )
            )
    return SweepReport(tuple(rows), len(rows))
