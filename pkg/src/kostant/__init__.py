"""Chip-firing games on Dynkin diagrams and the structures they generate.

The package builds crystallographic root systems from Dynkin diagrams,
plays the classical and source-augmented chip-firing games on them,
enumerates Weyl groups and their parabolic quotients as an independent
oracle, compiles the game's configuration graph into a reduced-word
automaton, converts type-A games into standard Young tableaux, and
sweeps the Picard/index/dimension inequality over parabolic data.
"""

from .diagram import (
    CartanMatrix,
    DiagramError,
    DynkinDiagram,
    catalog_diagram,
    custom_diagram,
    diagram_from_json,
    iter_catalog,
)
from .roots import (
    NonFiniteTypeError,
    NotCrystallographicError,
    height,
    highest_root,
    i_height,
    pairing,
    positive_coroots,
    positive_roots,
    reflect,
)

__all__ = [
    "CartanMatrix",
    "DiagramError",
    "DynkinDiagram",
    "catalog_diagram",
    "custom_diagram",
    "diagram_from_json",
    "iter_catalog",
    "NonFiniteTypeError",
    "NotCrystallographicError",
    "height",
    "highest_root",
    "i_height",
    "pairing",
    "positive_coroots",
    "positive_roots",
    "reflect",
]

__version__ = "0.1.0"
