"""Single-source games on a path build standard Young tableaux, box by box.

Firing vertex i at step j writes j on the diagonal of content i - k
(k is the source).  Different plays for the same endpoint give the
different standard fillings of one shape.
"""

from kostant import catalog_diagram
from kostant.game import modified_game, play, reachable_graph
from kostant.tableaux import (
    count_syt,
    fill_tableau,
    grassmannian_from_element,
    sequence_of_tableau,
    shape_of,
)
from kostant.game import config_of_element
from kostant.weyl import WeylGroup

# The two plays on the 3-vertex path with source at 2 that end at (1,2,1).
for seq in [(2, 1, 3, 2), (2, 3, 1, 2)]:
    t = fill_tableau(seq, 4, 2)
    print(f"moves {seq}:")
    print(t.render())
    print("  peeled back:", sequence_of_tableau(t, 4, 2))

# Shapes come from the one-line form of the coset representative.
W = WeylGroup(catalog_diagram("A", 3))
w = W.element_of_word((2, 1, 3, 2))
perm = grassmannian_from_element(w, 2)
print(f"\none-line {perm.one_line}, shape {shape_of(perm)}, "
      f"{count_syt(shape_of(perm))} standard fillings")

# Count plays per endpoint and compare with the hook-length formula.
n, k = 6, 3
diagram = catalog_diagram("A", n - 1)
graph = reachable_graph(modified_game(diagram, {k}))
plays = [set() for _ in graph.nodes]
plays[graph.start].add(())
for src, v, dst in graph.edges:
    plays[dst].update(p + (v,) for p in plays[src])
W = WeylGroup(diagram)
print(f"\nA{n - 1} with source {k}: plays per endpoint vs hook counts")
for rep in W.minimal_coset_reps(frozenset(range(1, n)) - {k}).reps:
    config = config_of_element(rep, diagram, {k})
    shape = shape_of(grassmannian_from_element(rep, k))
    found = len(plays[graph.index[config]])
    print(f"  shape {str(shape):12} plays {found:3}  hooks {count_syt(shape):3}")
