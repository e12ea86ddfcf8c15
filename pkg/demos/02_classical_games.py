"""The classical game: one chip on a vertex, fire sad vertices until calm.

Started from a single chip on vertex i, the reachable configurations are
positive roots; on a simply-laced diagram every play ends at the highest
root, while multiple edges can split the endgame, and affine graphs never
settle at all.
"""

from kostant import catalog_diagram, custom_diagram
from kostant.game import classical_game, play, reachable_graph


def basis(n, i):
    return tuple(int(j == i - 1) for j in range(n))


# D4: every basis start drains into the highest root (1,2,1,1).
d4 = catalog_diagram("D", 4)
union = set()
for i in range(1, 5):
    graph = reachable_graph(classical_game(d4, basis(4, i)))
    union |= set(graph.nodes)
    print(f"D4 from e{i}: {len(graph.nodes)} configurations, "
          f"sink {graph.nodes[graph.sinks[0]]}")
print(f"D4 union over starts: {len(union)} configurations "
      "(one per positive root)")

# F4: the double edge breaks the symmetry; two different terminals exist.
f4 = catalog_diagram("F", 4)
for i in (1, 4):
    result = play(classical_game(f4, basis(4, i)))
    print(f"F4 from e{i}: terminal {result.final} "
          f"after moves {result.moves}")

# The affine star never terminates: the center and the leaves keep
# reawakening each other.
star = custom_diagram(5, [(1, 2), (1, 3), (1, 4), (1, 5)], "affine-star")
result = play(classical_game(star, (1, 1, 1, 1, 1), step_cap=1000))
print(f"\naffine star from all ones: diverged = {result.diverged} "
      f"after {len(result.moves)} moves; chips now {sum(result.configs[-1])}")
