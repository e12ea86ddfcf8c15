"""The source-augmented game and the coset quotient it secretly plays in.

Put a unit source on a set I of vertices and start from zero.  Legal
firing sequences are exactly the reduced words (read right to left) of
the minimal-length representatives of W / W_J, where J is the complement
of I; configurations biject with representatives, and the final chip
count equals a sum of coroot heights.
"""

from kostant import catalog_diagram
from kostant.game import (
    modified_game,
    play,
    reachable_graph,
    root_counting_check,
    verify_bijection,
    word_of,
)
from kostant.weyl import WeylGroup

# The two-source game on A2, step by step.
a2 = catalog_diagram("A", 2)
spec = modified_game(a2, {1, 2})
result = play(spec, "lowest", verify=True)
for v, c in zip(result.moves, result.configs[1:]):
    print(f"fire {v} -> {c}")
element = word_of(result.moves, spec)
print(f"word length {element.length}; final configuration {result.final}")

# Every configuration is a coset representative and vice versa.
report = verify_bijection(spec)
print(f"\nA2, I={{1,2}}: {report.node_count} configurations = "
      f"{report.quotient_size} representatives; "
      f"all {report.total_paths} plays are reduced words: {report.ok}")

# The same machine at F4 scale: 1152 configurations, one per element.
f4 = catalog_diagram("F", 4)
report = verify_bijection(modified_game(f4, {1, 2, 3, 4}), group=WeylGroup(f4))
print(f"F4, I=all: {report.node_count} configurations, "
      f"{report.total_paths} distinct plays, verified: {report.ok}")

# Chip totals against coroot heights.
for active in [{1, 2}, {1}, {2}]:
    check = root_counting_check(a2, active)
    print(f"A2, I={sorted(active)}: final {check.final_config}, "
          f"{check.total_chips} chips = "
          f"coroot height sum {check.coroot_height_sum}")

# The branching structure itself, as DOT.
graph = reachable_graph(modified_game(catalog_diagram("A", 4), {2}))
print(f"\nA4, I={{2}}: {len(graph.nodes)} configurations "
      f"(binomial C(5,2)); DOT export has {len(graph.edges)} arrows")
