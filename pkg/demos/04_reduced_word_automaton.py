"""Compile a game into a finite automaton for its reduced-word language."""

from kostant import catalog_diagram
from kostant.automaton import build_dfa

# Sources on {2} only: the machine for the quotient by the parabolic on
# vertex 1.  Three configuration states plus a trap.
dfa = build_dfa(catalog_diagram("A", 2), {2})
print("states:", dfa.labels)
print("accepts ():", dfa.accepts(()))
print("accepts (2,):", dfa.accepts((2,)))
print("accepts (2,1):", dfa.accepts((2, 1)))
print("accepts (1,):", dfa.accepts((1,)))

print("\nlanguage by length:")
for length, words in dfa.enumerate_language(5).items():
    print(f"  {length}: {[''.join(f's{i}' for i in w) or 'empty' for w in words]}")

# Full active set: all reduced words of the group.
full = build_dfa(catalog_diagram("B", 2), {1, 2})
print(f"\nB2 with every vertex active: {full.word_count(10)} accepted words")

small = full.minimize()
print(f"minimization: {len(full.labels)} -> {len(small.labels)} states, "
      f"language unchanged: {small.enumerate_language(8) == full.enumerate_language(8)}")

print("\nDOT output, ready for graphviz:")
print(dfa.to_dot())
