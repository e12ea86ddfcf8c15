"""Build diagrams from the catalog or by hand, and enumerate their roots."""

from kostant import (
    catalog_diagram,
    custom_diagram,
    positive_coroots,
    positive_roots,
)

# Catalog diagrams come with Bourbaki numbering and an ASCII picture.
for label in [("A", 3), ("B", 3), ("F", 4), ("G", 2)]:
    d = catalog_diagram(*label)
    print(f"{d.label}:  {d.ascii_art()}")
    print("  Cartan matrix:")
    for row in d.cartan().rows:
        print("   ", row)

# Positive roots are integer coefficient vectors over the simple roots,
# sorted by height.  Coroots are the positive roots of the arrow-reversed
# diagram.
b2 = catalog_diagram("B", 2)
print("\nB2 positive roots: ", positive_roots(b2))
print("B2 positive coroots:", positive_coroots(b2))

# Custom graphs are fine for playing games, but only crystallographic ones
# (finite root systems) support root-level operations.
star = custom_diagram(5, [(1, 2), (1, 3), (1, 4), (1, 5)], "affine-star")
print(f"\n{star.label}: crystallographic = {star.is_crystallographic}")

f4 = catalog_diagram("F", 4)
print(f"F4 has {len(positive_roots(f4))} positive roots; the highest is "
      f"{positive_roots(f4)[-1]}")
