"""Picard number, index and dimension for every parabolic datum.

For each catalog diagram and proper vertex subset, three integers come
straight from the positive roots; the sweep confirms the dimension bound
holds everywhere and spots the projective-space equality cases.
"""

from kostant import catalog_diagram
from kostant.mukai import (
    check_mukai_consequence,
    check_strong_inequality,
    parabolic_datum,
    sweep,
)

# One datum in detail: the projective plane, where the bound is tight.
datum = parabolic_datum(catalog_diagram("A", 2), {2})
strong = check_strong_inequality(datum)
weak = check_mukai_consequence(datum)
print(f"A2 keeping vertex 2: picard {datum.picard}, dimension "
      f"{datum.dimension}, pairing sums {datum.n_beta}, gcd {datum.index_gcd}")
print(f"  strong bound {strong.lhs} <= {strong.rhs} "
      f"(equality: {strong.equality})")
print(f"  gcd bound    {weak.lhs} <= {weak.rhs} (equality: {weak.equality})")

# The full sweep.
report = sweep(6)
print(f"\nrank <= 6 sweep: {report.checked} data, "
      f"{len(report.violations)} violations, "
      f"{len(report.equality_cases)} equality cases")
print("equality cases (all projective spaces in disguise):")
for row in report.equality_cases:
    print(f"  {row.label}, kept-subset mask {row.delta_p_mask:06b}, "
          f"dimension {row.dimension}, gcd {row.index_gcd}")

print("\nCSV preview:")
print("\n".join(report.to_csv().splitlines()[:6]))
