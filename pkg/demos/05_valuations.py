#!/usr/bin/env python3
"""Valuation distance schemes and min-rule chain hypergroups.

An ultrametric value map on a finite ring partitions pairs by the value of
their difference.  The partition is always an association scheme, and when the
triangle condition holds (every pair at distance r admits a third point
equidistant from both, with a count independent of the pair), the class
hypergroup is the min-rule hypergroup of the value chain.

Z/9 with the 3-adic map satisfies the condition.  Z/8 with the 2-adic map does
NOT: over a binary residue field, two elements of equal value always sum to
something strictly larger, so no equilateral triangles exist and the diagonal
of the class hypergroup skips its own value.
"""

from math import inf

import schemeforge as sf
from schemeforge import catalog

print("Z/9 with the 3-adic value map (chain 0 < 1 < inf):")
z9 = sf.padic_valued_ring(9, 3)
print("    values:", [z9.value(x) for x in range(9)])
print("    triangle condition:", sf.check_triangle_condition(z9).ok)
s9 = sf.valuation_scheme(z9)
h9 = sf.to_hypergroup(s9)
print("    class hypergroup equals the min-rule chain hypergroup:",
      h9 == sf.linear_hypergroup((0, 1, inf)))

print("\ntrivial value map on F5 realizes K on 5 points:")
f5 = sf.trivial_valued_ring(sf.zmod_ring(5))
s5 = sf.valuation_scheme(f5)
print("    class hypergroup is K:",
      sf.to_hypergroup(s5) == sf.krasner_hypergroup())

print("\nZ/8 with the 2-adic value map (chain 0 < 1 < 2 < inf):")
z8 = sf.padic_valued_ring(8, 2)
report = sf.check_triangle_condition(z8)
print("    triangle condition:", report.ok)
for v in report.violations:
    print("   ", v.text())
print("    the distance partition is still a scheme (unit-scaling orbits):")
s8 = catalog.catalog_scheme("Z8-2adic")
print(f"    {s8.n} points, {s8.s} classes")
h8 = sf.to_hypergroup(s8)
print("    diagonal cells skip their own value:")
for x in range(1, 4):
    print(f"        class {x}: x+x = {sorted(h8.table[x][x])}  "
          f"(min-rule would give {sorted({0} | set(range(x, 4)))})")
print("    so this hypergroup is NOT the chain hypergroup:",
      sf.hypergroup_isomorphic(h8, sf.linear_hypergroup(z8.chain)) is None)

print("\nmin-rule hypergroups directly from a chain:")
lin = sf.linear_hypergroup(("a", "b", inf))
print("    chain a < b < top:  a+a =", sorted(lin.table[1][1]),
      " a+b =", sorted(lin.table[1][2]))
