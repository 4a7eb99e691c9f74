#!/usr/bin/env python3
"""Hypergroups: set-valued multiplication with group-like axioms.

The two-element table with 1+1 = {0,1} is the smallest hypergroup that is not
a group; the three-element rule of signs is another.  Every construction here
is verified exhaustively, and failed tables come back as witness reports.
"""

import schemeforge as sf

k = sf.krasner_hypergroup()
print("two-element hypergroup K:")
for a in range(2):
    for b in range(2):
        print(f"    {a}+{b} = {sorted(k.table[a][b])}")

print("\nthe Boolean table 1+1={1} is rejected (no inverse for 1):")
report = sf.build_hypergroup([[{0}, {1}], [{1}, {1}]], 0, (0, 1))
for v in report.violations:
    print("   ", v.text())

sign = sf.sign_hypergroup()
print("\nrule of signs on {0, +, -} (encoded 0, 1, 2):")
print("    1+2 =", sorted(sign.table[1][2]), " (a positive plus a negative can be anything)")
print("    sub-hypergroups:", [sorted(t) for t in sf.sub_hypergroups(sign)])
print("    note: {0,1} is closed under + but 1 has no inverse inside it")

print("\nquotients by congruences: Z/6 with blocks {0,3},{1,4},{2,5} collapses to Z/3:")
z6 = sf.group_hypergroup(sf.cyclic_group(6))
c = sf.CongruenceRelation.from_blocks([[0, 3], [1, 4], [2, 5]], 6)
q = sf.congruence_quotient(z6, c)
print("    quotient equals Z/3:", q == sf.group_hypergroup(sf.cyclic_group(3)))
kernel = {0, 3}
print(
    "    same thing via the kernel coset quotient:",
    sf.hypergroup_isomorphic(q, sf.quotient_hypergroup(z6, kernel)) is not None,
)

print("\npartition hypergroups: conjugacy classes of S3 under inner automorphisms:")
g = sf.symmetric_group(3)
h = sf.partition_hypergroup(g, sf.inner_automorphisms(g))
names = {0: "[e]", 1: "[transpositions]", 2: "[3-cycles]"}
for a in range(3):
    for b in range(a, 3):
        cells = ", ".join(names[t] for t in sorted(h.table[a][b]))
        print(f"    {names[a]} * {names[b]} = {{{cells}}}")
