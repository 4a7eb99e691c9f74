#!/usr/bin/env python3
"""Association schemes from groups.

A finite group G gives a scheme on its own elements: pairs (a, b) and (c, d)
sit in the same class exactly when a*b^-1 = c*d^-1.  The structure constants
then become 0/1 indicators of the multiplication table, closed class subsets
are the subgroups, and primitivity mirrors simplicity.
"""

import schemeforge as sf

g = sf.cyclic_group(4)
s = sf.group_scheme(g)
print(f"scheme of Z/4: {s.n} points, {s.s} classes")
print("relation matrix:")
for row in s.rel.tolist():
    print("   ", row)

print("\nnonzero structure constants (class p, class q -> class r):")
for p in range(s.s):
    for q in range(s.s):
        (r,) = sf.complex_mult(s, {p}, {q})
        print(f"    {p} * {q} -> {r}")

print("\nclosed subsets (one per subgroup of Z/4):")
for t in sf.closed_subsets(s):
    print("   ", sorted(t))

print("\nprimitivity across small groups, compared with simplicity:")
for name, group in [
    ("Z2", sf.cyclic_group(2)),
    ("Z5", sf.cyclic_group(5)),
    ("Z6", sf.cyclic_group(6)),
    ("S3", sf.symmetric_group(3)),
    ("A4", sf.alternating_group(4)),
]:
    scheme = sf.partition_scheme(group, sf.inner_automorphisms(group))
    print(f"    ({name}, inner automorphisms): primitive = {sf.is_primitive(scheme)}")

print("\nthe flag scheme of the Fano plane is a scheme that is NOT commutative:")
fano = sf.fano_flag_scheme()
print(f"    {fano.n} flags, {fano.s} classes, commutative = {sf.is_commutative(fano)}")
print(f"    valencies: {fano.valency}")
