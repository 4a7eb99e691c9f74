#!/usr/bin/env python3
"""Quotient hyperrings and the projective geometries they carry.

Dividing a finite ring by a subgroup of its units leaves orbit classes with a
set-valued addition [a]+[b] = {[g1*a + g2*b]} and a single-valued product.
When every class satisfies x+x = {0, x}, the nonzero classes behave like the
points of a projective geometry: the line through two points is their sum.
Dividing GF(64) by the unit group of its GF(4) subfield yields exactly the
projective plane of order 4.
"""

import schemeforge as sf
from schemeforge import catalog

print("GF(4)^x inside GF(16): dividing gives 6 classes")
r16 = sf.gf_ring(16)
q16 = sf.quotient_hyperring(r16, sf.units_of_order_dividing(r16, 3))
print("    x+x for each nonzero class:",
      [sorted(q16.hypergroup.table[x][x]) for x in range(1, 6)])
print("    vector-space law x+x={0,x} holds:", sf.is_k_vector_space(q16.hypergroup))
g16 = sf.geometry_from_hypergroup(q16.hypergroup)
print(f"    geometry: {g16.n_points} points on {len(g16.lines)} line(s) "
      f"(the projective line over GF(4))")

print("\nGF(4)^x inside GF(64): the projective plane of order 4")
r64 = sf.gf_ring(64)
q64 = sf.quotient_hyperring(r64, sf.units_of_order_dividing(r64, 3))
g64 = sf.geometry_from_hypergroup(q64.hypergroup)
sizes = sorted({len(line) for line in g64.lines})
print(f"    {g64.n_points} points, {len(g64.lines)} lines, points per line: {sizes}")
print("    incidence axioms verified:", sf.check_geometry(g64.n_points, g64.lines) == [])

print("\nthe same object as a 64-point association scheme:")
scheme = catalog.catalog_scheme("F64/F4")
print(f"    {scheme.n} points, {scheme.s} classes")
h = sf.to_hypergroup(scheme)
print("    collinearity is readable from complex multiplication:")
p, q = 0, 1
line = next(set(l) for l in g64.lines if p in l and q in l)
others = sorted(x for x in line if x not in (p, q))
print(f"    line through points {p},{q}: remaining points {others}")
print(f"    complex product of the matching classes: "
      f"{sorted(x - 1 for x in h.table[p + 1][q + 1])}")

print("\nmultiplication descends to the classes and distributes over the sum:")
print("    class product table of GF(16)/GF(4)^x:", q16.mult)
