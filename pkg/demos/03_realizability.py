#!/usr/bin/env python3
"""From schemes to hypergroups and back.

Every scheme yields a hypergroup on its classes: p*q collects the classes with
a nonzero intersection number.  Going back is harder; a hypergroup is called
realizable when some scheme produces it.  The bounded exhaustive search below
finds a 3-point realization of K and shows that no scheme on up to 6 points
realizes the rule of signs.
"""

import schemeforge as sf
from schemeforge import catalog

print("class hypergroup of the Hamming square (4 words of length 2):")
h = sf.to_hypergroup(catalog.catalog_scheme("hamming-2"))
for a in range(h.m):
    for b in range(a, h.m):
        print(f"    {a}*{b} = {sorted(h.table[a][b])}")

print("\nscheme morphisms induce hypergroup homomorphisms:")
z4 = catalog.catalog_scheme("Z4")
morph, quotient = sf.quotient_projection(z4, {0, 2})
report = sf.check_morphism(morph)
print(f"    quotient projection: morphism={report.morphism} admissible={report.admissible}")
hom = sf.induced_hom(morph)
print(f"    induced map on classes: {hom.elem_map} (strict: {hom.strict})")

print("\nsearching for a scheme that realizes K:")
found = sf.search_realization(sf.krasner_hypergroup(), 3, progress=lambda s: print("   ", s))
print(f"    found on {found.n} points; relation matrix {found.rel.tolist()}")
print(
    "    matches the 3-point unit-scaling partition:",
    sf.scheme_isomorphic(found, catalog.catalog_scheme("F3")) is not None,
)

print("\nsearching for a scheme that realizes the rule of signs (there is none <= 6):")
result = sf.search_realization(sf.sign_hypergroup(), 6, progress=lambda s: print("   ", s))
print(f"    result: {result}")
print("    (transitivity of the positive class would force a linear order,")
print("     which no constant-valency relation matrix can carry)")
