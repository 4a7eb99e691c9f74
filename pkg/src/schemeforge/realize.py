"""From schemes to hypergroups: the class-set hypergroup of a scheme, scheme
morphisms with admissibility and their induced hypergroup homomorphisms, and a
bounded exhaustive search for a scheme realizing a given hypergroup.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections.abc import Callable

import numpy as np

from .errors import SizeGuardError, Violation
from .hypergroup import Hypergroup, build_hypergroup, hypergroup_isomorphic
from .scheme import (
    AssociationScheme,
    build_scheme,
    double_cosets,
    product_scheme,
    quotient_blocks,
)

SEARCH_POINT_BOUND = 8
_WITNESS_CAP = 25


def to_hypergroup(scheme: AssociationScheme) -> Hypergroup:
    """The hypergroup on the classes of a scheme: p*q is the support of the
    structure constants, the identity is the diagonal class, inversion is star.
    """
    table = [
        [frozenset(int(r) for r in np.nonzero(scheme.constants[p, q])[0]) for q in scheme.classes()]
        for p in scheme.classes()
    ]
    out = build_hypergroup(table, 0, scheme.star)
    assert isinstance(out, Hypergroup), "every scheme yields a hypergroup"
    return out


@dataclasses.dataclass(frozen=True, eq=False)
class SchemeMorphism:
    source: AssociationScheme
    target: AssociationScheme
    point_map: tuple[int, ...]
    class_map: tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class MorphismReport:
    morphism: bool
    admissible: bool
    violations: tuple[Violation, ...]


def check_morphism(f: SchemeMorphism) -> MorphismReport:
    """Verify the structure-preservation condition and admissibility.

    A morphism carries every related point pair into the image class; it is
    admissible when every target pair starting at an image point lifts.
    Witnesses for each failed condition are collected in the report.
    """
    src, tgt = f.source, f.target
    bad: list[Violation] = []
    if len(f.point_map) != src.n or not all(0 <= u < tgt.n for u in f.point_map):
        bad.append(Violation("point_range", (len(f.point_map),)))
    if len(f.class_map) != src.s or not all(0 <= c < tgt.s for c in f.class_map):
        bad.append(Violation("class_range", (len(f.class_map),)))
    if bad:
        return MorphismReport(False, False, tuple(bad))

    pm = np.array(f.point_map, dtype=np.int64)
    cm = np.array(f.class_map, dtype=np.int64)
    image = tgt.rel[pm[:, None], pm[None, :]]
    expected = cm[src.rel]
    for x, y in np.argwhere(image != expected)[:_WITNESS_CAP]:
        bad.append(Violation("morphism", (int(x), int(y))))
    if not bad:
        # forced consequences, re-verified: identity class and star-equivariance
        if f.class_map[0] != 0:
            bad.append(Violation("class_identity", (f.class_map[0],)))
        for p in src.classes():
            if f.class_map[src.star[p]] != tgt.star[f.class_map[p]]:
                bad.append(Violation("class_star", (p,)))
    if bad:
        return MorphismReport(False, False, tuple(bad))

    admissible = True
    adm_bad: list[Violation] = []
    for x in range(src.n):
        fibers: dict[int, set[int]] = {}
        for z in range(src.n):
            fibers.setdefault(int(src.rel[x, z]), set()).add(int(pm[z]))
        for p in src.classes():
            hit = fibers.get(p, set())
            for y in range(tgt.n):
                if tgt.rel[pm[x], y] == f.class_map[p] and y not in hit:
                    admissible = False
                    adm_bad.append(Violation("admissible", (x, int(y), p)))
                    break
            if len(adm_bad) >= _WITNESS_CAP:
                break
        if len(adm_bad) >= _WITNESS_CAP:
            break
    return MorphismReport(True, admissible, tuple(adm_bad))


@dataclasses.dataclass(frozen=True, eq=False)
class InducedHom:
    """The hypergroup homomorphism a scheme morphism induces on class sets."""

    source: Hypergroup
    target: Hypergroup
    elem_map: tuple[int, ...]
    strict: bool


def induced_hom(f: SchemeMorphism) -> InducedHom:
    """Restrict a verified morphism to the classes and check the homomorphism law.

    Admissibility is not required: structure preservation alone makes the class
    map a hypergroup homomorphism.
    """
    report = check_morphism(f)
    if not report.morphism:
        raise ValueError(f"not a morphism: {report.violations[0].text()}")
    hs, ht = to_hypergroup(f.source), to_hypergroup(f.target)
    cm = f.class_map
    strict = True
    for p, q in itertools.product(range(hs.m), repeat=2):
        image = {cm[r] for r in hs.table[p][q]}
        cell = ht.table[cm[p]][cm[q]]
        assert image <= cell, "induced class map must be a homomorphism"
        if image != cell:
            strict = False
    return InducedHom(source=hs, target=ht, elem_map=cm, strict=strict)


def identity_morphism(scheme: AssociationScheme) -> SchemeMorphism:
    return SchemeMorphism(scheme, scheme, tuple(range(scheme.n)), tuple(range(scheme.s)))


def quotient_projection(scheme: AssociationScheme, nset) -> tuple[SchemeMorphism, AssociationScheme]:
    """The projection onto the quotient by a closed normal subset: points go to
    their block, classes to their double coset.  Returns (morphism, quotient)."""
    from .scheme import quotient_scheme  # local to avoid cycles in readers' heads

    quo = quotient_scheme(scheme, nset)
    _, block_of = quotient_blocks(scheme, nset)
    _, coset_of = double_cosets(scheme, nset)
    return SchemeMorphism(scheme, quo, block_of, coset_of), quo


def product_projection(
    s1: AssociationScheme, s2: AssociationScheme, coord: int
) -> tuple[SchemeMorphism, AssociationScheme]:
    """Coordinate projection from the product scheme onto one factor."""
    if coord not in (0, 1):
        raise ValueError("coord must be 0 or 1")
    prod = product_scheme(s1, s2)
    factor = (s1, s2)[coord]
    if coord == 0:
        pmap = tuple(x1 for x1 in range(s1.n) for _ in range(s2.n))
        cmap = tuple(p1 for p1 in range(s1.s) for _ in range(s2.s))
    else:
        pmap = tuple(x2 for _ in range(s1.n) for x2 in range(s2.n))
        cmap = tuple(p2 for _ in range(s1.s) for p2 in range(s2.s))
    return SchemeMorphism(prod, factor, pmap, cmap), prod


def compose_morphisms(g: SchemeMorphism, f: SchemeMorphism) -> SchemeMorphism:
    """g after f; requires f's target and g's source to be the same scheme."""
    if f.target is not g.source and not (
        f.target.n == g.source.n and np.array_equal(f.target.rel, g.source.rel)
    ):
        raise ValueError("morphisms do not compose: target and source differ")
    return SchemeMorphism(
        f.source,
        g.target,
        tuple(g.point_map[u] for u in f.point_map),
        tuple(g.class_map[c] for c in f.class_map),
    )


def _valency_vectors(h: Hypergroup, n: int):
    """Candidate class valencies: positive, star-paired, summing to n-1 beyond the
    diagonal, and compatible with the target product supports."""
    star = h.inv
    reps = [p for p in range(1, h.m) if p <= star[p]]
    weights = [1 if star[p] == p else 2 for p in reps]

    def rec(i: int, left: int, acc: list[int]):
        if i == len(reps):
            if left == 0:
                val = [1] * h.m
                for rep, v in zip(reps, acc):
                    val[rep] = v
                    val[star[rep]] = v
                yield tuple(val)
            return
        w = weights[i]
        rest_min = sum(weights[i + 1:])
        for v in range(1, (left - rest_min) // w + 1):
            yield from rec(i + 1, left - w * v, acc + [v])

    for val in rec(0, n - 1, []):
        ok = all(
            sum(val[r] for r in h.table[p][q]) <= val[p] * val[q]
            for p in range(h.m) for q in range(h.m)
        )
        if ok:
            yield val


def _search_at_size(h: Hypergroup, n: int):
    """Backtracking over class matrices with s = m classes at a fixed point count.

    Cells fill column by column so each triangle is checked the moment its last
    edge appears; the target table's zero pattern, per-row class counts, and a
    sorted first row prune the tree.  Returns (scheme or None, leaf count).
    """
    m = h.m
    star = h.inv
    table = h.table
    cells = [(x, z) for z in range(1, n) for x in range(z)]
    leaves = 0

    for val in _valency_vectors(h, n):
        rel = np.zeros((n, n), dtype=np.int64)
        counts = [[0] * m for _ in range(n)]

        def feasible_row(v: int, filled_v: int) -> bool:
            remaining = (n - 1) - filled_v
            return sum(max(0, val[c] - counts[v][c]) for c in range(1, m)) <= remaining

        filled = [0] * n

        def assign(i: int):
            nonlocal leaves
            if i == len(cells):
                leaves += 1
                candidate = build_scheme(n, rel.copy())
                if isinstance(candidate, AssociationScheme):
                    found = to_hypergroup(candidate)
                    if found.table == table and found.inv == star:
                        if hypergroup_isomorphic(found, h) is not None:
                            return candidate
                return None
            x, z = cells[i]
            lo = rel[0, z - 1] if x == 0 and z >= 2 else 1
            for c in range(lo, m):
                cs = star[c]
                if counts[x][c] + 1 > val[c] or counts[z][cs] + 1 > val[cs]:
                    continue
                rel[x, z] = c
                rel[z, x] = cs
                counts[x][c] += 1
                counts[z][cs] += 1
                filled[x] += 1
                filled[z] += 1
                ok = feasible_row(x, filled[x]) and feasible_row(z, filled[z])
                if ok:
                    # triangles {w, x, z} whose last edge is (x, z): only w < x
                    # have both other edges assigned in this fill order
                    for w in range(x):
                        a, b = rel[x, w], rel[w, z]
                        if (
                            c not in table[a][b]
                            or a not in table[c][rel[z, w]]
                            or b not in table[rel[w, x]][c]
                        ):
                            ok = False
                            break
                if ok:
                    result = assign(i + 1)
                    if result is not None:
                        return result
                rel[x, z] = 0
                rel[z, x] = 0
                counts[x][c] -= 1
                counts[z][cs] -= 1
                filled[x] -= 1
                filled[z] -= 1
            return None

        found = assign(0)
        if found is not None:
            return found, leaves
    return None, leaves


def search_realization(
    h: Hypergroup, n_max: int, progress: Callable[[str], None] | None = None
) -> AssociationScheme | None:
    """Exhaustive search for a scheme whose class hypergroup is isomorphic to h.

    Explores point counts from the number of elements of h up to n_max, with
    exactly one class per element.  Deterministic: the first scheme in the
    fixed enumeration order is returned; per exhausted size a progress line
    "n=<k> exhausted: <count> candidate matrices, 0 matches" is emitted.
    """
    if n_max > SEARCH_POINT_BOUND:
        raise SizeGuardError(
            f"realization search refused: n_max={n_max} exceeds bound {SEARCH_POINT_BOUND}"
        )
    for n in range(h.m, n_max + 1):
        found, leaves = _search_at_size(h, n)
        if found is not None:
            return found
        if progress is not None:
            progress(f"n={n} exhausted: {leaves} candidate matrices, 0 matches")
    return None
