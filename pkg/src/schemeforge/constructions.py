"""Concrete families: group schemes, partition schemes from automorphism orbits,
quotient hyperrings, Hamming and flag schemes, linearly ordered hypergroups,
valuation schemes, and projective geometries extracted from hypergroups.

Everything here is finite and exhaustively verified at construction time.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections.abc import Iterable, Sequence
from math import inf

import numpy as np

from .errors import GeometryError, SizeGuardError, TriangleConditionError, Violation
from .hypergroup import Hypergroup, build_hypergroup, group_as_hypergroup
from .scheme import AssociationScheme, build_scheme

HAMMING_LENGTH_BOUND = 12
HAMMING_POINT_BOUND = 4096
GEOMETRY_POINT_BOUND = 64


# ---------------------------------------------------------------------------
# finite groups and automorphism subgroups

@dataclasses.dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    cayley: tuple[tuple[int, ...], ...]
    e: int
    inv: tuple[int, ...]


def build_group(cayley) -> FiniteGroup:
    """Verify the group axioms on a Cayley table; identity and inverses are derived."""
    t = np.asarray(cayley, dtype=np.int64)
    g = t.shape[0]
    if t.ndim != 2 or t.shape != (g, g) or g == 0:
        raise ValueError("Cayley table must be square and nonempty")
    if t.min() < 0 or t.max() >= g:
        raise ValueError("Cayley table entries out of range")
    if not np.array_equal(t[t], t[:, t]):
        a, b, c = np.argwhere(t[t] != t[:, t])[0]
        raise ValueError(f"not associative at {(int(a), int(b), int(c))}")
    idx = np.arange(g)
    es = [e for e in range(g) if np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx)]
    if len(es) != 1:
        raise ValueError(f"identity candidates: {es}")
    e = es[0]
    inv = []
    for a in range(g):
        partners = np.nonzero(t[a] == e)[0]
        if len(partners) != 1 or t[partners[0], a] != e:
            raise ValueError(f"no unique inverse for {a}")
        inv.append(int(partners[0]))
    return FiniteGroup(order=g, cayley=tuple(map(tuple, t.tolist())), e=e, inv=tuple(inv))


def cyclic_group(n: int) -> FiniteGroup:
    return build_group([[(a + b) % n for b in range(n)] for a in range(n)])


def _perm_group(perms: list[tuple[int, ...]]) -> FiniteGroup:
    perms = sorted(perms)
    pos = {p: i for i, p in enumerate(perms)}
    cayley = [
        [pos[tuple(p[q[i]] for i in range(len(q)))] for q in perms]
        for p in perms
    ]
    return build_group(cayley)


def _parity(perm: tuple[int, ...]) -> int:
    return sum(perm[i] > perm[j] for i in range(len(perm)) for j in range(i + 1, len(perm))) % 2


def symmetric_group(k: int) -> FiniteGroup:
    """S_k on lexicographically ordered permutations; the identity is element 0."""
    if not 1 <= k <= 4:
        raise SizeGuardError(f"symmetric_group supports k <= 4, got {k}")
    return _perm_group([tuple(p) for p in itertools.permutations(range(k))])


def alternating_group(k: int) -> FiniteGroup:
    if not 1 <= k <= 4:
        raise SizeGuardError(f"alternating_group supports k <= 4, got {k}")
    return _perm_group([tuple(p) for p in itertools.permutations(range(k)) if _parity(tuple(p)) == 0])


def product_group(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product; (a1, a2) gets index a1*order2 + a2."""
    n1, n2 = g1.order, g2.order
    cayley = [
        [g1.cayley[a1][b1] * n2 + g2.cayley[a2][b2] for b1 in range(n1) for b2 in range(n2)]
        for a1 in range(n1) for a2 in range(n2)
    ]
    return build_group(cayley)


def group_hypergroup(g: FiniteGroup) -> Hypergroup:
    return group_as_hypergroup(g.cayley, g.e, g.inv)


@dataclasses.dataclass(frozen=True, eq=False)
class AutSubgroup:
    group: FiniteGroup
    perms: tuple[tuple[int, ...], ...]


def aut_subgroup(g: FiniteGroup, perms: Iterable[Sequence[int]]) -> AutSubgroup:
    """Verify a set of permutations forms a subgroup of the automorphism group."""
    t = np.array(g.cayley, dtype=np.int64)
    seen = {tuple(int(x) for x in p) for p in perms}
    ident = tuple(range(g.order))
    if ident not in seen:
        raise ValueError("automorphism set must contain the identity map")
    for p in seen:
        arr = np.array(p, dtype=np.int64)
        if sorted(p) != list(range(g.order)):
            raise ValueError(f"not a permutation: {p}")
        if not np.array_equal(arr[t], t[np.ix_(arr, arr)]):
            raise ValueError(f"not an automorphism: {p}")
    for p, q in itertools.product(seen, repeat=2):
        comp = tuple(p[q[i]] for i in range(g.order))
        if comp not in seen:
            raise ValueError("automorphism set not closed under composition")
    for p in seen:
        invp = [0] * g.order
        for i, x in enumerate(p):
            invp[x] = i
        if tuple(invp) not in seen:
            raise ValueError("automorphism set not closed under inversion")
    return AutSubgroup(group=g, perms=tuple(sorted(seen)))


def trivial_automorphisms(g: FiniteGroup) -> AutSubgroup:
    return aut_subgroup(g, [tuple(range(g.order))])


def inner_automorphisms(g: FiniteGroup) -> AutSubgroup:
    c, inv = g.cayley, g.inv
    perms = {
        tuple(c[c[h][x]][inv[h]] for x in range(g.order))
        for h in range(g.order)
    }
    return AutSubgroup(group=g, perms=tuple(sorted(perms)))


def orbits(p: AutSubgroup) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    """Orbits of the group elements, identity orbit first, the rest by smallest
    member; returns (orbit list, orbit index per element)."""
    g = p.group
    orbit_of = [-1] * g.order
    raw: list[list[int]] = []
    for x in range(g.order):
        if orbit_of[x] >= 0:
            continue
        frontier = [x]
        members = {x}
        while frontier:
            y = frontier.pop()
            for perm in p.perms:
                z = perm[y]
                if z not in members:
                    members.add(z)
                    frontier.append(z)
        for y in members:
            orbit_of[y] = len(raw)
        raw.append(sorted(members))
    order = sorted(range(len(raw)), key=lambda i: (g.e not in raw[i], min(raw[i])))
    renumber = {old: new for new, old in enumerate(order)}
    return [tuple(raw[i]) for i in order], tuple(renumber[o] for o in orbit_of)


def partition_scheme(g: FiniteGroup, p: AutSubgroup) -> AssociationScheme:
    """Scheme on the group: (x, y) pairs are in the same class when x*y^-1 lies
    in the same automorphism orbit."""
    if p.group is not g and p.group.cayley != g.cayley:
        raise ValueError("automorphism subgroup belongs to a different group")
    _, orbit_of = orbits(p)
    t = np.array(g.cayley, dtype=np.int64)
    inv = np.array(g.inv, dtype=np.int64)
    diff = t[np.arange(g.order)[:, None], inv[None, :]]
    rel = np.array(orbit_of, dtype=np.int64)[diff]
    result = build_scheme(g.order, rel)
    assert isinstance(result, AssociationScheme), "orbit partitions always give schemes"
    return result


def group_scheme(g: FiniteGroup) -> AssociationScheme:
    """The scheme of a group: one class per element, rel[a][b] = class of a*b^-1."""
    return partition_scheme(g, trivial_automorphisms(g))


def partition_hypergroup(g: FiniteGroup, p: AutSubgroup) -> Hypergroup:
    """Hypergroup on the automorphism orbits, multiplying through representatives."""
    orbit_list, orbit_of = orbits(p)
    k = len(orbit_list)
    table = [
        [
            frozenset(orbit_of[g.cayley[x][y]] for x in orbit_list[a] for y in orbit_list[b])
            for b in range(k)
        ]
        for a in range(k)
    ]
    e = orbit_of[g.e]
    inv = [orbit_of[g.inv[orb[0]]] for orb in orbit_list]
    out = build_hypergroup(table, e, inv)
    assert isinstance(out, Hypergroup), "orbit partitions of groups give hypergroups"
    return out


# ---------------------------------------------------------------------------
# finite commutative rings

@dataclasses.dataclass(frozen=True, eq=False)
class FiniteRing:
    order: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int

    def neg(self, a: int) -> int:
        return additive_group(self).inv[a]


def build_ring(add, mul) -> FiniteRing:
    """Verify commutative unital ring axioms exhaustively on the two tables."""
    a = np.asarray(add, dtype=np.int64)
    m = np.asarray(mul, dtype=np.int64)
    g = a.shape[0]
    if a.shape != (g, g) or m.shape != (g, g):
        raise ValueError("addition and multiplication tables must be square and matching")
    grp = build_group(a.tolist())
    if not np.array_equal(a, a.T):
        raise ValueError("addition must be commutative")
    if not np.array_equal(m, m.T):
        raise ValueError("multiplication must be commutative")
    if not np.array_equal(m[m], m[:, m]):
        raise ValueError("multiplication must be associative")
    idx = np.arange(g)
    ones = [c for c in range(g) if np.array_equal(m[c], idx)]
    if len(ones) != 1:
        raise ValueError(f"unit candidates: {ones}")
    left = m[:, a]                       # x * (y + z)
    right = a[m[:, :, None], m[:, None, :]]  # x*y + x*z
    if not np.array_equal(left, right):
        x, y, z = np.argwhere(left != right)[0]
        raise ValueError(f"not distributive at {(int(x), int(y), int(z))}")
    zero = grp.e
    if not np.array_equal(m[zero], np.full(g, zero)):
        raise ValueError("zero must be absorbing")
    return FiniteRing(order=g, add=tuple(map(tuple, a.tolist())),
                      mul=tuple(map(tuple, m.tolist())), zero=zero, one=ones[0])


def additive_group(r: FiniteRing) -> FiniteGroup:
    return build_group(r.add)


def zmod_ring(n: int) -> FiniteRing:
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return build_ring(add, mul)


_GF_POLY = {4: (2, 0b111), 16: (4, 0b10011), 64: (6, 0b1000011)}


def gf_ring(q: int) -> FiniteRing:
    """GF(q) for q in {4, 16, 64}, elements encoded as polynomial bitmasks."""
    if q not in _GF_POLY:
        raise ValueError(f"gf_ring supports q in {sorted(_GF_POLY)}, got {q}")
    k, poly = _GF_POLY[q]

    def mul(x: int, y: int) -> int:
        r = 0
        for i in range(k):
            if (y >> i) & 1:
                r ^= x << i
        for d in range(2 * k - 2, k - 1, -1):
            if (r >> d) & 1:
                r ^= poly << (d - k)
        return r

    add = [[x ^ y for y in range(q)] for x in range(q)]
    mtab = [[mul(x, y) for y in range(q)] for x in range(q)]
    return build_ring(add, mtab)


def ring_units(r: FiniteRing) -> tuple[int, ...]:
    return tuple(a for a in range(r.order) if r.one in r.mul[a])


def unit_subgroup(r: FiniteRing, elements: Iterable[int]) -> tuple[int, ...]:
    """Verify the elements form a multiplicative subgroup of the units."""
    elems = tuple(sorted({int(x) for x in elements}))
    units = set(ring_units(r))
    if not elems or not set(elems) <= units:
        raise ValueError(f"not a subset of the units: {elems}")
    if r.one not in elems:
        raise ValueError("unit subgroup must contain 1")
    for x, y in itertools.product(elems, repeat=2):
        if r.mul[x][y] not in elems:
            raise ValueError(f"not closed under multiplication: {x}, {y}")
    for x in elems:
        if not any(r.mul[x][y] == r.one for y in elems):
            raise ValueError(f"no inverse inside the subgroup for {x}")
    return elems


def units_of_order_dividing(r: FiniteRing, d: int) -> tuple[int, ...]:
    """The subgroup of units u with u^d = 1 (for example a subfield's unit group)."""
    out = []
    for u in ring_units(r):
        acc = r.one
        for _ in range(d):
            acc = r.mul[acc][u]
        if acc == r.one:
            out.append(u)
    return unit_subgroup(r, out)


def scaling_automorphisms(r: FiniteRing, elements: Iterable[int]) -> AutSubgroup:
    """Unit scalings x -> u*x as automorphisms of the additive group."""
    elems = unit_subgroup(r, elements)
    grp = additive_group(r)
    perms = [tuple(r.mul[u][x] for x in range(r.order)) for u in elems]
    return aut_subgroup(grp, perms)


# ---------------------------------------------------------------------------
# quotient hyperrings

@dataclasses.dataclass(frozen=True, eq=False)
class QuotientHyperring:
    """Orbits of unit scaling with set-valued addition and single-valued product."""

    ring: FiniteRing
    group: tuple[int, ...]
    orbit_reps: tuple[tuple[int, ...], ...]
    orbit_of: tuple[int, ...]
    hypergroup: Hypergroup
    mult: tuple[tuple[int, ...], ...]


def quotient_hyperring(r: FiniteRing, elements: Iterable[int]) -> QuotientHyperring:
    """Quotient of a ring by a unit subgroup G: classes are scaling orbits,
    [a] + [b] collects the orbits of g1*a + g2*b, [a]*[b] = [a*b].

    The hyperaddition is verified as a hypergroup and the two operations are
    verified to distribute, with the zero orbit absorbing.
    """
    elems = unit_subgroup(r, elements)
    aut = scaling_automorphisms(r, elems)
    orbit_list, orbit_of = orbits(aut)
    k = len(orbit_list)
    assert orbit_list[0] == (r.zero,), "the zero orbit is always a fixed point"

    table = []
    for oa in orbit_list:
        row = []
        for ob in orbit_list:
            a0, b0 = oa[0], ob[0]
            row.append(frozenset(
                orbit_of[r.add[r.mul[g1][a0]][r.mul[g2][b0]]]
                for g1 in elems for g2 in elems
            ))
        table.append(row)
    neg = additive_group(r).inv
    hg = build_hypergroup(table, orbit_of[r.zero], [orbit_of[neg[o[0]]] for o in orbit_list])
    assert isinstance(hg, Hypergroup), "quotient hyperaddition is a hypergroup"

    mult_rows = []
    for oa in orbit_list:
        row = []
        for ob in orbit_list:
            images = {orbit_of[r.mul[x][y]] for x in oa for y in ob}
            assert len(images) == 1, "orbit product must be single-valued"
            row.append(images.pop())
        mult_rows.append(tuple(row))
    mult = tuple(mult_rows)

    one_cls = orbit_of[r.one]
    assert all(mult[one_cls][b] == b for b in range(k)), "unit orbit must be the identity"
    assert all(mult[a][b] == mult[b][a] for a in range(k) for b in range(k))
    assert all(
        mult[mult[a][b]][c] == mult[a][mult[b][c]]
        for a, b, c in itertools.product(range(k), repeat=3)
    )
    assert all(mult[0][b] == 0 for b in range(k)), "zero orbit must be absorbing"
    for a, b, c in itertools.product(range(k), repeat=3):
        left = frozenset(mult[t][c] for t in hg.table[a][b])
        right = hg.table[mult[a][c]][mult[b][c]]
        assert left == right, f"distributivity fails at {(a, b, c)}"

    return QuotientHyperring(
        ring=r, group=elems, orbit_reps=tuple(orbit_list), orbit_of=orbit_of,
        hypergroup=hg, mult=mult,
    )


# ---------------------------------------------------------------------------
# canonical small hypergroups

def krasner_hypergroup() -> Hypergroup:
    """Two elements 0, 1 with 1+1 = {0, 1}."""
    h = build_hypergroup([[{0}, {1}], [{1}, {0, 1}]], 0, (0, 1))
    assert isinstance(h, Hypergroup)
    return h


def sign_hypergroup() -> Hypergroup:
    """Three elements 0, +1, -1 (encoded 0, 1, 2) under the rule of signs."""
    table = [
        [{0}, {1}, {2}],
        [{1}, {1}, {0, 1, 2}],
        [{2}, {0, 1, 2}, {2}],
    ]
    h = build_hypergroup(table, 0, (0, 2, 1))
    assert isinstance(h, Hypergroup)
    return h


# ---------------------------------------------------------------------------
# Hamming schemes and the flag scheme of the Fano plane

def hamming_scheme(n: int, q: int = 2) -> AssociationScheme:
    """Distance scheme on words of length n over a q-letter alphabet."""
    if not 1 <= n <= HAMMING_LENGTH_BOUND:
        raise SizeGuardError(f"hamming_scheme requires 1 <= n <= {HAMMING_LENGTH_BOUND}, got {n}")
    if q < 2 or q ** n > HAMMING_POINT_BOUND:
        raise SizeGuardError(f"hamming_scheme refused: q^n = {q ** n} exceeds {HAMMING_POINT_BOUND}")
    size = q ** n
    if q == 2:
        ids = np.arange(size, dtype=np.int64)
        xor = np.bitwise_xor.outer(ids, ids)
        pop = np.array([bin(x).count("1") for x in range(size)], dtype=np.int64)
        rel = pop[xor]
    else:
        digits = np.zeros((size, n), dtype=np.int64)
        v = np.arange(size)
        for i in range(n):
            digits[:, i] = v % q
            v = v // q
        rel = np.zeros((size, size), dtype=np.int64)
        step = max(1, HAMMING_POINT_BOUND // size)
        for lo in range(0, size, step):
            hi = min(size, lo + step)
            rel[lo:hi] = (digits[lo:hi, None, :] != digits[None, :, :]).sum(axis=2)
    result = build_scheme(size, rel)
    assert isinstance(result, AssociationScheme), "Hamming distance partitions are schemes"
    return result


def fano_plane() -> tuple[int, list[tuple[int, ...]]]:
    """The 7-point projective plane over the two-element field.

    Points are the nonzero bitmasks 1..7; a line collects the three points
    orthogonal to a nonzero functional.  Returns (7, lines on point ids 0..6).
    """
    pts = list(range(1, 8))
    lines = []
    for h in range(1, 8):
        line = tuple(i for i, p in enumerate(pts) if bin(p & h).count("1") % 2 == 0)
        lines.append(line)
    return 7, sorted(lines)


def fano_flag_scheme() -> AssociationScheme:
    """Scheme on the 21 point-line flags of the Fano plane.

    Classes: 0 equal flags, 1 same line, 2 same point, 3 the second point on the
    first line, 4 the first point on the second line, 5 flags in general
    position.  The result is a valid non-commutative scheme with 6 classes.
    """
    _, lines = fano_plane()
    on_line = [set(line) for line in lines]
    flags = sorted((p, li) for li in range(len(lines)) for p in lines[li])
    nf = len(flags)
    rel = np.zeros((nf, nf), dtype=np.int64)
    for i, (p, l) in enumerate(flags):
        for j, (q, m) in enumerate(flags):
            if i == j:
                c = 0
            elif l == m:
                c = 1
            elif p == q:
                c = 2
            elif q in on_line[l]:
                c = 3
            elif p in on_line[m]:
                c = 4
            else:
                c = 5
            rel[i, j] = c
    result = build_scheme(nf, rel)
    assert isinstance(result, AssociationScheme)
    return result


# ---------------------------------------------------------------------------
# linearly ordered hypergroups and valuation schemes

def linear_hypergroup(chain: Sequence) -> Hypergroup:
    """Min-rule hypergroup of an ascending chain whose last entry is the top.

    The top (identity) becomes element 0 and the i-th chain value element i+1,
    so smaller element index means smaller value among nonidentity elements:
    x+y = {min} for distinct values, and x+x = everything from x up, plus 0.
    """
    m = len(chain)
    if m == 0:
        raise ValueError("chain must be nonempty")
    try:
        ascending = all(chain[i] < chain[i + 1] for i in range(m - 1))
    except TypeError:
        ascending = True  # labels not mutually comparable; positions define the order
    if not ascending:
        raise ValueError("chain must be strictly ascending")
    table: list[list[set[int]]] = [[set() for _ in range(m)] for _ in range(m)]
    for x in range(m):
        table[0][x] = {x}
        table[x][0] = {x}
    for x in range(1, m):
        for y in range(1, m):
            if x == y:
                table[x][y] = {0} | set(range(x, m))
            else:
                table[x][y] = {min(x, y)}
    out = build_hypergroup(table, 0, tuple(range(m)))
    assert isinstance(out, Hypergroup), "the min rule always gives a hypergroup"
    return out


@dataclasses.dataclass(frozen=True, eq=False)
class ValuedRing:
    """A finite ring with an ultrametric value map onto an ascending chain.

    ``chain`` ends with the infinity label (the value of 0 only); ``val_index``
    maps each element to its chain position.
    """

    ring: FiniteRing
    chain: tuple
    val_index: tuple[int, ...]

    def value(self, x: int) -> object:
        return self.chain[self.val_index[x]]


def valued_ring(ring: FiniteRing, chain: Sequence, values: Sequence) -> ValuedRing:
    """Validate the value-map invariants: infinity exactly at zero, symmetry
    under negation, the ultrametric inequality, and surjectivity onto the chain."""
    chain = tuple(chain)
    if len(chain) < 1:
        raise ValueError("chain must be nonempty")
    pos = {label: i for i, label in enumerate(chain)}
    if len(pos) != len(chain):
        raise ValueError("chain labels must be distinct")
    if len(values) != ring.order:
        raise ValueError("one value per ring element required")
    try:
        vi = tuple(pos[v] for v in values)
    except KeyError as exc:
        raise ValueError(f"value {exc.args[0]} not on the chain") from exc
    top = len(chain) - 1
    for x in range(ring.order):
        if (vi[x] == top) != (x == ring.zero):
            raise ValueError(f"infinity value must occur exactly at zero; element {x}")
    neg = additive_group(ring).inv
    for x in range(ring.order):
        if vi[neg[x]] != vi[x]:
            raise ValueError(f"value must be symmetric under negation; element {x}")
    for x, y in itertools.product(range(ring.order), repeat=2):
        if vi[ring.add[x][y]] < min(vi[x], vi[y]):
            raise ValueError(f"ultrametric inequality fails at {(x, y)}")
    if set(vi) != set(range(len(chain))):
        raise ValueError("value map must be surjective onto the chain")
    return ValuedRing(ring=ring, chain=chain, val_index=vi)


def padic_valued_ring(n: int, p: int) -> ValuedRing:
    """Z/n with the p-adic value map; n must be a power of p."""
    k, m = 0, n
    while m % p == 0:
        m //= p
        k += 1
    if m != 1 or k == 0:
        raise ValueError(f"{n} is not a positive power of {p}")
    ring = zmod_ring(n)
    chain = tuple(range(k)) + (inf,)

    def val(x: int):
        if x == 0:
            return inf
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    return valued_ring(ring, chain, [val(x) for x in range(n)])


def trivial_valued_ring(ring: FiniteRing) -> ValuedRing:
    if ring.order < 2:
        raise ValueError("need a nonzero element for the trivial value map")
    return valued_ring(ring, (0, inf), [inf if x == ring.zero else 0 for x in range(ring.order)])


@dataclasses.dataclass(frozen=True)
class TriangleReport:
    ok: bool
    violations: tuple[Violation, ...]


def check_triangle_condition(v: ValuedRing) -> TriangleReport:
    """For each value r, the equidistant-third-point sets of all pairs at
    distance r must be nonempty and share one cardinality."""
    ring = v.ring
    neg = additive_group(ring).inv
    size = ring.order

    def dist(x: int, y: int) -> int:
        return v.val_index[ring.add[x][neg[y]]]

    bad: list[Violation] = []
    for r in range(len(v.chain)):
        label = v.chain[r]
        reference: tuple[int, tuple[int, int]] | None = None
        for a, b in itertools.product(range(size), repeat=2):
            if dist(a, b) != r:
                continue
            card = sum(1 for y in range(size) if dist(a, y) == r and dist(y, b) == r)
            if card == 0:
                bad.append(Violation("triangle_empty", (label, (a, b))))
                break
            if reference is None:
                reference = (card, (a, b))
            elif card != reference[0]:
                bad.append(Violation(
                    "triangle_cardinality", (label, reference[1], reference[0], (a, b), card)
                ))
                break
    return TriangleReport(ok=not bad, violations=tuple(bad))


def valuation_relation(v: ValuedRing) -> np.ndarray:
    """Class matrix of the value-distance partition: pairs at infinity form
    class 0, pairs at the i-th finite value form class i+1."""
    ring = v.ring
    neg = np.array(additive_group(ring).inv, dtype=np.int64)
    vi = np.array(v.val_index, dtype=np.int64)
    add = np.array(ring.add, dtype=np.int64)
    diff = add[np.arange(ring.order)[:, None], neg[None, :]]
    top = len(v.chain) - 1
    cls = np.where(vi == top, 0, vi + 1)
    return cls[diff]


def valuation_scheme(v: ValuedRing) -> AssociationScheme:
    """Scheme of the value-distance partition; requires the triangle condition."""
    report = check_triangle_condition(v)
    if not report.ok:
        raise TriangleConditionError(report.violations)
    result = build_scheme(v.ring.order, valuation_relation(v))
    assert isinstance(result, AssociationScheme), \
        "the triangle condition makes the distance partition a scheme"
    return result


# ---------------------------------------------------------------------------
# projective geometries from hypergroups

def is_k_vector_space(h: Hypergroup) -> bool:
    """True when x + x = {identity, x} for every nonidentity element."""
    if not h.is_commutative():
        raise ValueError("hypergroup is not commutative")
    return all(h.table[x][x] == frozenset({h.e, x}) for x in range(h.m) if x != h.e)


@dataclasses.dataclass(frozen=True, eq=False)
class IncidenceGeometry:
    n_points: int
    lines: tuple[tuple[int, ...], ...]
    degenerate: bool


def check_geometry(n_points: int, lines: Sequence[Sequence[int]]) -> list[Violation]:
    """Incidence axioms: lines carry at least three distinct points, two points
    span exactly one line, and the Veblen-Young triangle axiom holds."""
    bad: list[Violation] = []
    sets = []
    for i, line in enumerate(lines):
        members = set(line)
        if len(members) != len(tuple(line)) or not all(0 <= p < n_points for p in members):
            bad.append(Violation("line_points", (i,)))
        elif len(members) < 3:
            bad.append(Violation("line_size", (i,)))
        sets.append(frozenset(members))
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] == sets[j]:
                bad.append(Violation("duplicate_line", (i, j)))
    if bad:
        return bad

    line_through: dict[tuple[int, int], int] = {}
    for i, members in enumerate(sets):
        for p, q in itertools.combinations(sorted(members), 2):
            if (p, q) in line_through:
                bad.append(Violation("pair_multicovered", (p, q)))
            line_through[(p, q)] = i
    for p, q in itertools.combinations(range(n_points), 2):
        if (p, q) not in line_through:
            bad.append(Violation("pair_uncovered", (p, q)))
    if bad:
        return bad

    def line_of(p: int, q: int) -> frozenset[int]:
        return sets[line_through[(min(p, q), max(p, q))]]

    for p, q, r in itertools.combinations(range(n_points), 3):
        side_pq, side_pr = line_of(p, q), line_of(p, r)
        if r in side_pq:
            continue  # collinear triple, no triangle
        side_qr = line_of(q, r)
        for i, members in enumerate(sets):
            xs = (members & side_pq) - {p}
            ys = (members & side_pr) - {p}
            if xs and ys and not members & side_qr:
                bad.append(Violation("veblen_young", (p, q, r, i)))
                if len(bad) >= 10:
                    return bad
    return bad


def geometry_from_hypergroup(h: Hypergroup) -> IncidenceGeometry:
    """Points are the nonidentity elements; the line through two points is their
    sum (minus the identity) together with the points themselves.

    The extracted line set is verified against all geometry axioms; violations
    raise GeometryError with witnesses.  Geometries with at most one point or
    at most one line are flagged degenerate but accepted.
    """
    if not is_k_vector_space(h):
        raise ValueError("hypergroup is not a vector space over the two-element hyperfield")
    elems = [x for x in range(h.m) if x != h.e]
    if len(elems) > GEOMETRY_POINT_BOUND:
        raise SizeGuardError(
            f"geometry extraction refused: {len(elems)} points exceeds {GEOMETRY_POINT_BOUND}"
        )
    pos = {x: i for i, x in enumerate(elems)}
    lines = {
        frozenset((set(h.table[p][q]) - {h.e}) | {p, q})
        for p, q in itertools.combinations(elems, 2)
    }
    line_tuples = sorted(tuple(sorted(pos[t] for t in line)) for line in lines)
    bad = check_geometry(len(elems), line_tuples)
    if bad:
        raise GeometryError(bad)
    degenerate = len(elems) <= 1 or len(line_tuples) <= 1
    return IncidenceGeometry(n_points=len(elems), lines=tuple(line_tuples), degenerate=degenerate)
