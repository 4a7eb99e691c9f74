"""Finite hypergroups: a set-valued multiplication table with a unique identity,
unique inverses, associativity, and reversibility.

Elements are 0..m-1.  ``table[a][b]`` is the nonempty set a*b; products of
subsets are unions of cell products.  Verification is exhaustive: every axiom
is checked over all triples, and every construction in this module re-verifies
its output.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections.abc import Iterable

from .errors import CongruenceError, SizeGuardError, Violation

SUB_HYPERGROUP_BOUND = 20
ISOMORPHISM_BOUND = 24
_WITNESS_CAP = 25


@dataclasses.dataclass(frozen=True)
class HypergroupReport:
    valid: bool
    violations: tuple[Violation, ...]

    def text(self) -> str:
        return "\n".join(v.text() for v in self.violations)


@dataclasses.dataclass(frozen=True)
class Hypergroup:
    m: int
    table: tuple[tuple[frozenset[int], ...], ...]
    e: int
    inv: tuple[int, ...]

    def cell(self, a: int, b: int) -> frozenset[int]:
        return self.table[a][b]

    def product(self, aset: Iterable[int], bset: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for a in aset:
            for b in bset:
                out |= self.table[a][b]
        return frozenset(out)

    def is_commutative(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.m) for b in range(a + 1, self.m)
        )


def _normalize_table(table) -> tuple[tuple[frozenset[int], ...], ...] | None:
    try:
        rows = tuple(tuple(frozenset(int(x) for x in cell) for cell in row) for row in table)
    except TypeError:
        return None
    m = len(rows)
    if any(len(row) != m for row in rows):
        return None
    return rows


def hypergroup_violations(table, e: int, inv) -> list[Violation]:
    """All axiom violations of a candidate table, in axiom order, capped per axiom."""
    rows = _normalize_table(table)
    if rows is None:
        return [Violation("shape", ())]
    m = len(rows)
    bad: list[Violation] = []

    cells_ok = True
    for a, b in itertools.product(range(m), repeat=2):
        cell = rows[a][b]
        if not cell or not all(0 <= x < m for x in cell):
            bad.append(Violation("cell", (a, b)))
            cells_ok = False
    if not cells_ok:
        return bad[:_WITNESS_CAP]
    inv = tuple(int(x) for x in inv)
    if not (0 <= e < m) or len(inv) != m or not all(0 <= g < m for g in inv):
        return [Violation("shape", (e, inv))]

    def is_identity(c: int) -> bool:
        return all(rows[c][x] == {x} == rows[x][c] for x in range(m))

    identities = [c for c in range(m) if is_identity(c)]
    if identities != [e]:
        bad.append(Violation("identity", tuple(identities)))

    for x in range(m):
        partners = [g for g in range(m) if e in rows[x][g] and e in rows[g][x]]
        if partners != [inv[x]]:
            bad.append(Violation("inverse", (x, tuple(partners))))

    count = 0
    for a, b, c in itertools.product(range(m), repeat=3):
        left: set[int] = set()
        for t in rows[a][b]:
            left |= rows[t][c]
        right: set[int] = set()
        for t in rows[b][c]:
            right |= rows[a][t]
        if left != right:
            bad.append(Violation("associativity", (a, b, c)))
            count += 1
            if count >= _WITNESS_CAP:
                break

    count = 0
    for a, b in itertools.product(range(m), repeat=2):
        for c in rows[a][b]:
            if a not in rows[c][inv[b]] or b not in rows[inv[a]][c]:
                bad.append(Violation("reversibility", (a, b, c)))
                count += 1
                if count >= _WITNESS_CAP:
                    break
        else:
            continue
        break
    return bad


def build_hypergroup(table, e: int, inv) -> Hypergroup | HypergroupReport:
    """Exhaustively verify all hypergroup axioms; return the value or a report."""
    bad = hypergroup_violations(table, e, inv)
    if bad:
        return HypergroupReport(False, tuple(bad))
    rows = _normalize_table(table)
    return Hypergroup(m=len(rows), table=rows, e=int(e), inv=tuple(int(x) for x in inv))


def group_as_hypergroup(cayley, e: int, inv) -> Hypergroup:
    """Wrap a group's Cayley table in singleton cells."""
    table = [[{cayley[a][b]} for b in range(len(cayley))] for a in range(len(cayley))]
    h = build_hypergroup(table, e, inv)
    assert isinstance(h, Hypergroup), "groups are hypergroups"
    return h


def _restricted_table(h: Hypergroup, kset: tuple[int, ...]):
    """Reindexed table of a multiplication-closed subset, or None if not closed."""
    pos = {x: i for i, x in enumerate(kset)}
    table = []
    for a in kset:
        row = []
        for b in kset:
            cell = h.table[a][b]
            if not all(t in pos for t in cell):
                return None
            row.append({pos[t] for t in cell})
        table.append(row)
    return table


def is_sub_hypergroup(h: Hypergroup, kset) -> bool:
    """True when the subset contains e, is closed under * and inv, and the
    restricted table passes full hypergroup verification."""
    kset = tuple(sorted({int(x) for x in kset}))
    if not kset or not all(0 <= x < h.m for x in kset):
        raise ValueError(f"element set out of range: {kset}")
    members = set(kset)
    if h.e not in members or not all(h.inv[x] in members for x in members):
        return False
    table = _restricted_table(h, kset)
    if table is None:
        return False
    pos = {x: i for i, x in enumerate(kset)}
    return isinstance(build_hypergroup(table, pos[h.e], [pos[h.inv[x]] for x in kset]), Hypergroup)


def sub_hypergroups(h: Hypergroup) -> list[frozenset[int]]:
    """All sub-hypergroups, in lexicographic order.  Refused above the size bound."""
    if h.m > SUB_HYPERGROUP_BOUND:
        raise SizeGuardError(
            f"sub-hypergroup enumeration refused: m={h.m} exceeds bound {SUB_HYPERGROUP_BOUND}"
        )
    rest = [x for x in range(h.m) if x != h.e]
    found = []
    for k in range(len(rest) + 1):
        for combo in itertools.combinations(rest, k):
            kset = tuple(sorted((h.e,) + combo))
            if is_sub_hypergroup(h, kset):
                found.append(frozenset(kset))
    found.sort(key=lambda t: tuple(sorted(t)))
    return found


def is_normal_sub(h: Hypergroup, lset) -> tuple[bool, bool]:
    """(hL == Lh for all h,  inv(h)*L*h == L for all h) for a sub-hypergroup L."""
    lset = frozenset(int(x) for x in lset)
    if not is_sub_hypergroup(h, lset):
        raise ValueError(f"{sorted(lset)} is not a sub-hypergroup")
    normal = all(h.product({x}, lset) == h.product(lset, {x}) for x in range(h.m))
    strongly = all(
        h.product(h.product({h.inv[x]}, lset), {x}) == lset for x in range(h.m)
    )
    return normal, strongly


def quotient_hypergroup(h: Hypergroup, nset) -> Hypergroup:
    """Quotient by a normal sub-hypergroup: elements are the cosets x*N.

    Cosets are sorted by smallest member; the product of two cosets is the set
    of cosets tN for t in a representative product, verified to be independent
    of the representatives and to satisfy all hypergroup axioms.
    """
    nset = frozenset(int(x) for x in nset)
    normal, _ = is_normal_sub(h, nset)
    if not normal:
        raise ValueError(f"{sorted(nset)} is not normal")
    coset_sets: dict[frozenset[int], int] = {}
    coset_of = [0] * h.m
    for x in range(h.m):
        coset = h.product({x}, nset)
        assert x in coset
        coset_of[x] = coset_sets.setdefault(coset, len(coset_sets))
    cosets = sorted(coset_sets, key=min)
    renumber = {coset_sets[c]: i for i, c in enumerate(cosets)}
    coset_of = [renumber[c] for c in coset_of]

    table: list[list[frozenset[int]]] = []
    for ci in cosets:
        row = []
        for cj in cosets:
            images = {frozenset(coset_of[t] for t in h.table[x][y]) for x in ci for y in cj}
            assert len(images) == 1, "coset product must not depend on representatives"
            row.append(images.pop())
        table.append(row)
    e_q = coset_of[h.e]
    inv_q = [coset_of[h.inv[min(c)]] for c in cosets]
    out = build_hypergroup(table, e_q, inv_q)
    assert isinstance(out, Hypergroup), "quotient by a normal sub-hypergroup is a hypergroup"
    return out


@dataclasses.dataclass(frozen=True)
class CongruenceRelation:
    """A partition of 0..m-1, stored as an element -> block map (blocks numbered
    by first appearance)."""

    block_of: tuple[int, ...]

    @staticmethod
    def from_blocks(blocks: Iterable[Iterable[int]], m: int) -> "CongruenceRelation":
        block_of = [-1] * m
        for i, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < m or block_of[x] >= 0:
                    raise ValueError("blocks must partition 0..m-1")
                block_of[x] = i
        if any(b < 0 for b in block_of):
            raise ValueError("blocks must cover 0..m-1")
        return CongruenceRelation(tuple(block_of))

    @staticmethod
    def trivial(m: int) -> "CongruenceRelation":
        return CongruenceRelation(tuple(range(m)))

    @staticmethod
    def total(m: int) -> "CongruenceRelation":
        return CongruenceRelation((0,) * m)

    def blocks(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for x, b in enumerate(self.block_of):
            out.setdefault(b, []).append(x)
        return [tuple(v) for v in out.values()]


def congruence_violations(h: Hypergroup, c: CongruenceRelation) -> list[Violation]:
    """Check both congruence conditions; blockwise set-equivalence means the two
    products meet exactly the same blocks."""
    if len(c.block_of) != h.m:
        return [Violation("shape", (len(c.block_of), h.m))]
    blocks_of = c.block_of
    bad: list[Violation] = []
    signature: dict[tuple[int, int], tuple[frozenset[int], tuple[int, int]]] = {}
    for a, b in itertools.product(range(h.m), repeat=2):
        key = (blocks_of[a], blocks_of[b])
        sig = frozenset(blocks_of[z] for z in h.table[a][b])
        if key in signature:
            ref, pair = signature[key]
            if ref != sig:
                bad.append(Violation("product_congruence", (pair, (a, b))))
        else:
            signature[key] = (sig, (a, b))
    inv_sig: dict[int, tuple[int, int]] = {}
    for a in range(h.m):
        key = blocks_of[a]
        if key in inv_sig:
            a0, s0 = inv_sig[key]
            if blocks_of[h.inv[a]] != s0:
                bad.append(Violation("inverse_congruence", (a0, a)))
        else:
            inv_sig[key] = (a, blocks_of[h.inv[a]])
    return bad[:_WITNESS_CAP]


def congruence_quotient(h: Hypergroup, c: CongruenceRelation) -> Hypergroup:
    """Hypergroup on the congruence blocks; the canonical projection is strict."""
    bad = congruence_violations(h, c)
    if bad:
        raise CongruenceError(bad)
    raw_blocks = c.blocks()
    order = sorted(range(len(raw_blocks)), key=lambda i: min(raw_blocks[i]))
    blocks = [raw_blocks[i] for i in order]
    renumber = {}
    for new, i in enumerate(order):
        for x in raw_blocks[i]:
            renumber[x] = new
    k = len(blocks)
    table = [
        [frozenset(renumber[z] for z in h.product(blocks[i], blocks[j])) for j in range(k)]
        for i in range(k)
    ]
    e_q = renumber[h.e]
    inv_q = [renumber[h.inv[block[0]]] for block in blocks]
    out = build_hypergroup(table, e_q, inv_q)
    assert isinstance(out, Hypergroup), "congruence quotient is a hypergroup"
    # strictness of the projection: blockwise image of x*y equals [x] box [y]
    assert all(
        out.table[renumber[x]][renumber[y]] == frozenset(renumber[z] for z in h.table[x][y])
        for x in range(h.m) for y in range(h.m)
    ), "canonical projection must be strict"
    return out


def product_hypergroup(h1: Hypergroup, h2: Hypergroup) -> Hypergroup:
    """Componentwise product on pairs; (a1, a2) gets index a1*m2 + a2."""
    m1, m2 = h1.m, h2.m

    def idx(a1: int, a2: int) -> int:
        return a1 * m2 + a2

    table = [
        [
            frozenset(idx(t1, t2) for t1 in h1.table[a1][b1] for t2 in h2.table[a2][b2])
            for b1 in range(m1) for b2 in range(m2)
        ]
        for a1 in range(m1) for a2 in range(m2)
    ]
    e = idx(h1.e, h2.e)
    inv = [idx(h1.inv[a1], h2.inv[a2]) for a1 in range(m1) for a2 in range(m2)]
    out = build_hypergroup(table, e, inv)
    assert isinstance(out, Hypergroup), "product of hypergroups is a hypergroup"
    return out


def _signatures(h: Hypergroup) -> list[tuple]:
    sigs = []
    for x in range(h.m):
        row = tuple(sorted(len(h.table[x][y]) for y in range(h.m)))
        col = tuple(sorted(len(h.table[y][x]) for y in range(h.m)))
        sigs.append((
            x == h.e,
            h.inv[x] == x,
            len(h.table[x][x]),
            x in h.table[x][x],
            len(h.table[x][h.inv[x]]),
            row, col,
        ))
    return sigs


def hypergroup_isomorphic(h1: Hypergroup, h2: Hypergroup) -> tuple[int, ...] | None:
    """Search for a bijection preserving identity, inverses, and all cell products.

    Backtracks over element bijections pruned by per-element multiset signatures;
    any candidate is verified in full before being returned.
    """
    if h1.m != h2.m:
        return None
    if h1.m > ISOMORPHISM_BOUND:
        raise SizeGuardError(
            f"isomorphism search refused: m={h1.m} exceeds bound {ISOMORPHISM_BOUND}"
        )
    sig1, sig2 = _signatures(h1), _signatures(h2)
    if sorted(sig1) != sorted(sig2):
        return None
    m = h1.m
    phi = [-1] * m
    used = [False] * m
    phi[h1.e] = h2.e
    used[h2.e] = True
    rest = sorted((x for x in range(m) if x != h1.e), key=lambda x: (sig1[x], x))

    def consistent(x: int) -> bool:
        u = phi[x]
        if phi[h1.inv[x]] >= 0 and phi[h1.inv[x]] != h2.inv[u]:
            return False
        mapped = [y for y in range(m) if phi[y] >= 0]
        for y in mapped:
            for a, b in ((x, y), (y, x)):
                cell1 = h1.table[a][b]
                cell2 = h2.table[phi[a]][phi[b]]
                if len(cell1) != len(cell2):
                    return False
                image = {phi[t] for t in cell1 if phi[t] >= 0}
                if not image <= cell2:
                    return False
        return True

    def place(i: int) -> bool:
        if i == len(rest):
            return True
        x = rest[i]
        for u in range(m):
            if used[u] or sig2[u] != sig1[x]:
                continue
            phi[x] = u
            used[u] = True
            if consistent(x) and place(i + 1):
                return True
            phi[x] = -1
            used[u] = False
        return False

    if not place(0):
        return None
    # full verification of the found bijection
    assert phi[h1.e] == h2.e
    assert all(phi[h1.inv[x]] == h2.inv[phi[x]] for x in range(m))
    assert all(
        {phi[t] for t in h1.table[x][y]} == set(h2.table[phi[x]][phi[y]])
        for x in range(m) for y in range(m)
    )
    return tuple(phi)
