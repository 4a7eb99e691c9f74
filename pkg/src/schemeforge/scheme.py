"""Finite association schemes: axiom verification, structure constants, and the
intrinsic constructions (complex multiplication, closed subsets, restriction,
product, quotient, isomorphism testing).

A scheme lives on the point set 0..n-1.  Its relations ("classes") partition
the n x n index square; class 0 is always the diagonal, and ``star`` maps each
class to its transpose class.  For classes p, q, r the structure constant
``constants[p][q][r]`` counts, for any pair (y, z) in class r, the points x
with (y, x) in class p and (x, z) in class q; an n x n class matrix is a
scheme exactly when these counts do not depend on the chosen (y, z).
"""

from __future__ import annotations

import dataclasses
import itertools

import numpy as np

from .errors import SizeGuardError, Violation

CLOSED_SUBSET_CLASS_BOUND = 25
_WITNESS_CAP = 25


@dataclasses.dataclass(frozen=True)
class SchemeReport:
    """Outcome of a failed verification; ``violations`` pinpoint the first bad axiom."""

    valid: bool
    violations: tuple[Violation, ...]

    def text(self) -> str:
        return "\n".join(v.text() for v in self.violations)


@dataclasses.dataclass(frozen=True, eq=False)
class AssociationScheme:
    n: int
    s: int
    rel: np.ndarray          # n x n class matrix, read-only
    star: tuple[int, ...]    # class -> transpose class
    constants: np.ndarray    # s x s x s intersection numbers, read-only
    valency: tuple[int, ...]

    def classes(self) -> range:
        return range(self.s)

    def class_set(self) -> frozenset[int]:
        return frozenset(range(self.s))


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def build_scheme(n: int, rel) -> AssociationScheme | SchemeReport:
    """Verify the scheme axioms for an n x n class matrix by direct counting.

    Returns a fully populated AssociationScheme on success.  On failure returns
    a SchemeReport whose violations all belong to the first failing axiom, each
    with a concrete witness.
    """
    rel = np.asarray(rel)
    bad = []

    if rel.ndim != 2 or rel.shape != (n, n) or not np.issubdtype(rel.dtype, np.integer):
        bad.append(Violation("shape", (n, tuple(rel.shape))))
        return SchemeReport(False, tuple(bad))
    rel = rel.astype(np.int64)

    if rel.size and rel.min() < 0:
        x, y = np.argwhere(rel < 0)[0]
        return SchemeReport(False, (Violation("classes", (int(x), int(y), int(rel[x, y]))),))
    s = int(rel.max()) + 1 if rel.size else 0
    present = np.bincount(rel.ravel(), minlength=s)
    for missing in np.nonzero(present == 0)[0]:
        bad.append(Violation("classes", (int(missing),)))
    if bad:
        return SchemeReport(False, tuple(bad[:_WITNESS_CAP]))

    # class 0 is the diagonal: rel[x][x] = 0 and 0 appears nowhere else
    diag_bad = np.nonzero(np.diag(rel) != 0)[0]
    for x in diag_bad[:_WITNESS_CAP]:
        bad.append(Violation("diagonal", (int(x), int(x))))
    off = rel == 0
    np.fill_diagonal(off, False)
    for x, y in np.argwhere(off)[:_WITNESS_CAP]:
        bad.append(Violation("diagonal", (int(x), int(y))))
    if bad:
        return SchemeReport(False, tuple(bad[:_WITNESS_CAP]))

    # transposing any class must land in a single class
    star = [0] * s
    relT = rel.T
    for p in range(s):
        mask = rel == p
        vals = relT[mask]
        star[p] = int(vals[0])
        if not np.all(vals == vals[0]):
            ys, zs = np.nonzero(mask)
            k = int(np.nonzero(vals != vals[0])[0][0])
            bad.append(Violation("star", (int(ys[k]), int(zs[k]))))
    if bad:
        return SchemeReport(False, tuple(bad[:_WITNESS_CAP]))

    # structure constants: the count matrix (A_p @ A_q) must be constant on each
    # class; constancy is equivalent to zero variance, checked exactly through
    # per-class sums and sums of squares (integers, so float64 stays exact)
    dtype = np.float32 if n >= 128 else np.float64  # counts < 2^24 stay exact
    rel_flat = rel.ravel()
    class_sizes = np.bincount(rel_flat, minlength=s).astype(np.float64)
    floats = [(rel == p).astype(dtype) for p in range(s)]
    constants = np.zeros((s, s, s), dtype=np.int64)
    for p in range(s):
        ap = floats[p]
        for q in range(s):
            counts = np.asarray(ap @ floats[q], dtype=np.float64).ravel()
            sums = np.bincount(rel_flat, weights=counts, minlength=s)
            squares = np.bincount(rel_flat, weights=counts * counts, minlength=s)
            varying = np.nonzero(squares * class_sizes != sums * sums)[0]
            for r in varying:
                flat = np.nonzero(rel_flat == r)[0]
                vals = counts[flat]
                k = int(np.nonzero(vals != vals[0])[0][0])
                y, z = divmod(int(flat[k]), n)
                bad.append(Violation("constants", (p, q, int(r), y, z)))
                if len(bad) >= _WITNESS_CAP:
                    return SchemeReport(False, tuple(bad))
            constants[p, q] = np.rint(sums / class_sizes).astype(np.int64)
    if bad:
        return SchemeReport(False, tuple(bad))

    valency = tuple(int(constants[p, star[p], 0]) for p in range(s))
    nr = np.array(valency, dtype=np.int64)
    lhs = constants @ nr
    rhs = np.outer(nr, nr)
    if not np.array_equal(lhs, rhs):
        p, q = np.argwhere(lhs != rhs)[0]
        return SchemeReport(False, (Violation("counting", (int(p), int(q))),))

    return AssociationScheme(
        n=n, s=s, rel=_freeze(rel), star=tuple(star),
        constants=_freeze(constants), valency=valency,
    )


def _check_class_sets(scheme: AssociationScheme, *sets) -> list[frozenset[int]]:
    out = []
    for part in sets:
        part = frozenset(int(p) for p in part)
        if not part:
            raise ValueError("class set must be nonempty")
        if not part <= scheme.class_set():
            raise ValueError(f"class indices out of range 0..{scheme.s - 1}: {sorted(part)}")
        out.append(part)
    return out


def complex_mult(scheme: AssociationScheme, pset, qset) -> frozenset[int]:
    """Complex product: classes r with constants[p][q][r] >= 1 for some p, q in the inputs."""
    pset, qset = _check_class_sets(scheme, pset, qset)
    block = scheme.constants[np.ix_(sorted(pset), sorted(qset))]
    result = frozenset(int(r) for r in np.nonzero(block.any(axis=(0, 1)))[0])
    assert result, "complex products are never empty"
    return result


def is_commutative(scheme: AssociationScheme) -> bool:
    return bool(np.array_equal(scheme.constants, scheme.constants.transpose(1, 0, 2)))


def _product_supports(scheme: AssociationScheme) -> list[list[frozenset[int]]]:
    c = scheme.constants
    return [
        [frozenset(int(r) for r in np.nonzero(c[p, q])[0]) for q in range(scheme.s)]
        for p in range(scheme.s)
    ]


def is_closed(scheme: AssociationScheme, tset) -> bool:
    """True when the class set contains the diagonal class and star(T)T stays inside T."""
    (tset,) = _check_class_sets(scheme, tset)
    if 0 not in tset:
        return False
    supports = _product_supports(scheme)
    star = scheme.star
    return all(supports[star[p]][q] <= tset for p in tset for q in tset)


def closed_subsets(scheme: AssociationScheme) -> list[frozenset[int]]:
    """All closed class subsets, in lexicographic order of their sorted members.

    Enumerates the power set filtered down to star-closed candidates; refused
    for schemes with more than CLOSED_SUBSET_CLASS_BOUND classes.
    """
    s = scheme.s
    if s > CLOSED_SUBSET_CLASS_BOUND:
        raise SizeGuardError(
            f"closed-subset enumeration refused: s={s} exceeds bound {CLOSED_SUBSET_CLASS_BOUND}"
        )
    star = scheme.star
    supports = _product_supports(scheme)
    orbits = sorted({tuple(sorted({p, star[p]})) for p in range(1, s)})
    found = []
    for k in range(len(orbits) + 1):
        for combo in itertools.combinations(orbits, k):
            tset = frozenset({0}.union(*combo)) if combo else frozenset({0})
            if all(supports[star[p]][q] <= tset for p in tset for q in tset):
                found.append(tset)
    found.sort(key=lambda t: tuple(sorted(t)))
    return found


def is_primitive(scheme: AssociationScheme) -> bool:
    """True when the only closed subsets are the diagonal class and the full class set."""
    return len(closed_subsets(scheme)) <= 2


def is_normal_closed(scheme: AssociationScheme, tset) -> tuple[bool, bool]:
    """Normality of a closed subset: (pT == Tp for all p, star(p)Tp == T for all p)."""
    (tset,) = _check_class_sets(scheme, tset)
    if not is_closed(scheme, tset):
        raise ValueError(f"class set {sorted(tset)} is not closed")
    star = scheme.star
    normal = all(
        complex_mult(scheme, {p}, tset) == complex_mult(scheme, tset, {p})
        for p in scheme.classes()
    )
    strongly = all(
        complex_mult(scheme, complex_mult(scheme, {star[p]}, tset), {p}) == tset
        for p in scheme.classes()
    )
    return normal, strongly


def restrict_scheme(scheme: AssociationScheme, tset, x0: int) -> AssociationScheme:
    """Restrict to the points reachable from x0 through classes of a closed subset T.

    The restricted classes are the classes of T cut down to the new point set,
    renumbered in increasing original order; structure constants carry over.
    """
    (tset,) = _check_class_sets(scheme, tset)
    if not is_closed(scheme, tset):
        raise ValueError(f"class set {sorted(tset)} is not closed")
    if not 0 <= x0 < scheme.n:
        raise ValueError(f"point {x0} out of range")
    points = [y for y in range(scheme.n) if scheme.rel[x0, y] in tset]
    reindex = {p: i for i, p in enumerate(sorted(tset))}
    sub = scheme.rel[np.ix_(points, points)]
    new_rel = np.vectorize(reindex.__getitem__, otypes=[np.int64])(sub)
    result = build_scheme(len(points), new_rel)
    assert isinstance(result, AssociationScheme), "restriction of a closed subset is a scheme"
    return result


def product_scheme(s1: AssociationScheme, s2: AssociationScheme) -> AssociationScheme:
    """Direct product on the point set X1 x X2; classes are pairs (p1, p2).

    Point (x1, x2) gets index x1*n2 + x2 and class (p1, p2) gets index p1*s2 + p2.
    """
    rel = (s1.rel[:, None, :, None] * s2.s + s2.rel[None, :, None, :]).reshape(
        s1.n * s2.n, s1.n * s2.n
    )
    result = build_scheme(s1.n * s2.n, rel)
    assert isinstance(result, AssociationScheme), "product of schemes is a scheme"
    return result


def quotient_blocks(scheme: AssociationScheme, nset) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    """Point blocks of a closed subset: x ~ y when rel[x][y] lies in N.

    Blocks are sorted by smallest member; returns (blocks, block index per point).
    """
    (nset,) = _check_class_sets(scheme, nset)
    if not is_closed(scheme, nset):
        raise ValueError(f"class set {sorted(nset)} is not closed")
    mask = np.isin(scheme.rel, sorted(nset))
    seen: dict[tuple[int, ...], int] = {}
    block_of = [0] * scheme.n
    for x in range(scheme.n):
        block = tuple(int(y) for y in np.nonzero(mask[x])[0])
        block_of[x] = seen.setdefault(block, len(seen))
    blocks = sorted(seen, key=min)
    renumber = {seen[b]: i for i, b in enumerate(blocks)}
    return blocks, tuple(renumber[b] for b in block_of)


def double_cosets(scheme: AssociationScheme, nset) -> tuple[list[frozenset[int]], tuple[int, ...]]:
    """Partition of the classes into NpN double cosets, sorted by smallest class."""
    (nset,) = _check_class_sets(scheme, nset)
    cosets: list[frozenset[int]] = []
    coset_of = [-1] * scheme.s
    for p in range(scheme.s):
        if coset_of[p] >= 0:
            continue
        npn = complex_mult(scheme, complex_mult(scheme, nset, {p}), nset)
        cosets.append(npn)
        for q in npn:
            assert coset_of[q] < 0 or cosets[coset_of[q]] == npn, "double cosets must partition"
            coset_of[q] = len(cosets) - 1
    order = sorted(range(len(cosets)), key=lambda i: min(cosets[i]))
    renumber = {old: new for new, old in enumerate(order)}
    return [cosets[i] for i in order], tuple(renumber[c] for c in coset_of)


def quotient_scheme(scheme: AssociationScheme, nset) -> AssociationScheme:
    """Quotient by a closed normal subset: points become N-blocks, classes double cosets."""
    (nset,) = _check_class_sets(scheme, nset)
    normal, _ = is_normal_closed(scheme, nset)
    if not normal:
        raise ValueError(f"class set {sorted(nset)} is not normal")
    blocks, block_of = quotient_blocks(scheme, nset)
    _, coset_of = double_cosets(scheme, nset)
    nb = len(blocks)
    q_rel = np.zeros((nb, nb), dtype=np.int64)
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            q_rel[i, j] = coset_of[scheme.rel[bi[0], bj[0]]]
    # representative independence across whole blocks
    coset_arr = np.array(coset_of, dtype=np.int64)
    block_arr = np.array(block_of, dtype=np.int64)
    full = coset_arr[scheme.rel]
    assert np.array_equal(
        full, q_rel[block_arr][:, block_arr]
    ), "quotient relation must not depend on representatives"
    result = build_scheme(nb, q_rel)
    assert isinstance(result, AssociationScheme), "quotient by a normal closed subset is a scheme"
    return result


def scheme_isomorphic(
    s1: AssociationScheme, s2: AssociationScheme
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Search for a simultaneous point/class relabeling carrying s1 onto s2.

    Backtracks over point bijections, binding the class map as it goes and
    pruning with valencies; returns (point_map, class_map) or None.
    """
    if s1.n != s2.n or s1.s != s2.s:
        return None
    if sorted(s1.valency) != sorted(s2.valency):
        return None
    n, s = s1.n, s1.s
    rel1, rel2 = s1.rel, s2.rel
    cmap = [-1] * s
    cmap_used = [False] * s
    pmap = [-1] * n
    pmap_used = [False] * n

    def bind(c1: int, c2: int, undo: list[int]) -> bool:
        if cmap[c1] == c2:
            return True
        if cmap[c1] >= 0 or cmap_used[c2]:
            return False
        if s1.valency[c1] != s2.valency[c2]:
            return False
        cmap[c1] = c2
        cmap_used[c2] = True
        undo.append(c1)
        return True

    def place(x: int) -> bool:
        if x == n:
            return True
        for u in range(n):
            if pmap_used[u]:
                continue
            undo: list[int] = []
            ok = bind(int(rel1[x, x]), int(rel2[u, u]), undo)
            for y in range(x):
                if not ok:
                    break
                v = pmap[y]
                ok = bind(int(rel1[x, y]), int(rel2[u, v]), undo) and bind(
                    int(rel1[y, x]), int(rel2[v, u]), undo
                )
            if ok:
                pmap[x] = u
                pmap_used[u] = True
                if place(x + 1):
                    return True
                pmap[x] = -1
                pmap_used[u] = False
            for c1 in undo:
                cmap_used[cmap[c1]] = False
                cmap[c1] = -1
        return False

    if not place(0):
        return None
    # point bijection fixed every class somewhere, so the class map is total
    assert all(c >= 0 for c in cmap)
    return tuple(pmap), tuple(cmap)
