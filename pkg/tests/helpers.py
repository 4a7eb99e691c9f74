"""Independent brute-force oracles shared by the test modules.

These deliberately avoid the library's vectorized code paths: expected values
are recomputed with plain triple loops so the tests check the implementation
against a second, slower route.
"""

from __future__ import annotations

import itertools


def naive_constants(rel, s: int) -> dict[tuple[int, int, int], int]:
    """Structure constants by definition; raises if any count is not constant."""
    n = len(rel)
    out: dict[tuple[int, int, int], int] = {}
    for p, q, r in itertools.product(range(s), repeat=3):
        counts = set()
        for y, z in itertools.product(range(n), repeat=2):
            if rel[y][z] != r:
                continue
            counts.add(sum(1 for x in range(n) if rel[y][x] == p and rel[x][z] == q))
        assert len(counts) <= 1, f"count not constant at {(p, q, r)}"
        out[(p, q, r)] = counts.pop() if counts else 0
    return out


def naive_complex_mult(constants, s: int, pset, qset) -> set[int]:
    return {
        r for r in range(s)
        for p in pset for q in qset
        if constants[(p, q, r)] >= 1
    }


def hamming_distance(x: int, y: int) -> int:
    return bin(x ^ y).count("1")


def set_product(table, aset, bset) -> frozenset[int]:
    out: set[int] = set()
    for a in aset:
        for b in bset:
            out |= set(table[a][b])
    return frozenset(out)
