"""Brute-force reference computations for the test suite.

These deliberately avoid the package's ordering, generator and cycle
code: orbits are computed by translating vertex sets directly.
"""

from __future__ import annotations

from itertools import combinations, product

PRIMES = (5, 7, 11, 13, 17, 19, 23)


def matrix(max_n: int = 23, max_edges: int | None = None):
    """Every (n, k) with n prime in PRIMES and 2 <= k <= (n - 1) / 2."""
    from math import comb

    for n in PRIMES:
        if n > max_n:
            continue
        for k in range(2, (n - 1) // 2 + 1):
            if max_edges is None or comb(n, k) <= max_edges:
                yield n, k


def translate(subset, p: int, n: int) -> frozenset[int]:
    return frozenset((v - 1 + p) % n + 1 for v in subset)


def translation_orbits(n: int, k: int) -> set[frozenset[frozenset[int]]]:
    """Partition of all k-subsets of [n] into orbits under v -> v + 1 (mod n)."""
    seen: set[frozenset[int]] = set()
    orbits = set()
    for c in combinations(range(1, n + 1), k):
        a = frozenset(c)
        if a in seen:
            continue
        orbit = frozenset(translate(a, p, n) for p in range(n))
        seen |= orbit
        orbits.add(orbit)
    return orbits


def bounded_compositions(total: int, parts: int, bound: int) -> list[tuple[int, ...]]:
    """All compositions by exhaustive product, sorted."""
    return sorted(
        c for c in product(range(1, bound + 1), repeat=parts) if sum(c) == total
    )


def rotations(v) -> list[tuple[int, ...]]:
    t = tuple(v)
    return [t[i:] + t[:i] for i in range(len(t))]


def first_shift_returning(rep: list[int], n: int) -> int:
    """Smallest p >= 1 with rep + p (mod n, 1-indexed) a rotation of rep."""
    rots = set(rotations(rep))
    p = 1
    while True:
        shifted = tuple((v - 1 + p) % n + 1 for v in rep)
        if shifted in rots:
            return p
        p += 1
