"""Adopted ordering of a k-subset and its difference vector.

A k-subset of ``[n]`` is written as one of the k rotations of its sorted
tuple. The adopted rotation is the one whose wrap-around gap (from the
last entry back to the first) is a largest circular gap; the remaining
k - 1 consecutive gaps then all lie in ``[1, n // 2]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .modmath import HypergraphParams, ParameterError

__all__ = [
    "OrderedEdge",
    "DifferenceVector",
    "as_subset",
    "adopted_order",
    "difference_vector",
    "circular_gaps",
]


@dataclass(frozen=True)
class OrderedEdge:
    entries: tuple[int, ...]
    # rotations applied to the sorted subset; kept for debugging only
    rotation: int = field(default=0, compare=False)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.entries)


@dataclass(frozen=True)
class DifferenceVector:
    gaps: tuple[int, ...]

    @property
    def gamma(self) -> int:
        return sum(self.gaps)


def as_subset(values: Iterable[int], params: HypergraphParams) -> tuple[int, ...]:
    """Validate a k-subset of ``[n]`` and return it sorted."""
    a = tuple(sorted(values))
    if len(a) != params.k:
        raise ParameterError(f"expected {params.k} vertices, got {len(a)}")
    if len(set(a)) != len(a):
        raise ParameterError(f"repeated vertex in {list(a)}")
    if a[0] < 1 or a[-1] > params.n:
        raise ParameterError(f"vertices must lie in [1, {params.n}]: {list(a)}")
    return a


def circular_gaps(sorted_subset: Sequence[int], n: int) -> list[int]:
    """The k clockwise gaps of a sorted subset, starting at its first element.

    They always sum to n.
    """
    s = sorted_subset
    # for x, y in [1, n], (y - x) % n is exactly d_ro(y, x, n)
    return [(y - x) % n for x, y in zip(s, (*s[1:], s[0]))]


def difference_vector(e: Sequence[int], n: int) -> DifferenceVector:
    entries = tuple(e)
    if len(entries) < 2:
        raise ParameterError("an edge needs at least two vertices")
    if len(set(entries)) != len(entries):
        raise ParameterError(f"repeated vertex in edge {list(entries)}")
    if min(entries) < 1 or max(entries) > n:
        raise ParameterError(f"edge {list(entries)} leaves [1, {n}]")
    return DifferenceVector(tuple((y - x) % n for x, y in zip(entries, entries[1:])))


def adopted_order(a: Iterable[int], params: HypergraphParams) -> OrderedEdge:
    """Rotate the sorted subset so that the wrap gap dominates.

    When several circular gaps tie for the maximum, more than one rotation
    qualifies; the one with the lexicographically smallest difference
    vector is returned.

    >>> p = HypergraphParams(7, 3)
    >>> adopted_order({1, 4, 5}, p).entries
    (4, 5, 1)
    """
    s = as_subset(a, params)
    n, k, half = params.n, params.k, params.half
    # gaps[i] runs from s[i] to s[i + 1]; rotation t has wrap gap gaps[t - 1]
    gaps = circular_gaps(s, n)
    top = max(gaps)
    best: list[int] | None = None
    best_t = -1
    for t in range(k):
        if gaps[t - 1] != top:
            continue
        d = gaps[t:] + gaps[:t - 1] if t else gaps[:-1]
        if max(d) > half:
            continue
        if best is None or d < best:
            best, best_t = d, t
    # some circular gap is maximal, so at least one rotation qualifies
    assert best is not None, f"no admissible rotation for {s} (n={n})"
    return OrderedEdge(s[best_t:] + s[:best_t], best_t)
