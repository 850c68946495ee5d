"""Canonical generator set and the subset -> generator map.

A generator ``[c_1, ..., c_{k-1}, m]`` encodes the gap pattern of one
translation class of k-subsets: the subset anchored at vertex 1 is
``1, 1 + c_1, 1 + c_1 + c_2, ...`` and the wrap-around gap is ``n - sigma``
with ``sigma = sum(c)``. The last entry is stored with the sign convention
``m = -sigma`` when ``sigma <= n // 2`` and ``m = n - sigma`` otherwise;
both are congruent to the wrap gap mod n.

Each rotation class of full gap vectors contributes exactly one generator,
namely the lexicographically smallest rotation among those ending in a
maximal gap (see :func:`canonicalize`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .modmath import HypergraphParams, ParameterError
from .ordering import adopted_order, difference_vector

__all__ = [
    "Generator",
    "compositions_of_sigma",
    "canonicalize",
    "is_canonical",
    "enumerate_generators",
    "generator_from_gaps",
    "generator_of",
    "counts_by_sigma",
]


@dataclass(frozen=True)
class Generator:
    parts: tuple[int, ...]
    last: int

    @property
    def sigma(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts) + 1

    def as_list(self) -> list[int]:
        return [*self.parts, self.last]

    def gaps(self, n: int) -> tuple[int, ...]:
        """Full circular gap vector; sums to n."""
        return (*self.parts, n - self.sigma)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.as_list())) + "]"


def _last_entry(sigma: int, n: int) -> int:
    return -sigma if sigma <= n // 2 else n - sigma


def compositions_of_sigma(sigma: int, params: HypergraphParams) -> Iterator[tuple[int, ...]]:
    """All ``[c_1..c_{k-1}]`` with sum sigma and ``1 <= c_i <= n - sigma``.

    Yielded in lexicographically ascending order, lazily.
    """
    if not params.sigma_min <= sigma <= params.sigma_max:
        raise ParameterError(
            f"sigma={sigma} outside [{params.sigma_min}, {params.sigma_max}]"
        )
    return _bounded_compositions(sigma, params.k - 1, params.n - sigma)


def _bounded_compositions(total: int, parts: int, bound: int) -> Iterator[tuple[int, ...]]:
    prefix: list[int] = []

    def rec(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            if 1 <= remaining <= bound:
                yield (*prefix, remaining)
            return
        # leave at least 1 and at most `bound` for each later slot
        lo = max(1, remaining - bound * (slots - 1))
        hi = min(bound, remaining - (slots - 1))
        for c in range(lo, hi + 1):
            prefix.append(c)
            yield from rec(remaining - c, slots - 1)
            prefix.pop()

    if parts >= 1 and parts <= total <= parts * bound:
        yield from rec(total, parts)


def canonicalize(gaps: Sequence[int]) -> tuple[int, ...]:
    """Canonical rotation of a circular gap vector.

    Among the rotations that put a maximal entry last, return the
    lexicographically smallest.

    >>> canonicalize([4, 1, 1, 1, 4])
    (1, 1, 1, 4, 4)
    """
    g = tuple(gaps)
    top = max(g)
    return min(g[i + 1:] + g[:i + 1] for i, x in enumerate(g) if x == top)


def is_canonical(gaps: Sequence[int]) -> bool:
    g = tuple(gaps)
    top = g[-1]
    if top != max(g):
        return False
    if g.count(top) == 1:
        return True
    return canonicalize(g) == g


def generator_from_gaps(gaps: Sequence[int], n: int) -> Generator:
    """Build the generator for a canonical full gap vector."""
    parts = tuple(gaps[:-1])
    return Generator(parts, _last_entry(sum(parts), n))


def _sigma_block(params: HypergraphParams, sigma: int) -> Iterator[Generator]:
    n = params.n
    wrap = n - sigma
    last = _last_entry(sigma, n)
    for c in compositions_of_sigma(sigma, params):
        # compositions tying the wrap gap have other max-last rotations;
        # only the canonical one is kept
        if wrap in c and not is_canonical((*c, wrap)):
            continue
        yield Generator(c, last)


def enumerate_generators(params: HypergraphParams) -> Iterator[Generator]:
    """Stream the N canonical generators, by sigma then lexicographically."""
    for sigma in range(params.sigma_min, params.sigma_max + 1):
        yield from _sigma_block(params, sigma)


def counts_by_sigma(params: HypergraphParams) -> dict[int, int]:
    return {
        sigma: sum(1 for _ in _sigma_block(params, sigma))
        for sigma in range(params.sigma_min, params.sigma_max + 1)
    }


def generator_of(a: Iterable[int], params: HypergraphParams) -> Generator:
    """The unique canonical generator whose edge set contains subset ``a``."""
    n = params.n
    ordered = adopted_order(a, params)
    dv = difference_vector(ordered.entries, n)
    gamma = dv.gamma
    # no subset has gamma above sigma_max once its wrap gap is maximal
    assert gamma <= params.sigma_max, f"gamma={gamma} > sigma_max for {ordered.entries}"
    canon = canonicalize((*dv.gaps, n - gamma))
    return generator_from_gaps(canon, n)
