"""Modular arithmetic on 1-indexed vertex labels.

Vertices are the integers ``1..n``. Every reduction in this package maps
back into ``[1, n]`` so that listings compare directly against hand-written
tables such as ``[7, 1, 2]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "ParameterError",
    "HypergraphParams",
    "d_ro",
    "shift_vertex",
    "is_prime",
    "norms",
    "subset_key",
]


class ParameterError(ValueError):
    """Invalid (n, k), vertex label, or malformed edge."""


# Witness set that makes Miller-Rabin deterministic for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic primality test (no probabilistic accept)."""
    if n < 0:
        raise ParameterError(f"is_prime expects n >= 0, got {n}")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class HypergraphParams:
    """Validated pair (n, k) for the complete hypergraph K_n^k.

    With ``strict=True`` (the default) n must be a prime >= 5 and
    ``2 <= k <= (n - 1) / 2``; these are the instances the construction
    covers. ``strict=False`` is for verifying externally supplied
    partitions: it only needs ``2 <= k < n`` and ``n | C(n, k)``, and
    records anything the construction would have rejected in ``warnings``.
    """

    n: int
    k: int
    strict: bool = True

    def __post_init__(self) -> None:
        n, k = self.n, self.k
        if not isinstance(n, int) or not isinstance(k, int):
            raise ParameterError("n and k must be integers")
        if self.strict:
            if not is_prime(n):
                raise ParameterError(f"n not prime: n={n}")
            if n < 5:
                raise ParameterError(f"n must be at least 5, got n={n}")
            if not 2 <= k <= (n - 1) // 2:
                raise ParameterError(
                    f"k out of range: need 2 <= k <= (n-1)/2 = {(n - 1) // 2}, got k={k}"
                )
        else:
            if n < 3 or not 2 <= k < n:
                raise ParameterError(f"need n >= 3 and 2 <= k < n, got n={n}, k={k}")
        if math.comb(n, k) % n:
            raise ParameterError(f"n={n} does not divide C({n},{k})={math.comb(n, k)}")
        assert self.sigma_min <= self.sigma_max

    @property
    def num_edges(self) -> int:
        return math.comb(self.n, self.k)

    @property
    def N(self) -> int:
        """Number of Hamiltonian cycles in a decomposition, C(n, k) / n."""
        return math.comb(self.n, self.k) // self.n

    @property
    def sigma_min(self) -> int:
        return self.k - 1

    @property
    def sigma_max(self) -> int:
        return self.n - -(-self.n // self.k)

    @property
    def half(self) -> int:
        return self.n // 2

    @property
    def warnings(self) -> list[str]:
        out = []
        if not is_prime(self.n):
            out.append(f"n={self.n} is not prime; the construction does not cover it")
        if not 2 <= self.k <= (self.n - 1) // 2:
            out.append(f"k={self.k} is outside [2, (n-1)/2]")
        return out


def _check_vertex(v: int, n: int) -> None:
    if not 1 <= v <= n:
        raise ParameterError(f"vertex {v} outside [1, {n}]")


def d_ro(y: int, x: int, n: int) -> int:
    """Clockwise distance from x to y on the n-cycle, in ``[0, n - 1]``."""
    _check_vertex(x, n)
    _check_vertex(y, n)
    return y - x if y >= x else n - (x - y)


def shift_vertex(v: int, p: int, n: int) -> int:
    """Translate vertex v by p positions, staying in ``[1, n]``."""
    _check_vertex(v, n)
    return (v - 1 + p) % n + 1


def norms(v: Sequence[int]) -> tuple[int, int]:
    """Return ``(||v||_1, ||v||_inf)``."""
    if len(v) == 0:
        raise ParameterError("norms of an empty vector")
    absv = [abs(x) for x in v]
    return sum(absv), max(absv)


def subset_key(edge: Sequence[int]) -> int:
    """Order-insensitive key of an edge: bit ``v - 1`` set for each vertex v."""
    key = 0
    for v in edge:
        key |= 1 << (v - 1)
    return key
