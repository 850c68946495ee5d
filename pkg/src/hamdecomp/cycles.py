"""From a generator to its Hamiltonian cycle.

The representative ``r`` is the edge anchored at vertex 1. Its n
translates ``r + p`` (p = 0..n-1) form the edge set of the generator. The
cycle visits ``1, 1 + g_1, 1 + 2 g_1, ...`` and uses ``r + i * g_1`` as the
edge leaving the i-th vertex; since n is prime and ``0 < g_1 < n`` this
walk covers every vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .generators import Generator, enumerate_generators
from .modmath import HypergraphParams, ParameterError

__all__ = [
    "HamCycle",
    "Decomposition",
    "representative",
    "edge_set",
    "build_cycle",
    "period",
    "construct_decomposition",
]

Edge = tuple[int, ...]


@dataclass(frozen=True)
class HamCycle:
    generator: Generator
    vertices: tuple[int, ...]
    # traversal order: edges[i] starts with vertices[i], vertices[i + 1]
    edges: tuple[Edge, ...]

    @property
    def representative(self) -> Edge:
        return self.edges[0]

    @property
    def sigma(self) -> int:
        return self.generator.sigma

    def shift_order(self) -> list[Edge]:
        """Edges in translate order r, r + 1, ..., r + n - 1."""
        return sorted(self.edges, key=lambda e: e[0])


@dataclass
class Decomposition:
    params: HypergraphParams
    cycles: list[HamCycle]

    @classmethod
    def build(cls, params: HypergraphParams) -> "Decomposition":
        return cls(params, list(construct_decomposition(params)))


def _prefix_entries(values: Sequence[int], n: int) -> Edge:
    out = [1]
    acc = 1
    for g in values:
        acc += g
        out.append((acc - 1) % n + 1)
    return tuple(out)


def representative(g: Generator, params: HypergraphParams) -> Edge:
    r = _prefix_entries(g.parts, params.n)
    assert len(set(r)) == len(r)
    return r


def _translate(edge: Edge, p: int, n: int) -> Edge:
    return tuple((v - 1 + p) % n + 1 for v in edge)


def edge_set(g: Generator, params: HypergraphParams) -> list[Edge]:
    r = representative(g, params)
    return [_translate(r, p, params.n) for p in range(params.n)]


def build_cycle(g: Generator, params: HypergraphParams) -> HamCycle:
    n = params.n
    step = g.parts[0]
    r = representative(g, params)
    shifts = [i * step % n for i in range(n)]
    vertices = tuple(s + 1 for s in shifts)
    edges = tuple(_translate(r, s, n) for s in shifts)
    return HamCycle(g, vertices, edges)


def period(g: Sequence[int] | Generator, n: int) -> int:
    """Number of distinct translates of the representative of ``g``.

    Works for any modulus (prime or not), which makes the coprimality
    requirement observable: ``period([4, -4], 8) == 4``.
    """
    entries = g.as_list() if isinstance(g, Generator) else list(g)
    if n < 1 or len(entries) < 2:
        raise ParameterError("period needs n >= 1 and a generator of length >= 2")
    if sum(entries) % n:
        raise ParameterError(f"generator entries {entries} do not sum to 0 mod {n}")
    r = _prefix_entries(entries[:-1], n)
    k = len(r)
    rotations = {r[i:] + r[:i] for i in range(k)}
    for p in range(1, n + 1):
        if _translate(r, p, n) in rotations:
            return p
    raise AssertionError("unreachable: p = n always returns r")


def construct_decomposition(params: HypergraphParams) -> Iterator[HamCycle]:
    """Stream the N Hamiltonian cycles in generator enumeration order."""
    for g in enumerate_generators(params):
        yield build_cycle(g, params)
