"""Explicit Hamiltonian decompositions of complete k-uniform hypergraphs.

For a prime n and 2 <= k <= (n - 1) / 2, the C(n, k) k-subsets of
{1, ..., n} are split into C(n, k) / n classes of n subsets each, every
class forming a Berge Hamiltonian cycle.

>>> from hamdecomp import HypergraphParams, enumerate_generators
>>> [str(g) for g in enumerate_generators(HypergraphParams(5, 2))]
['[1,-1]', '[2,-2]']
"""

from .cycles import (
    Decomposition,
    HamCycle,
    build_cycle,
    construct_decomposition,
    edge_set,
    period,
    representative,
)
from .generators import (
    Generator,
    canonicalize,
    compositions_of_sigma,
    counts_by_sigma,
    enumerate_generators,
    generator_of,
)
from .modmath import HypergraphParams, ParameterError, d_ro, is_prime, norms, shift_vertex
from .ordering import DifferenceVector, OrderedEdge, adopted_order, difference_vector
from .verification import (
    BudgetExceeded,
    Finding,
    VerifyReport,
    oracle_partition_check,
    verify_cycle_class,
    verify_decomposition,
)

__all__ = [
    "BudgetExceeded",
    "Decomposition",
    "DifferenceVector",
    "Finding",
    "Generator",
    "HamCycle",
    "HypergraphParams",
    "OrderedEdge",
    "ParameterError",
    "VerifyReport",
    "adopted_order",
    "build_cycle",
    "canonicalize",
    "compositions_of_sigma",
    "construct_decomposition",
    "counts_by_sigma",
    "d_ro",
    "difference_vector",
    "edge_set",
    "enumerate_generators",
    "generator_of",
    "is_prime",
    "norms",
    "oracle_partition_check",
    "period",
    "representative",
    "shift_vertex",
    "verify_cycle_class",
    "verify_decomposition",
]
