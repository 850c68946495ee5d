"""Checking cycle classes and decompositions, plus a brute-force oracle.

Classes are checked in ordered form: the first two entries of each edge
are the vertex it leaves and the vertex it enters. Deciding whether an
unordered collection of hyperedges admits *some* Berge Hamiltonian cycle
is a search problem and deliberately not attempted here.

Nothing here imports the ordering, generator, or cycle modules at module
level. The oracle uses its own naive owner computation and only calls
into the constructor to compare against it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Sequence

from .modmath import HypergraphParams, ParameterError, subset_key

__all__ = [
    "Finding",
    "VerifyReport",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "validate_class",
    "verify_cycle_class",
    "verify_decomposition",
    "oracle_partition_check",
]

DEFAULT_BUDGET = 2_000_000

# finding kinds
DUPLICATE_EDGE = "duplicate-edge"
DUPLICATE_FIRST_VERTEX = "duplicate-first-vertex"
MISSING_VERTEX = "missing-vertex"
SHORT_CYCLE = "short-cycle"
CHAIN_BREAK = "chain-break"
COVERAGE_GAP = "coverage-gap"
OVERLAP = "overlap"
WRONG_CLASS_SIZE = "wrong-class-size"
WRONG_CLASS_COUNT = "wrong-class-count"
# oracle only
OWNER_MISMATCH = "owner-mismatch"
FIBER_SIZE = "fiber-size"
FIBER_MISMATCH = "fiber-mismatch"


class BudgetExceeded(RuntimeError):
    """The oracle was asked to enumerate more subsets than allowed."""


@dataclass(frozen=True)
class Finding:
    kind: str
    detail: Any = None
    cls: int | None = None

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"kind": self.kind}
        if self.cls is not None:
            d["class"] = self.cls
        if self.detail is not None:
            d["detail"] = list(self.detail) if isinstance(self.detail, tuple) else self.detail
        return d

    def __str__(self) -> str:
        where = f"class {self.cls}: " if self.cls is not None else ""
        detail = f"({self.detail})" if self.detail is not None else ""
        return f"{where}{self.kind}{detail}"


@dataclass
class VerifyReport:
    failures: list[Finding] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def kinds(self) -> set[str]:
        return {f.kind for f in self.failures}

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failures": [f.to_dict() for f in self.failures],
            "warnings": self.warnings,
            "stats": self.stats,
        }


def validate_class(edges: Sequence[Sequence[int]], params: HypergraphParams) -> list[tuple[int, ...]]:
    """Reject malformed input (a usage error, not a verification failure)."""
    n, k = params.n, params.k
    out = []
    for e in edges:
        t = tuple(e)
        if len(t) != k:
            raise ParameterError(f"edge {list(t)} has {len(t)} entries, expected {k}")
        for v in t:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise ParameterError(f"edge {list(t)} has an entry outside [1, {n}]")
        if len(set(t)) != k:
            raise ParameterError(f"edge {list(t)} repeats a vertex")
        out.append(t)
    return out


def _check_class(
    edges: list[tuple[int, ...]], params: HypergraphParams, cls: int | None
) -> list[Finding]:
    n = params.n
    found: list[Finding] = []
    if len(edges) != n:
        found.append(Finding(WRONG_CLASS_SIZE, len(edges), cls))

    keys = Counter(subset_key(e) for e in edges)
    seen_dup = set()
    for e in edges:
        key = subset_key(e)
        if keys[key] > 1 and key not in seen_dup:
            seen_dup.add(key)
            found.append(Finding(DUPLICATE_EDGE, tuple(sorted(e)), cls))

    succ: dict[int, int] = {}
    firsts = Counter(e[0] for e in edges)
    for v, c in sorted(firsts.items()):
        if c > 1:
            found.append(Finding(DUPLICATE_FIRST_VERTEX, v, cls))
    for e in edges:
        succ.setdefault(e[0], e[1])
    for v in range(1, n + 1):
        if v not in firsts:
            found.append(Finding(MISSING_VERTEX, v, cls))

    if not edges:
        return found
    start = edges[0][0]
    visited = {start}
    v = start
    for step in range(1, n + 1):
        if v not in succ:
            found.append(Finding(CHAIN_BREAK, v, cls))
            break
        v = succ[v]
        if v == start:
            if step < n:
                found.append(Finding(SHORT_CYCLE, step, cls))
            break
        if v in visited:
            found.append(Finding(CHAIN_BREAK, v, cls))
            break
        visited.add(v)
    return found


def verify_cycle_class(
    edges: Sequence[Sequence[int]], params: HypergraphParams, cls: int | None = None
) -> VerifyReport:
    """Check one class of n ordered edges forms a single Hamiltonian cycle.

    Accepts iff the edges are distinct as sets, every vertex of ``[n]``
    is the first entry of exactly one edge, and following
    first -> second entries from the first edge closes after exactly n
    steps.
    """
    checked = validate_class(edges, params)
    return VerifyReport(_check_class(checked, params, cls), params.warnings)


def verify_decomposition(
    classes: Iterable[Sequence[Sequence[int]]], params: HypergraphParams
) -> VerifyReport:
    """Check a full partition of the C(n, k) subsets into Hamiltonian cycles.

    ``classes`` may be a stream; each class is consumed once. Overlap and
    coverage compare subsets as unordered sets.
    """
    report = VerifyReport(warnings=params.warnings)
    seen: set[int] = set()
    count = 0
    for i, edges in enumerate(classes, start=1):
        count += 1
        checked = validate_class(edges, params)
        report.failures.extend(_check_class(checked, params, i))
        for key in {subset_key(e) for e in checked}:
            if key in seen:
                edge = tuple(v + 1 for v in range(params.n) if key >> v & 1)
                report.failures.append(Finding(OVERLAP, edge, i))
            else:
                seen.add(key)
    if count != params.N:
        report.failures.append(Finding(WRONG_CLASS_COUNT, count))
    missing = params.num_edges - len(seen)
    if missing:
        report.failures.append(Finding(COVERAGE_GAP, missing))
    report.stats = {"classes": count, "edges_covered": len(seen)}
    return report


def _naive_owner(subset: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Canonical circular gap vector of a sorted subset, by brute force.

    Tries every rotation of every starting point and keeps the smallest
    among those that end in a largest gap.
    """
    k = len(subset)
    gaps = [(subset[(i + 1) % k] - subset[i]) % n for i in range(k)]
    top = max(gaps)
    candidates = []
    for i in range(k):
        rot = tuple(gaps[i:] + gaps[:i])
        if rot[-1] == top:
            candidates.append(rot)
    return min(candidates)


def oracle_partition_check(
    params: HypergraphParams, budget: int = DEFAULT_BUDGET
) -> VerifyReport:
    """Exhaustively cross-check the construction over all C(n, k) subsets.

    Every subset is assigned an owner twice: by the constructor's
    ``generator_of`` and by a naive rotation search. Accepts iff the two
    agree everywhere, there are exactly N owners, each owning exactly n
    subsets, and each owner's subsets are exactly the edge set the
    constructor builds for it.
    """
    from .cycles import edge_set
    from .generators import enumerate_generators, generator_of

    n, total = params.n, params.num_edges
    if total > budget:
        raise BudgetExceeded(f"C({n},{params.k}) = {total} exceeds budget {budget}")

    report = VerifyReport(warnings=params.warnings)
    fibers: dict[tuple[int, ...], list[int]] = {}
    mismatches = 0
    for subset in combinations(range(1, n + 1), params.k):
        owner = _naive_owner(subset, n)
        g = generator_of(subset, params)
        if g.gaps(n) != owner:
            mismatches += 1
            if mismatches <= 20:
                report.failures.append(Finding(OWNER_MISMATCH, subset))
        fibers.setdefault(owner, []).append(subset_key(subset))

    for owner, members in fibers.items():
        if len(members) != n:
            report.failures.append(Finding(FIBER_SIZE, (owner, len(members))))
    if len(fibers) != params.N:
        report.failures.append(Finding(WRONG_CLASS_COUNT, len(fibers)))

    constructed = 0
    for g in enumerate_generators(params):
        constructed += 1
        members = fibers.get(g.gaps(n))
        built = {subset_key(e) for e in edge_set(g, params)}
        if members is None or set(members) != built:
            report.failures.append(Finding(FIBER_MISMATCH, tuple(g.as_list())))
    if constructed != len(fibers):
        report.failures.append(Finding(WRONG_CLASS_COUNT, constructed))

    sizes = Counter(len(m) for m in fibers.values())
    report.stats = {
        "subsets": total,
        "fibers": len(fibers),
        "fiber_sizes": dict(sorted(sizes.items())),
        "owner_mismatches": mismatches,
        "expected_fibers": params.N,
    }
    return report
