"""Exact and heuristic minimum dominating set computation.

All solvers work on a materialized graph whose closed neighborhoods are
packed into Python-int bitsets, so a domination test is one OR/compare.
``brute_force_gamma`` is the independent oracle: iterative deepening over
vertex subsets in lexicographic index order, with only admissible
feasibility pruning, so the first set found at the optimal size is the
lexicographically least one.  ``branch_and_bound_gamma`` is the workhorse:
include/exclude search over coverage-ordered candidates, seeded by the
greedy solution and bounded below by a two-constraint counting relaxation.
"""

from __future__ import annotations

import enum
import heapq
import time
from dataclasses import dataclass

from .constructions import (
    DominationCertificate,
    Provenance,
    verify_certificate,
)
from .errors import BudgetExceededError
from .levelgraph import LevelGraphSpec, MaterializedGraph, materialize
from .subsets import binomial

DEFAULT_NODE_BUDGET = 10_000_000
DEFAULT_BRUTE_FORCE_BUDGET = 100_000_000


class Method(enum.Enum):
    BRUTE_FORCE = "brute_force"
    GREEDY = "greedy"
    BRANCH_AND_BOUND = "branch_and_bound"


@dataclass(frozen=True)
class SolveReport:
    spec: LevelGraphSpec
    method: Method
    value: int
    witness: DominationCertificate
    proven_optimal: bool
    lower_bound: int
    nodes_explored: int
    elapsed: float

    def __post_init__(self) -> None:
        assert self.lower_bound <= self.value
        assert not self.proven_optimal or self.lower_bound == self.value

    def to_json(self) -> dict:
        from .constructions import certificate_to_json

        return {
            "n": self.spec.n,
            "k": self.spec.k,
            "l": self.spec.l,
            "method": self.method.value,
            "value": self.value,
            "proven_optimal": self.proven_optimal,
            "lower_bound": self.lower_bound,
            "nodes_explored": self.nodes_explored,
            "elapsed_seconds": self.elapsed,
            "witness": certificate_to_json(self.witness),
        }


def counting_lower_bound(spec: LevelGraphSpec) -> int:
    """Minimum of a + b over the two-constraint covering relaxation.

    a upper members cover at most a * C(k,l) lower vertices, plus b lower
    members covering themselves; symmetrically b lower members cover at
    most b * C(n-l, k-l) upper vertices, plus a upper members covering
    themselves.  Scanning a over [0, ceil(C(n,l)/C(k,l))] is exhaustive:
    beyond that range the first constraint is slack and growing a can only
    trade 1:1 against b.
    """
    n, k, l = spec.n, spec.k, spec.l
    lowers = binomial(n, l)
    uppers = binomial(n, k)
    cov_low = binomial(k, l)
    cov_up = binomial(n - l, k - l)
    best = lowers + uppers
    for a in range(-(-lowers // cov_low) + 1):
        b_low = lowers - a * cov_low
        b_up = -(-(uppers - a) // cov_up)
        b = max(0, b_low, b_up)
        best = min(best, a + b)
    return best


def _closed_neighborhoods(graph: MaterializedGraph) -> list[int]:
    masks = []
    for i, nbrs in enumerate(graph.adjacency):
        m = 1 << i
        for j in nbrs:
            m |= 1 << j
        masks.append(m)
    return masks


def _certificate(graph: MaterializedGraph, chosen, provenance: Provenance):
    members = frozenset(graph.vertex(i) for i in chosen)
    return DominationCertificate(
        spec=graph.spec, members=members, provenance=provenance
    )


def _checked_report(report: SolveReport) -> SolveReport:
    result = verify_certificate(report.witness)
    assert result.verified, "solver produced a non-dominating witness"
    return report


def greedy_dominate(spec: LevelGraphSpec, cap: int | None = None) -> SolveReport:
    """Largest-new-coverage-first greedy, lazy-evaluated on a max-heap.

    Ties break toward the smallest vertex index, i.e. upper level first and
    then colex rank, so runs are deterministic.
    """
    start = time.perf_counter()
    graph = materialize(spec) if cap is None else materialize(spec, cap)
    masks = _closed_neighborhoods(graph)
    full = (1 << graph.vertex_count) - 1
    heap = [(-m.bit_count(), i) for i, m in enumerate(masks)]
    heapq.heapify(heap)
    cover = 0
    chosen: list[int] = []
    while cover != full:
        neg_gain, i = heapq.heappop(heap)
        gain = (masks[i] & ~cover).bit_count()
        if gain != -neg_gain:
            heapq.heappush(heap, (-gain, i))
            continue
        chosen.append(i)
        cover |= masks[i]
    lb = counting_lower_bound(spec)
    value = len(chosen)
    return _checked_report(
        SolveReport(
            spec=spec,
            method=Method.GREEDY,
            value=value,
            witness=_certificate(graph, chosen, Provenance.GREEDY),
            proven_optimal=value == lb,
            lower_bound=lb,
            nodes_explored=value,
            elapsed=time.perf_counter() - start,
        )
    )


def brute_force_gamma(
    spec: LevelGraphSpec,
    max_size: int | None = None,
    node_budget: int = DEFAULT_BRUTE_FORCE_BUDGET,
) -> SolveReport:
    """Iterative deepening over vertex subsets; proven optimal by exhaustion.

    Level s enumerates s-subsets of the vertex indices in lexicographic
    order.  Two admissible prunes keep this tractable: a branch dies when
    the vertices still available cannot jointly cover the gap, or when the
    remaining picks times the best remaining coverage fall short of the
    uncovered count.  Neither prune can skip a feasible completion, so the
    first dominating set found is the lexicographically least at its size.
    """
    start = time.perf_counter()
    graph = materialize(spec)
    masks = _closed_neighborhoods(graph)
    nv = graph.vertex_count
    full = (1 << nv) - 1
    if max_size is None:
        max_size = nv
    suffix_or = [0] * (nv + 1)
    suffix_cov = [0] * (nv + 1)
    for i in range(nv - 1, -1, -1):
        suffix_or[i] = suffix_or[i + 1] | masks[i]
        suffix_cov[i] = max(suffix_cov[i + 1], masks[i].bit_count())

    nodes = 0
    chosen: list[int] = []

    def level(s: int) -> bool:
        def rec(lo: int, depth: int, cover: int) -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(
                    f"brute force exceeded {node_budget} nodes at level {s}"
                )
            if cover == full:
                return True
            if depth == s:
                return False
            remaining = s - depth
            uncovered = (full & ~cover).bit_count()
            if remaining * suffix_cov[lo] < uncovered:
                return False
            if cover | suffix_or[lo] != full:
                return False
            for i in range(lo, nv - remaining + 1):
                chosen.append(i)
                if rec(i + 1, depth + 1, cover | masks[i]):
                    return True
                chosen.pop()
            return False

        return rec(0, 0, 0)

    for s in range(1, max_size + 1):
        chosen.clear()
        if level(s):
            return _checked_report(
                SolveReport(
                    spec=spec,
                    method=Method.BRUTE_FORCE,
                    value=s,
                    witness=_certificate(graph, chosen, Provenance.EXACT),
                    proven_optimal=True,
                    lower_bound=s,
                    nodes_explored=nodes,
                    elapsed=time.perf_counter() - start,
                )
            )
    raise BudgetExceededError(
        f"no dominating set of size <= {max_size} found for {spec}"
    )


def branch_and_bound_gamma(
    spec: LevelGraphSpec, node_budget: int = DEFAULT_NODE_BUDGET
) -> SolveReport:
    """Exact search via include/exclude on coverage-ordered candidates.

    Initialized with the greedy solution; pruned by size +
    ceil(uncovered / best-remaining-coverage) against the incumbent and by
    the counting relaxation at the root.  Exceeding the node budget is a
    normal outcome: the report then carries the incumbent and the root
    lower bound with proven_optimal=False.
    """
    start = time.perf_counter()
    graph = materialize(spec)
    masks = _closed_neighborhoods(graph)
    nv = graph.vertex_count
    full = (1 << nv) - 1
    root_lb = counting_lower_bound(spec)

    greedy = greedy_dominate(spec)
    best_set = [graph.index_of(m) for m in greedy.witness.sorted_members()]
    best_size = greedy.value

    order = sorted(range(nv), key=lambda i: (-masks[i].bit_count(), i))
    ordered_masks = [masks[i] for i in order]
    suffix_or = [0] * (nv + 1)
    suffix_cov = [1] * (nv + 1)
    for i in range(nv - 1, -1, -1):
        suffix_or[i] = suffix_or[i + 1] | ordered_masks[i]
        suffix_cov[i] = max(suffix_cov[i + 1], ordered_masks[i].bit_count())

    nodes = 0
    chosen: list[int] = []
    exhausted = True

    class _Stop(Exception):
        pass

    def rec(pos: int, cover: int) -> None:
        nonlocal nodes, best_set, best_size, exhausted
        nodes += 1
        if nodes > node_budget:
            exhausted = False
            raise _Stop
        if cover == full:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = sorted(order[p] for p in chosen)
                if best_size == root_lb:
                    raise _Stop
            return
        if pos == nv:
            return
        uncovered = (full & ~cover).bit_count()
        bound = len(chosen) + -(-uncovered // suffix_cov[pos])
        if bound >= best_size:
            return
        if cover | suffix_or[pos] != full:
            return
        chosen.append(pos)
        rec(pos + 1, cover | ordered_masks[pos])
        chosen.pop()
        rec(pos + 1, cover)

    if best_size > root_lb:
        try:
            rec(0, 0)
        except _Stop:
            pass
    proven = exhausted or best_size == root_lb
    return _checked_report(
        SolveReport(
            spec=spec,
            method=Method.BRANCH_AND_BOUND,
            value=best_size,
            witness=_certificate(graph, best_set, Provenance.EXACT),
            proven_optimal=proven,
            lower_bound=best_size if proven else root_lb,
            nodes_explored=nodes,
            elapsed=time.perf_counter() - start,
        )
    )
