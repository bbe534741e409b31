"""The bipartite graph on two levels of the n-cube.

Vertices are the k-subsets (upper level) and l-subsets (lower level) of
[n]; an upper and a lower vertex are adjacent iff the lower set is
contained in the upper set.  The graph is implicit: adjacency and
neighborhoods are computed from bitmasks on demand.  ``materialize``
builds explicit adjacency lists for the solvers, guarded by a vertex cap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidParametersError, TooLargeError
from .subsets import MAX_GROUND_SET, Subset, binomial, enumerate_k_subsets, rank, unrank

DEFAULT_MATERIALIZE_CAP = 50_000


class Level(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class LevelGraphSpec:
    """Parameters (n, k, l) of the graph; requires n > k > l >= 1."""

    n: int
    k: int
    l: int

    def __post_init__(self) -> None:
        if self.n > MAX_GROUND_SET:
            raise InvalidParametersError(f"n={self.n} exceeds {MAX_GROUND_SET}")
        if not self.n > self.k > self.l >= 1:
            raise InvalidParametersError(
                f"need n > k > l >= 1, got n={self.n}, k={self.k}, l={self.l}"
            )

    def level_cardinality(self, level: Level) -> int:
        return self.k if level is Level.UPPER else self.l


@dataclass(frozen=True)
class VertexRef:
    """A vertex: a subset tagged with the level it lives on."""

    level: Level
    set: Subset

    @property
    def mask(self) -> int:
        return self.set.mask


def _check_vertex(spec: LevelGraphSpec, v: VertexRef) -> None:
    if v.set.n != spec.n:
        raise InvalidParametersError(
            f"vertex ground set {v.set.n} does not match spec n={spec.n}"
        )
    want = spec.level_cardinality(v.level)
    if v.set.cardinality != want:
        raise InvalidParametersError(
            f"{v.level.value} vertex {v.set} has cardinality "
            f"{v.set.cardinality}, expected {want}"
        )


def adjacent(spec: LevelGraphSpec, u: VertexRef, v: VertexRef) -> bool:
    """True iff one vertex is upper, the other lower, and lower ⊆ upper."""
    _check_vertex(spec, u)
    _check_vertex(spec, v)
    if u.level is v.level:
        return False
    upper, lower = (u, v) if u.level is Level.UPPER else (v, u)
    return lower.set.issubset(upper.set)


def neighbors_down(spec: LevelGraphSpec, u: VertexRef):
    """The C(k,l) lower vertices contained in an upper vertex."""
    _check_vertex(spec, u)
    if u.level is not Level.UPPER:
        raise InvalidParametersError("neighbors_down needs an upper vertex")
    positions = [i for i in range(spec.n) if u.set.mask >> i & 1]
    for sub in enumerate_k_subsets(spec.k, spec.l):
        mask = 0
        for i in range(spec.k):
            if sub.mask >> i & 1:
                mask |= 1 << positions[i]
        yield VertexRef(Level.LOWER, Subset(mask, spec.n))


def neighbors_up(spec: LevelGraphSpec, v: VertexRef):
    """The C(n-l, k-l) upper vertices containing a lower vertex."""
    _check_vertex(spec, v)
    if v.level is not Level.LOWER:
        raise InvalidParametersError("neighbors_up needs a lower vertex")
    complement = [i for i in range(spec.n) if not v.set.mask >> i & 1]
    m = len(complement)
    for sub in enumerate_k_subsets(m, spec.k - spec.l):
        mask = v.set.mask
        for i in range(m):
            if sub.mask >> i & 1:
                mask |= 1 << complement[i]
        yield VertexRef(Level.UPPER, Subset(mask, spec.n))


def graph_stats(spec: LevelGraphSpec) -> dict:
    """Vertex/edge counts and the two degrees, by double counting."""
    n, k, l = spec.n, spec.k, spec.l
    stats = {
        "vertex_count": binomial(n, k) + binomial(n, l),
        "edge_count": binomial(n, k) * binomial(k, l),
        "upper_degree": binomial(k, l),
        "lower_degree": binomial(n - l, k - l),
    }
    assert binomial(n, k) * binomial(k, l) == binomial(n, l) * binomial(n - l, k - l)
    return stats


@dataclass(frozen=True)
class MaterializedGraph:
    """Explicit adjacency lists; vertex i is upper rank i for i < upper_count,
    otherwise lower rank i - upper_count.  Ranks are colex."""

    spec: LevelGraphSpec
    upper_masks: tuple[int, ...]
    lower_masks: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def upper_count(self) -> int:
        return len(self.upper_masks)

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def vertex(self, index: int) -> VertexRef:
        if index < self.upper_count:
            return VertexRef(Level.UPPER, Subset(self.upper_masks[index], self.spec.n))
        return VertexRef(
            Level.LOWER, Subset(self.lower_masks[index - self.upper_count], self.spec.n)
        )

    def index_of(self, v: VertexRef) -> int:
        _check_vertex(self.spec, v)
        if v.level is Level.UPPER:
            return rank(v.set, self.spec.k)
        return self.upper_count + rank(v.set, self.spec.l)


def materialize(
    spec: LevelGraphSpec, cap: int = DEFAULT_MATERIALIZE_CAP
) -> MaterializedGraph:
    """Build explicit adjacency lists, refusing graphs above the vertex cap."""
    n, k, l = spec.n, spec.k, spec.l
    total = binomial(n, k) + binomial(n, l)
    if total > cap:
        raise TooLargeError(f"{total} vertices exceed the cap of {cap}")
    upper_masks = tuple(s.mask for s in enumerate_k_subsets(n, k))
    lower_masks = tuple(s.mask for s in enumerate_k_subsets(n, l))
    nu = len(upper_masks)
    adj: list[list[int]] = [[] for _ in range(total)]
    for iu, umask in enumerate(upper_masks):
        u = VertexRef(Level.UPPER, Subset(umask, n))
        for w in neighbors_down(spec, u):
            il = nu + rank(w.set, l)
            adj[iu].append(il)
            adj[il].append(iu)
    return MaterializedGraph(
        spec=spec,
        upper_masks=upper_masks,
        lower_masks=lower_masks,
        adjacency=tuple(tuple(sorted(a)) for a in adj),
    )


def unrank_vertex(spec: LevelGraphSpec, level: Level, r: int) -> VertexRef:
    card = spec.level_cardinality(level)
    return VertexRef(level, unrank(r, spec.n, card))
