"""Simple undirected graphs on bitmask adjacency rows, with metric helpers.

Adjacency rows are Python ints used as bitsets (``rows[u]`` has bit ``v``
set iff ``u ~ v``).  Since Python ints are unbounded, the same
representation serves both the small graphs the exhaustive checks sweep
over and anything larger a caller constructs.  All values are immutable
and every function here is pure, so graphs can be shared freely between
threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DisconnectedGraph

#: Marker for vertex pairs with no connecting path in a distance matrix.
UNREACHABLE = -1


def _bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Invariants (checked on construction): symmetric adjacency, no
    self-loops, no bits outside the vertex range.  Connectivity is *not*
    an invariant; operations that need it check for it.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in _bits(self.rows[u]):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def neighbors(self, u: int) -> Iterator[int]:
        return _bits(self.rows[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            high = self.rows[u] >> (u + 1) << (u + 1)  # keep v > u
            for v in _bits(high):
                yield u, v

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2


@dataclass(frozen=True)
class EccentricityProfile:
    """Per-vertex eccentricities of a connected graph, with their extremes."""

    eccentricities: tuple[int, ...]
    diameter: int
    radius: int


def bfs_distances(g: Graph, source: int) -> tuple[int, ...]:
    """Hop counts from ``source``; UNREACHABLE where no path exists."""
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.rows[u]
        nxt &= ~seen
        for u in _bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return tuple(dist)


def distance_matrix(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All-pairs shortest-path hop counts (BFS from every vertex).

    Disconnection is encoded as UNREACHABLE entries, not raised, so
    enumeration pipelines can filter cheaply.
    """
    return tuple(bfs_distances(g, u) for u in range(g.n))


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.rows[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def eccentricity_profile(g: Graph, dist: tuple[tuple[int, ...], ...] | None = None) -> EccentricityProfile:
    """Eccentricity e(u) = max distance from u, plus diameter and radius.

    Raises DisconnectedGraph when any pair is unreachable.
    """
    if dist is None:
        dist = distance_matrix(g)
    ecc = []
    for row in dist:
        if UNREACHABLE in row:
            raise DisconnectedGraph("eccentricities are undefined on disconnected graphs")
        ecc.append(max(row))
    return EccentricityProfile(tuple(ecc), max(ecc), min(ecc))


def is_self_centered(g: Graph) -> bool:
    """True iff radius equals diameter (all eccentricities equal)."""
    prof = eccentricity_profile(g)
    return prof.radius == prof.diameter


def universal_vertices(g: Graph) -> frozenset[int]:
    """Vertices adjacent to every other vertex (degree n-1)."""
    full = (1 << g.n) - 1
    return frozenset(u for u in range(g.n) if g.rows[u] == full ^ (1 << u))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ (1 << u)) & ~g.rows[u] for u in range(g.n)))


def cone(g: Graph) -> Graph:
    """Add one new vertex (index n) adjacent to every vertex of ``g``."""
    apex_bit = 1 << g.n
    rows = [row | apex_bit for row in g.rows]
    rows.append((1 << g.n) - 1)
    return Graph(g.n + 1, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabeled 0..k-1 in the given order."""
    verts = list(vertices)
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for i, v in enumerate(verts):
        for w in _bits(g.rows[v]):
            j = index.get(w)
            if j is not None:
                rows[i] |= 1 << j
    return Graph(len(verts), tuple(rows))


def adjacency_matrix(g: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(g.rows[u] >> v & 1 for v in range(g.n)) for u in range(g.n))
