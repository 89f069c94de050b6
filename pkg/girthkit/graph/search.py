"""Bounded and pruned Dijkstra searches.

All searches use a binary heap keyed by (distance, vertex), so ties settle in
increasing vertex order and every run is deterministic.
"""

import heapq
from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Collection, List, Optional, Set, Tuple, Union

import numpy as np

from ..errors import ArgumentError
from .core import INF, CycleWitness, Edge, EdgeKey, Graph

KeepLike = Union[Callable[[int], bool], Collection[int], np.ndarray]


class Direction(str, Enum):
    FROM = 'from'
    TO = 'to'

    def flip(self) -> 'Direction':
        return Direction.TO if self is Direction.FROM else Direction.FROM


@dataclass
class DistanceMap:
    """Result of one search.

    For a FROM search ``dist[v]`` is d(source, v) and ``parent[v]`` is the
    vertex before v on a shortest source -> v path. For a TO search
    ``dist[v]`` is d(v, source) and ``parent[v]`` is the vertex after v on a
    shortest v -> source path. Unreached vertices hold INF and no parent.
    """

    source: int
    direction: Direction
    dist: List[int]
    parent: List[Optional[int]]
    radius_bound: Optional[int] = None

    def __getitem__(self, v: int) -> int:
        return self.dist[v]

    def is_finite(self, v: int) -> bool:
        return self.dist[v] < INF

    def reached(self) -> List[int]:
        return [v for v, d in enumerate(self.dist) if d < INF]

    def reached_set(self) -> Set[int]:
        return {v for v, d in enumerate(self.dist) if d < INF}

    def path(self, v: int) -> List[int]:
        """Vertices of the tree path in edge order.

        FROM: [source, ..., v]. TO: [v, ..., source].
        """
        if not self.is_finite(v):
            raise ArgumentError(f"vertex {v} was not reached from {self.source}")
        chain = [v]
        while chain[-1] != self.source:
            chain.append(self.parent[chain[-1]])
        if self.direction is Direction.FROM:
            chain.reverse()
        return chain

    def parent_edge(self, v: int) -> Optional[EdgeKey]:
        """The tree edge at v, oriented as in the searched graph."""
        p = self.parent[v]
        if p is None:
            return None
        return (p, v) if self.direction is Direction.FROM else (v, p)

    def tree_edges(self, members: Optional[Collection[int]] = None) -> Set[EdgeKey]:
        """Tree edges whose child endpoint is reached (and in members, if given)."""
        edges = set()
        for v, p in enumerate(self.parent):
            if p is None or self.dist[v] >= INF:
                continue
            if members is not None and v not in members:
                continue
            edges.add((p, v) if self.direction is Direction.FROM else (v, p))
        return edges

    def replay(self, g: Graph, v: int) -> int:
        """Total weight of the tree path at v, recomputed from g."""
        chain = self.path(v)
        return sum(g.weight(a, b) for a, b in zip(chain, chain[1:]))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.dist, dtype=np.int64)

    def relabel(self, direction: Direction) -> 'DistanceMap':
        """Same arrays, read as a search of the reversed graph."""
        return DistanceMap(self.source, direction, self.dist, self.parent, self.radius_bound)


def as_predicate(keep: Optional[KeepLike]) -> Optional[Callable[[int], bool]]:
    """Normalise a keep argument: callable, vertex collection, or boolean mask."""
    if keep is None:
        return None
    if isinstance(keep, np.ndarray):
        mask = keep.astype(bool)
        return lambda v: bool(mask[v])
    if callable(keep):
        return keep
    return keep.__contains__


def _search(
    g: Graph,
    source: int,
    direction: Direction,
    radius_bound: Optional[int],
    keep: Optional[Callable[[int], bool]],
) -> DistanceMap:
    g.check_vertex(source)
    if radius_bound is not None and radius_bound < 0:
        raise ArgumentError(f"radius bound must be non-negative, got {radius_bound}")
    if keep is not None and not keep(source):
        raise ArgumentError(f"source {source} is excluded by the keep predicate")
    adjacency = g.out_edges if direction is Direction.FROM else g.in_edges
    limit = INF - 1 if radius_bound is None else radius_bound
    dist = [INF] * g.n
    parent: List[Optional[int]] = [None] * g.n
    settled = bytearray(g.n)
    dist[source] = 0
    heap = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if settled[u]:
            continue
        settled[u] = 1
        for v, w in adjacency(u):
            nd = d + w
            if nd > limit or nd >= dist[v]:
                continue
            if keep is not None and not keep(v):
                continue
            dist[v] = nd
            parent[v] = u
            heapq.heappush(heap, (nd, v))
    return DistanceMap(source, direction, dist, parent, radius_bound)


def dijkstra(
    g: Graph,
    source: int,
    direction: Direction = Direction.FROM,
    radius_bound: Optional[int] = None,
) -> DistanceMap:
    """Shortest distances from (or to) source, truncated at radius_bound.

    Raises:
        ArgumentError: invalid source or negative bound
    """
    return _search(g, source, Direction(direction), radius_bound, None)


def pruned_dijkstra(
    g: Graph,
    source: int,
    direction: Direction,
    radius_bound: Optional[int],
    keep: KeepLike,
) -> DistanceMap:
    """Dijkstra inside the subgraph induced by the kept vertices.

    Excluded vertices are never labelled, so edges out of them are never
    relaxed.

    Raises:
        ArgumentError: if the source itself is not kept
    """
    return _search(g, source, Direction(direction), radius_bound, as_predicate(keep))


def roundtrip_distance(g: Graph, u: int, v: int) -> int:
    """d(u, v) + d(v, u), INF when either direction is unreachable."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    there = dijkstra(g, u, Direction.FROM)[v]
    back = dijkstra(g, u, Direction.TO)[v]
    if there >= INF or back >= INF:
        return INF
    return there + back


def shortest_cycle_through(
    g: Graph,
    v: int,
    keep: Optional[KeepLike] = None,
    radius_bound: Optional[int] = None,
) -> Optional[CycleWitness]:
    """Shortest cycle through v inside the kept subgraph.

    Computed as the minimum over in-edges (u, v) of d(v, u) + w(u, v) after a
    single search from v. Returns None when no such cycle has length within
    radius_bound.
    """
    search = _search(g, v, Direction.FROM, radius_bound, as_predicate(keep))
    return cycle_from_search(g, search, radius_bound)


def cycle_from_search(g: Graph, search: DistanceMap, radius_bound: Optional[int] = None) -> Optional[CycleWitness]:
    """Close the best in-edge of a FROM search's source into a cycle."""
    v = search.source
    best: Optional[Tuple[int, int]] = None
    for u, w in g.in_edges(v):
        if search.dist[u] >= INF:
            continue
        length = search.dist[u] + w
        if radius_bound is not None and length > radius_bound:
            continue
        if best is None or (length, u) < best:
            best = (length, u)
    if best is None:
        return None
    length, u = best
    return CycleWitness(tuple(search.path(u)), length)


class DistanceCache:
    """Reuses bounded searches across radii.

    A cached search with bound B answers every request with bound <= B; such
    answers may carry finite values beyond the requested bound, which callers
    must treat as "beyond". ``reversed()`` returns a view for g.reversed()
    sharing the same storage.
    """

    def __init__(self, g: Graph, capacity: Optional[int] = None):
        self.g = g
        self.capacity = capacity
        self._store: 'OrderedDict[Tuple[int, Direction], DistanceMap]' = OrderedDict()
        self._flipped = False
        self.hits = 0
        self.misses = 0

    def reversed(self) -> 'DistanceCache':
        view = DistanceCache.__new__(DistanceCache)
        view.g = self.g.reversed()
        view.capacity = self.capacity
        view._store = self._store
        view._flipped = not self._flipped
        view.hits = 0
        view.misses = 0
        return view

    def get(self, source: int, direction: Direction, radius_bound: Optional[int] = None) -> DistanceMap:
        direction = Direction(direction)
        base_direction = direction.flip() if self._flipped else direction
        key = (source, base_direction)
        cached = self._store.get(key)
        if cached is not None and (
            cached.radius_bound is None or (radius_bound is not None and cached.radius_bound >= radius_bound)
        ):
            self.hits += 1
            self._store.move_to_end(key)
            return cached.relabel(direction) if self._flipped else cached
        self.misses += 1
        base_graph = self.g.reversed() if self._flipped else self.g
        result = _search(base_graph, source, base_direction, radius_bound, None)
        self._store[key] = result
        if self.capacity is not None and len(self._store) > self.capacity:
            self._store.popitem(last=False)
        return result.relabel(direction) if self._flipped else result


__all__ = [
    'Direction',
    'DistanceCache',
    'DistanceMap',
    'Edge',
    'as_predicate',
    'cycle_from_search',
    'dijkstra',
    'pruned_dijkstra',
    'roundtrip_distance',
    'shortest_cycle_through',
]
