"""Immutable directed weighted graph and the small value types built on it."""

from dataclasses import dataclass, field
from numbers import Integral
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Set, Tuple

import networkx as nx

from ..errors import ArgumentError

# Reserved "unreachable" distance. Strictly greater than n*W for every graph the
# constructor accepts, and small enough that INF + INF fits in an int64.
INF = 1 << 61

EdgeKey = Tuple[int, int]


class Edge(NamedTuple):
    source: int
    target: int
    weight: int


class Graph:
    """Directed graph with non-negative integer weights.

    Construction normalises the edge list: self-loops are stripped and their
    minimum weight per vertex is kept in ``self_loops``; parallel edges keep
    only their minimum weight. Forward and reverse adjacency index the same
    edges and the instance never changes afterwards.

    Args:
        n: vertex count, ids are 0..n-1
        edges: (source, target, weight) triples

    Raises:
        ArgumentError: on negative weights, out-of-range ids, or weights so
            large that n * W would reach the INF sentinel
    """

    __slots__ = ('_n', '_weights', '_edges', '_out', '_in', '_self_loops', '_reversed', '_max_weight')

    def __init__(self, n: int, edges: Iterable[Tuple[int, int, int]] = ()):
        if n < 0:
            raise ArgumentError(f"vertex count must be non-negative, got {n}")
        weights: Dict[EdgeKey, int] = {}
        self_loops: Dict[int, int] = {}
        for source, target, weight in edges:
            source, target, weight = int(source), int(target), int(weight)
            if not (0 <= source < n and 0 <= target < n):
                raise ArgumentError(f"edge ({source}, {target}) has a vertex outside [0, {n})")
            if weight < 0:
                raise ArgumentError(f"edge ({source}, {target}) has negative weight {weight}")
            if source == target:
                if source not in self_loops or weight < self_loops[source]:
                    self_loops[source] = weight
                continue
            key = (source, target)
            if key not in weights or weight < weights[key]:
                weights[key] = weight
        self._init_from_parts(n, weights, self_loops)

    def _init_from_parts(self, n: int, weights: Dict[EdgeKey, int], self_loops: Dict[int, int]) -> None:
        self._n = n
        self._weights = weights
        self._self_loops = self_loops
        self._edges = tuple(Edge(u, v, w) for (u, v), w in sorted(weights.items()))
        self._out: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        self._in: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for u, v, w in self._edges:
            self._out[u].append((v, w))
            self._in[v].append((u, w))
        self._reversed: Optional['Graph'] = None
        self._max_weight = max((e.weight for e in self._edges), default=0)
        if n and n * max(self._max_weight, 1) >= INF // 4:
            raise ArgumentError(f"weights too large: n*W = {n * self._max_weight} reaches the distance sentinel")

    @classmethod
    def _from_parts(cls, n: int, weights: Dict[EdgeKey, int], self_loops: Dict[int, int]) -> 'Graph':
        graph = cls.__new__(cls)
        graph._init_from_parts(n, weights, self_loops)
        return graph

    # Accessors

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges sorted by (source, target)."""
        return self._edges

    @property
    def self_loops(self) -> Dict[int, int]:
        return dict(self._self_loops)

    @property
    def max_weight(self) -> int:
        """W, the largest edge weight (0 for an edgeless graph)."""
        return self._max_weight

    @property
    def min_positive_weight(self) -> Optional[int]:
        return min((e.weight for e in self._edges if e.weight > 0), default=None)

    def vertices(self) -> range:
        return range(self._n)

    def out_edges(self, u: int) -> List[Tuple[int, int]]:
        """(target, weight) pairs leaving u."""
        return self._out[u]

    def in_edges(self, v: int) -> List[Tuple[int, int]]:
        """(source, weight) pairs entering v."""
        return self._in[v]

    def out_degree(self, u: int) -> int:
        return len(self._out[u])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def max_out_degree(self) -> int:
        return max((len(a) for a in self._out), default=0)

    def max_in_degree(self) -> int:
        return max((len(a) for a in self._in), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._weights

    def weight(self, u: int, v: int) -> int:
        try:
            return self._weights[(u, v)]
        except KeyError:
            raise ArgumentError(f"({u}, {v}) is not an edge") from None

    def edge_keys(self) -> Set[EdgeKey]:
        return set(self._weights)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, Integral) and 0 <= v < self._n):
            raise ArgumentError(f"invalid vertex id {v!r} for a graph with {self._n} vertices")

    # Derived graphs

    def reversed(self) -> 'Graph':
        """The same graph with every edge flipped (cached)."""
        if self._reversed is None:
            flipped = {(v, u): w for (u, v), w in self._weights.items()}
            rev = Graph._from_parts(self._n, flipped, dict(self._self_loops))
            rev._reversed = self
            self._reversed = rev
        return self._reversed

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple['Graph', 'VertexMap']:
        """G[W] relabelled to 0..|W|-1 in increasing original-id order."""
        members = sorted(set(vertices))
        for v in members:
            self.check_vertex(v)
        local = {v: i for i, v in enumerate(members)}
        weights = {
            (local[u], local[v]): w
            for (u, v), w in self._weights.items()
            if u in local and v in local
        }
        loops = {local[v]: w for v, w in self._self_loops.items() if v in local}
        return Graph._from_parts(len(members), weights, loops), VertexMap(tuple(members))

    def edge_subgraph(self, keys: Iterable[EdgeKey]) -> 'Graph':
        """Spanning subgraph on the same vertex ids keeping only the given edges.

        Raises:
            ArgumentError: if a pair is not an edge of this graph
        """
        weights = {}
        for u, v in keys:
            weights[(u, v)] = self.weight(u, v)
        return Graph._from_parts(self._n, weights, {})

    def edges_within(self, vertices: Set[int]) -> int:
        """Number of edges with both endpoints in the set."""
        return sum(1 for u in vertices for v, _ in self._out[u] if v in vertices)

    def to_networkx(self) -> nx.DiGraph:
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(self._n))
        digraph.add_weighted_edges_from(self._edges)
        return digraph

    # Dunder

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and self._weights == other._weights
            and self._self_loops == other._self_loops
        )

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        loops = f", self_loops={len(self._self_loops)}" if self._self_loops else ""
        return f"Graph(n={self._n}, m={self.m}{loops})"


@dataclass(frozen=True)
class VertexMap:
    """Maps local ids of a derived graph back to the parent graph.

    ``to_parent[i]`` is the parent id of local vertex i.
    """

    to_parent: Tuple[int, ...]
    _from_parent: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, '_from_parent', {p: i for i, p in enumerate(self.to_parent)})

    @classmethod
    def identity(cls, n: int) -> 'VertexMap':
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.to_parent)

    def lift(self, v: int) -> int:
        return self.to_parent[v]

    def lower(self, parent: int) -> Optional[int]:
        return self._from_parent.get(parent)

    def lift_set(self, vertices: Iterable[int]) -> Set[int]:
        return {self.to_parent[v] for v in vertices}

    def lift_edges(self, keys: Iterable[EdgeKey]) -> Set[EdgeKey]:
        return {(self.to_parent[u], self.to_parent[v]) for u, v in keys}

    def compose(self, outer: 'VertexMap') -> 'VertexMap':
        """Map through self, then through outer."""
        return VertexMap(tuple(outer.to_parent[p] for p in self.to_parent))


@dataclass(frozen=True)
class CycleWitness:
    """A directed cycle given by its vertices in order, plus its length.

    A single vertex stands for a self-loop recorded at load time.
    """

    vertices: Tuple[int, ...]
    length: int

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ArgumentError("a cycle needs at least one vertex")

    @classmethod
    def from_vertices(cls, g: Graph, vertices: Sequence[int]) -> 'CycleWitness':
        """Build a witness and compute its length by replaying it on g."""
        draft = cls(tuple(vertices), 0)
        return cls(draft.vertices, draft.replay(g))

    def edge_pairs(self) -> List[EdgeKey]:
        count = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % count]) for i in range(count)]

    def replay(self, g: Graph) -> int:
        """Sum of edge weights along the cycle in g.

        Raises:
            ArgumentError: if a consecutive pair is not an edge of g or a
                vertex repeats
        """
        if len(set(self.vertices)) != len(self.vertices):
            raise ArgumentError(f"cycle repeats a vertex: {self.vertices}")
        if len(self.vertices) == 1:
            v = self.vertices[0]
            loops = g.self_loops
            if v not in loops:
                raise ArgumentError(f"vertex {v} has no self-loop")
            return loops[v]
        return sum(g.weight(u, v) for u, v in self.edge_pairs())

    def is_valid(self, g: Graph) -> bool:
        try:
            return self.replay(g) == self.length
        except ArgumentError:
            return False

    def reversed(self) -> 'CycleWitness':
        """The same cycle read in the reversed graph."""
        return CycleWitness(tuple(reversed(self.vertices)), self.length)

    def lift(self, vertex_map: VertexMap) -> 'CycleWitness':
        return CycleWitness(tuple(vertex_map.lift(v) for v in self.vertices), self.length)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)
