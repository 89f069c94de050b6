"""Degree reduction with zero-weight balanced trees.

Every vertex whose out-degree exceeds delta has its out-edges hung from the
leaves of a balanced delta-ary out-tree of zero-weight edges (and the same for
in-edges with an in-tree), so every vertex of the result has in- and
out-degree at most delta while roundtrip distances between original vertices
are unchanged. Original vertices keep their ids; tree vertices follow.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Set, Tuple

from ..errors import ArgumentError, InvariantViolation
from ..graph.core import CycleWitness, EdgeKey, Graph, VertexMap

logger = logging.getLogger(__name__)


@dataclass
class RegularizedGraph:
    """h together with the bookkeeping needed to map results back to g.

    Attributes:
        g: the original graph
        h: the degree-bounded graph
        delta: branching factor and degree bound
        owner: owner[x] is the original vertex whose tree holds x (x itself
            for original vertices)
        tree_parent: for every tree vertex, its neighbour one step closer to
            the owner
        tree_side: 'out' or 'in' for every tree vertex
        edge_origin: h-edge -> original edge, for every non-tree edge of h
    """

    g: Graph
    h: Graph
    delta: int
    owner: Tuple[int, ...]
    tree_parent: Dict[int, int] = field(default_factory=dict)
    tree_side: Dict[int, str] = field(default_factory=dict)
    edge_origin: Dict[EdgeKey, EdgeKey] = field(default_factory=dict)

    @property
    def n_original(self) -> int:
        return self.g.n

    @property
    def vertex_map(self) -> VertexMap:
        """Contracts every h vertex to its owner."""
        return VertexMap(self.owner)

    def is_original(self, x: int) -> bool:
        return x < self.g.n

    def tree_edge_count(self) -> int:
        return len(self.tree_parent)

    def to_dict(self) -> dict:
        return {
            'n': self.g.n,
            'h_n': self.h.n,
            'delta': self.delta,
            'owner': list(self.owner),
            'is_original': [self.is_original(x) for x in range(self.h.n)],
            'edge_origin': [[a, b, u, v] for (a, b), (u, v) in sorted(self.edge_origin.items())],
        }


def branching_factor(g: Graph) -> int:
    """delta = max(2, ceil(m / n))."""
    if g.n == 0:
        return 2
    return max(2, math.ceil(g.m / g.n))


class _TreeBuilder:
    def __init__(self, n: int):
        self.next_id = n
        self.owner: List[int] = list(range(n))
        self.tree_parent: Dict[int, int] = {}
        self.tree_side: Dict[int, str] = {}
        self.tree_edges: List[EdgeKey] = []

    def _new_node(self, root: int, side: str) -> int:
        node = self.next_id
        self.next_id += 1
        self.owner.append(root)
        self.tree_side[node] = side
        return node

    def _link(self, upper: int, lower: int, side: str) -> None:
        self.tree_parent[lower] = upper
        self.tree_edges.append((upper, lower) if side == 'out' else (lower, upper))

    def build(self, root: int, count: int, delta: int, side: str) -> List[int]:
        """Create a tree for count edges at root; returns the leaf for each edge."""
        leaves = [self._new_node(root, side) for _ in range(math.ceil(count / delta))]
        level = leaves
        while len(level) > delta:
            parents = []
            for start in range(0, len(level), delta):
                parent = self._new_node(root, side)
                for child in level[start:start + delta]:
                    self._link(parent, child, side)
                parents.append(parent)
            level = parents
        for child in level:
            self._link(root, child, side)
        return [leaves[i // delta] for i in range(count)]


def regularize(g: Graph) -> RegularizedGraph:
    """Build the degree-bounded graph h with identical original-pair roundtrip distances."""
    delta = branching_factor(g)
    builder = _TreeBuilder(g.n)
    tail: Dict[EdgeKey, int] = {}
    head: Dict[EdgeKey, int] = {}

    for v in g.vertices():
        out = g.out_edges(v)
        if len(out) > delta:
            ports = builder.build(v, len(out), delta, 'out')
            for (target, _), port in zip(out, ports):
                tail[(v, target)] = port
        inc = g.in_edges(v)
        if len(inc) > delta:
            ports = builder.build(v, len(inc), delta, 'in')
            for (source, _), port in zip(inc, ports):
                head[(source, v)] = port

    arcs = [(a, b, 0) for a, b in builder.tree_edges]
    edge_origin: Dict[EdgeKey, EdgeKey] = {}
    for u, v, w in g.edges:
        a = tail.get((u, v), u)
        b = head.get((u, v), v)
        edge_origin[(a, b)] = (u, v)
        arcs.append((a, b, w))
    arcs.extend((v, v, w) for v, w in g.self_loops.items())
    h = Graph(builder.next_id, arcs)

    logger.debug(f"regularized n={g.n} m={g.m} into n={h.n} m={h.m} with delta={delta}")
    return RegularizedGraph(
        g=g,
        h=h,
        delta=delta,
        owner=tuple(builder.owner),
        tree_parent=builder.tree_parent,
        tree_side=builder.tree_side,
        edge_origin=edge_origin,
    )


def lift_cycle(rg: RegularizedGraph, c: CycleWitness) -> CycleWitness:
    """Contract tree vertices of an h-cycle; the length is unchanged.

    Raises:
        InvariantViolation: if the cycle has no original edge or the contracted
            walk does not close up with the same length
    """
    if len(c) == 1:
        return c
    originals = [rg.edge_origin[pair] for pair in c.edge_pairs() if pair in rg.edge_origin]
    if not originals:
        raise InvariantViolation(f"h-cycle {c.vertices} has no original edge")
    for (_, v), (u, _) in zip(originals, originals[1:] + originals[:1]):
        if v != u:
            raise InvariantViolation(f"contracted h-cycle {c.vertices} is not a closed walk in g")
    lifted = CycleWitness.from_vertices(rg.g, [u for u, _ in originals])
    if lifted.length != c.length:
        raise InvariantViolation(f"lifted cycle length {lifted.length} differs from {c.length}")
    return lifted


def _tree_path_present(rg: RegularizedGraph, x: int, keys: Set[EdgeKey]) -> bool:
    while not rg.is_original(x):
        parent = rg.tree_parent[x]
        edge = (parent, x) if rg.tree_side[x] == 'out' else (x, parent)
        if edge not in keys:
            return False
        x = parent
    return True


def lift_subgraph(rg: RegularizedGraph, edges_h: Iterable[EdgeKey]) -> Set[EdgeKey]:
    """Map an h-edge set to g-edges with the same original-pair roundtrip distances.

    An original edge is kept only when the tree paths joining its endpoints to
    their owners are present too; otherwise no walk between original vertices
    could have used it.

    Raises:
        ArgumentError: if a pair is not an edge of h
    """
    keys = set()
    for a, b in edges_h:
        if not rg.h.has_edge(a, b):
            raise ArgumentError(f"({a}, {b}) is not an edge of the regularized graph")
        keys.add((a, b))
    lifted = set()
    for a, b in keys:
        origin = rg.edge_origin.get((a, b))
        if origin is None:
            continue
        if _tree_path_present(rg, a, keys) and _tree_path_present(rg, b, keys):
            lifted.add(origin)
    return lifted
