"""Roundtrip balls and covers shared by both cover constructions."""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Set

from ..graph.core import INF, EdgeKey, Graph, VertexMap
from ..graph.search import Direction, DistanceMap, KeepLike, pruned_dijkstra


@dataclass(frozen=True)
class Ball:
    """Vertices within roundtrip distance radius_bound of center.

    The trees are shortest-path trees from/to the center restricted to the
    members, oriented as edges of the graph.
    """

    center: int
    radius_bound: int
    members: FrozenSet[int]
    in_tree: FrozenSet[EdgeKey] = frozenset()
    out_tree: FrozenSet[EdgeKey] = frozenset()

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_nontrivial(self) -> bool:
        return len(self.members) >= 2

    def tree_edges(self) -> Set[EdgeKey]:
        return set(self.in_tree) | set(self.out_tree)

    def lift(self, vertex_map: VertexMap) -> 'Ball':
        return Ball(
            vertex_map.lift(self.center),
            self.radius_bound,
            frozenset(vertex_map.lift_set(self.members)),
            frozenset(vertex_map.lift_edges(self.in_tree)),
            frozenset(vertex_map.lift_edges(self.out_tree)),
        )


@dataclass
class Cover:
    """A (stretch_factor, R) roundtrip cover of a graph.

    Every ball satisfies radius_bound <= stretch_factor * R.
    """

    balls: List[Ball]
    k: int
    R: int
    stretch_factor: float
    stats: dict = field(default_factory=dict)

    @property
    def total_members(self) -> int:
        return sum(b.size for b in self.balls)

    def nontrivial(self) -> List[Ball]:
        return [b for b in self.balls if b.is_nontrivial]

    def tree_edges(self) -> Set[EdgeKey]:
        edges: Set[EdgeKey] = set()
        for ball in self.balls:
            edges |= ball.tree_edges()
        return edges

    def __len__(self) -> int:
        return len(self.balls)


def roundtrip_ball(g: Graph, center: int, radius: int, keep: Optional[KeepLike] = None) -> Ball:
    """B_center(radius) inside the kept subgraph, with its two trees.

    Every vertex on a shortest center -> u -> center walk is itself within the
    radius, so the trees never leave the members.
    """
    keep = keep if keep is not None else (lambda v: True)
    out = pruned_dijkstra(g, center, Direction.FROM, radius, keep)
    back = pruned_dijkstra(g, center, Direction.TO, radius, keep)
    return ball_from_searches(radius, out, back)


def ball_from_searches(radius: int, out: DistanceMap, back: DistanceMap) -> Ball:
    """Ball of the given radius from a FROM and a TO search of the same center.

    Both searches must be exact up to radius.
    """
    center = out.source
    members = frozenset(
        v for v in out.reached() if back.dist[v] < INF and out.dist[v] + back.dist[v] <= radius
    )
    return Ball(
        center,
        radius,
        members,
        in_tree=frozenset(back.tree_edges(members)),
        out_tree=frozenset(out.tree_edges(members)),
    )


def realized_radius(g: Graph, ball: Ball) -> int:
    """Largest roundtrip distance from the center to a member inside G[members]."""
    members = ball.members
    out = pruned_dijkstra(g, ball.center, Direction.FROM, None, members)
    back = pruned_dijkstra(g, ball.center, Direction.TO, None, members)
    worst = 0
    for v in members:
        if out.dist[v] >= INF or back.dist[v] >= INF:
            return INF
        worst = max(worst, out.dist[v] + back.dist[v])
    return worst


def union_tree_edges(covers: Iterable[Cover]) -> Set[EdgeKey]:
    edges: Set[EdgeKey] = set()
    for cover in covers:
        edges |= cover.tree_edges()
    return edges
