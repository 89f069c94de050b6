"""Deterministic roundtrip covers by in/out ball growing.

Each piece of the graph is handled by growing an in-ball and an out-ball
around its lowest vertex in steps of R. As soon as one of the balls offers a
good cut, the larger ball becomes a new piece and the smaller one is deleted;
if both balls get large, one roundtrip ball is emitted and their intersection
is deleted. Pieces are vertex sets of the input graph, so no induced copy is
ever built.
"""

import bisect
import heapq
import logging
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from ..errors import ArgumentError, InvariantViolation
from ..graph.core import INF, EdgeKey, Graph
from ..graph.cycles import self_loop_witness, zero_weight_cycle, zero_weight_skeleton
from ..graph.search import Direction, shortest_cycle_through
from ..utils.numeric import at_most, dyadic_schedule, loglog
from .base import BasePipeline, GirthResult
from .cover import Ball, Cover, roundtrip_ball

logger = logging.getLogger(__name__)

Tally = Tuple[int, int]


def good_cut(n: int, m: int, inner: Tally, outer: Tally, k: int) -> bool:
    """Whether recursing on the outer ball and deleting the inner one is good progress.

    inner and outer are (vertex count, edge count) pairs.
    """
    v1, e1 = inner
    v2, e2 = outer
    exponent = (k - 1) / k
    if not at_most(v2, 0.75 * n):
        return False
    if not at_most(v2, v1 ** exponent * n ** (1 / k)):
        return False
    return at_most(e2, max((1 + 1 / k) * e1, e1 ** exponent * m ** (1 / k)))


def grows_in_ball(inner_in: Tally, inner_out: Tally, n: int) -> bool:
    """Whether the in-ball grows next: the lighter ball grows, and a big ball waits for the other.

    A ball is big once it holds 3n/4 vertices. The in-ball rule mirrors the
    out-ball one, so a big in-ball never grows while the out-ball is small.
    """
    in_size, in_edges = inner_in
    out_size, out_edges = inner_out
    in_big = 4 * in_size >= 3 * n
    out_big = 4 * out_size >= 3 * n
    if in_big and not out_big:
        return False
    return in_edges <= out_edges or out_big


def stretch_factor(n: int, k: int) -> int:
    """Declared radius over R for every ball: 2 * 5k LL(n) + 1."""
    return 2 * 5 * k * loglog(n) + 1


class BallGrower:
    """Dijkstra from a center inside a piece, advanced only as far as asked.

    Settled vertices are kept in distance order with running vertex and edge
    tallies, so the ball of any certified radius is a prefix.
    """

    def __init__(self, g: Graph, center: int, direction: Direction, piece: Set[int]):
        self.g = g
        self.piece = piece
        self.direction = direction
        self._adjacency = g.out_edges if direction is Direction.FROM else g.in_edges
        self._dist: Dict[int, int] = {center: 0}
        self._heap: List[Tuple[int, int]] = [(0, center)]
        self._settled: Set[int] = set()
        self.order: List[int] = []
        self.distances: List[int] = []
        self.edge_tally: List[int] = []

    def frontier(self) -> int:
        """Smallest tentative distance not yet settled, INF when exhausted."""
        while self._heap and self._heap[0][1] in self._settled:
            heapq.heappop(self._heap)
        return self._heap[0][0] if self._heap else INF

    def grow_to(self, radius: int) -> None:
        while self.frontier() <= radius:
            d, u = heapq.heappop(self._heap)
            self._settled.add(u)
            inside = sum(1 for x, _ in self.g.out_edges(u) if x in self._settled and x != u)
            inside += sum(1 for x, _ in self.g.in_edges(u) if x in self._settled and x != u)
            self.order.append(u)
            self.distances.append(d)
            self.edge_tally.append((self.edge_tally[-1] if self.edge_tally else 0) + inside)
            for x, w in self._adjacency(u):
                if x not in self.piece or x in self._settled:
                    continue
                nd = d + w
                if nd < self._dist.get(x, INF):
                    self._dist[x] = nd
                    heapq.heappush(self._heap, (nd, x))

    def _prefix(self, radius: int) -> int:
        self.grow_to(radius)
        return bisect.bisect_right(self.distances, radius)

    def tally(self, radius: int) -> Tally:
        """(|V|, |E|) of the ball of the given radius."""
        count = self._prefix(radius)
        return count, (self.edge_tally[count - 1] if count else 0)

    def members(self, radius: int) -> Set[int]:
        return set(self.order[:self._prefix(radius)])


class RoundtripCoverBuilder(BasePipeline[Cover]):
    """Builds a (stretch_factor, R) roundtrip cover deterministically.

    Args:
        k: trade-off parameter, >= 1
        R: cover radius, >= 1
    """

    def __init__(self, k: int, R: int, debug: bool = False):
        super().__init__(debug=debug)
        if k < 1:
            raise ArgumentError(f"k must be >= 1, got {k}")
        if R < 1:
            raise ArgumentError(f"radius must be >= 1, got {R}")
        self.k = k
        self.R = R

    def _split(self, g: Graph, piece: Set[int]) -> Tuple[Optional[Ball], List[Set[int]]]:
        """One pass of the growth loop: the emitted ball (if any) and the new pieces."""
        k, R = self.k, self.R
        n = len(piece)
        m = g.edges_within(piece)
        limit = 5 * k * loglog(n)
        r = limit * R
        v = min(piece)
        in_ball = BallGrower(g, v, Direction.TO, piece)
        out_ball = BallGrower(g, v, Direction.FROM, piece)
        i_in = i_out = 0

        while True:
            if 1 + max(i_in, i_out) > limit:
                raise InvariantViolation(
                    f"ball growth exceeded {limit} rings",
                    {'center': v, 'i_in': i_in, 'i_out': i_out, 'piece': n},
                )
            in_next = in_ball.tally((i_in + 1) * R)
            out_next = out_ball.tally((i_out + 1) * R)
            if 4 * min(in_next[0], out_next[0]) >= 3 * n:
                ball = roundtrip_ball(g, v, 2 * r + R, keep=piece)
                removed = in_ball.members((i_in + 1) * R) & out_ball.members((i_out + 1) * R)
                self.stats.both_big += 1
                return ball, [piece - removed]
            if good_cut(n, m, in_ball.tally(i_in * R), in_next, k):
                self.stats.in_cuts += 1
                return None, [piece - in_ball.members(i_in * R), in_ball.members((i_in + 1) * R)]
            if good_cut(n, m, out_ball.tally(i_out * R), out_next, k):
                self.stats.out_cuts += 1
                return None, [piece - out_ball.members(i_out * R), out_ball.members((i_out + 1) * R)]

            if grows_in_ball(in_ball.tally(i_in * R), out_ball.tally(i_out * R), n):
                i_in += 1
            else:
                i_out += 1
            self.stats.max_ring = max(self.stats.max_ring, 1 + max(i_in, i_out))

    def run(self, g: Graph, vertices: Optional[Set[int]] = None) -> Cover:
        top = set(g.vertices()) if vertices is None else set(vertices)
        balls: List[Ball] = []
        stack = [top] if top else []
        with self.timed('cover'):
            while stack:
                piece = stack.pop()
                if not piece:
                    continue
                self.stats.pieces += 1
                ball, pieces = self._split(g, piece)
                if ball is not None:
                    balls.append(ball)
                # the outer ball is listed last so it is processed first
                stack.extend(p for p in pieces if p)

        cover = Cover(balls=balls, k=self.k, R=self.R, stretch_factor=stretch_factor(len(top), self.k))
        cover.stats = self.get_stats()
        if self.debug:
            self.logger.debug(
                f"R={self.R}: {len(balls)} balls, {cover.total_members} memberships, "
                f"{self.stats.pieces} pieces"
            )
        return cover


def roundtrip_cover(g: Graph, k: int, R: int) -> Cover:
    """(2 * 5k LL(n) + 1, R) roundtrip cover; identical output across runs."""
    return RoundtripCoverBuilder(k, R).run(g)


def det_girth(g: Graph, k: int, debug: bool = False) -> GirthResult:
    """Smallest declared radius of a nontrivial ball over dyadic scales.

    Sandwich: girth <= estimate <= (20 k LL(n) + 2) * girth. The witness is the
    shortest cycle through the certificate ball's center inside its members.
    """
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    loop = self_loop_witness(g)
    zero = zero_weight_cycle(g)
    if zero is not None:
        return GirthResult(estimate=0, witness=zero)
    if nx.is_directed_acyclic_graph(g.to_networkx()):
        if loop is not None:
            return GirthResult(estimate=loop.length, witness=loop)
        return GirthResult(estimate=INF, witness=None)

    best: Optional[Tuple[int, int, Ball]] = None
    schedule = []
    timings: Dict[str, float] = {}
    for R in dyadic_schedule(g.n * g.max_weight):
        builder = RoundtripCoverBuilder(k, R, debug=debug)
        cover = builder.run(g)
        timings['cover_time'] = timings.get('cover_time', 0.0) + builder.stats['cover_time']
        nontrivial = cover.nontrivial()
        schedule.append((R, bool(nontrivial)))
        for ball in nontrivial:
            if best is None or ball.radius_bound < best[0]:
                best = (ball.radius_bound, R, ball)

    if best is None:
        raise InvariantViolation("cyclic graph produced no nontrivial ball at any scale")
    estimate, scale, ball = best
    witness = shortest_cycle_through(g, ball.center, ball.members)
    if witness is None:
        raise InvariantViolation(f"nontrivial ball at {ball.center} holds no cycle through its center")
    if loop is not None and loop.length < estimate:
        return GirthResult(estimate=loop.length, witness=loop, schedule=schedule, timings=timings)
    logger.info(f"deterministic girth estimate {estimate} at scale {scale}")
    return GirthResult(estimate=estimate, witness=witness, schedule=schedule, scale=scale,
                       ball=ball, timings=timings)


def det_spanner(g: Graph, k: int, debug: bool = False) -> Tuple[Set[EdgeKey], Dict[int, int]]:
    """Union of all ball trees over dyadic scales up to 2nW, plus the zero-weight skeleton.

    Returns:
        (edges, per-scale edge counts)
    """
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    edges: Set[EdgeKey] = set()
    per_scale: Dict[int, int] = {}
    if g.n == 0:
        return edges, per_scale
    for R in dyadic_schedule(2 * g.n * g.max_weight):
        tree_edges = RoundtripCoverBuilder(k, R, debug=debug).run(g).tree_edges()
        per_scale[R] = len(tree_edges)
        edges |= tree_edges
    edges |= zero_weight_skeleton(g)
    logger.info(f"deterministic spanner: {len(edges)} of {g.m} edges over {len(per_scale)} scales")
    return edges, per_scale
