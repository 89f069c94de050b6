"""Exact baselines and verifiers.

Everything here is quadratic or worse and guarded by an all-pairs capacity
limit; it is the ground truth the approximate pipelines are checked against.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from ..errors import CapacityError
from ..graph.core import INF, CycleWitness, EdgeKey, Graph
from ..graph.cycles import self_loop_witness
from ..graph.search import Direction, cycle_from_search, dijkstra
from .cover import Cover, realized_radius

logger = logging.getLogger(__name__)

APSP_LIMIT = 512

Stretch = Union[Fraction, float]


def exact_girth(g: Graph) -> Tuple[int, Optional[CycleWitness]]:
    """Exact girth by one Dijkstra per vertex.

    The shortest cycle through v is min over in-edges (u, v) of d(v, u) + w(u, v).

    Returns:
        (girth, witness), or (INF, None) for an acyclic graph
    """
    best = self_loop_witness(g)
    for v in g.vertices():
        if best is not None and best.length == 0:
            break
        cycle = cycle_from_search(g, dijkstra(g, v, Direction.FROM))
        if cycle is not None and (best is None or cycle.length < best.length):
            best = cycle
    if best is None:
        return INF, None
    return best.length, best


def distance_matrix(g: Graph, limit: int = APSP_LIMIT, workers: int = 1) -> np.ndarray:
    """All-pairs distances, D[u, v] = d(u, v), INF when unreachable.

    Raises:
        CapacityError: when g.n exceeds limit
    """
    if g.n > limit:
        raise CapacityError(f"all-pairs verification limited to n <= {limit}, got n = {g.n}")
    if workers > 1 and g.n > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda v: dijkstra(g, v).dist, range(g.n)))
    else:
        rows = [dijkstra(g, v).dist for v in range(g.n)]
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def roundtrip_matrix(distances: np.ndarray) -> np.ndarray:
    """RT[u, v] = d(u, v) + d(v, u), INF when either side is."""
    total = distances + distances.T
    return np.where((distances >= INF) | (distances.T >= INF), INF, total)


@dataclass
class CoverReport:
    ok: bool
    max_radius_seen: int
    violating_pair: Optional[Tuple[int, int, int]]
    ball_count: int
    total_ball_vertices: int
    radius_violations: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ok': self.ok,
            'max_radius_seen': self.max_radius_seen,
            'violating_pair': list(self.violating_pair) if self.violating_pair else None,
            'ball_count': self.ball_count,
            'total_ball_vertices': self.total_ball_vertices,
            'radius_violations': self.radius_violations,
        }


@dataclass
class StretchReport:
    max_stretch: Stretch
    worst_pair: Optional[Tuple[int, int, int, int]]
    pairs_checked: int
    alpha: float
    ok: bool
    edge_count: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'ok': self.ok,
            'alpha': self.alpha,
            'max_stretch': format_stretch(self.max_stretch),
            'worst_pair': list(self.worst_pair) if self.worst_pair else None,
            'pairs_checked': self.pairs_checked,
            'edge_count': self.edge_count,
        }


def format_stretch(value: Stretch) -> str:
    if isinstance(value, float):
        return 'inf'
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)


def verify_cover(
    g: Graph,
    cover: Cover,
    stretch_bound: float,
    R: int,
    limit: int = APSP_LIMIT,
    workers: int = 1,
) -> CoverReport:
    """Check completeness, realized radii and declared radii of a cover.

    (a) every pair u != v with d(u<->v) <= R shares a ball; (b) every member is
    within the declared radius of its center inside the ball's own subgraph;
    (c) every declared radius is at most stretch_bound * R.

    Raises:
        CapacityError: when g is too large for all-pairs distances
    """
    roundtrip = roundtrip_matrix(distance_matrix(g, limit, workers))
    n = g.n
    membership = np.zeros((len(cover.balls), n), dtype=np.int32)
    for i, ball in enumerate(cover.balls):
        membership[i, sorted(ball.members)] = 1
    shared = (membership.T @ membership) > 0 if len(cover.balls) else np.zeros((n, n), dtype=bool)
    needed = roundtrip <= R
    np.fill_diagonal(needed, False)
    uncovered = np.argwhere(needed & ~shared)
    violating_pair = None
    if len(uncovered):
        u, v = (int(x) for x in uncovered[0])
        violating_pair = (u, v, int(roundtrip[u, v]))

    max_seen = 0
    violations = []
    limit_radius = Fraction(stretch_bound).limit_denominator() * R
    for index, ball in enumerate(cover.balls):
        realized = realized_radius(g, ball)
        max_seen = max(max_seen, realized)
        if realized > ball.radius_bound:
            violations.append({'ball': index, 'center': ball.center, 'kind': 'realized',
                               'realized': realized, 'declared': ball.radius_bound})
        if ball.radius_bound > limit_radius:
            violations.append({'ball': index, 'center': ball.center, 'kind': 'declared',
                               'declared': ball.radius_bound, 'limit': float(limit_radius)})

    ok = violating_pair is None and not violations
    if not ok:
        logger.info(f"cover check failed: pair={violating_pair}, radius violations={len(violations)}")
    return CoverReport(
        ok=ok,
        max_radius_seen=max_seen,
        violating_pair=violating_pair,
        ball_count=len(cover.balls),
        total_ball_vertices=cover.total_members,
        radius_violations=violations,
    )


def verify_spanner(
    g: Graph,
    spanner_edges: Iterable[Tuple[int, ...]],
    alpha: float,
    radius: Optional[int] = None,
    limit: int = APSP_LIMIT,
    workers: int = 1,
) -> StretchReport:
    """Worst roundtrip stretch of a subgraph over pairs at finite roundtrip.

    Pairs with d_G(u<->v) = 0 need d_H(u<->v) = 0 (stretch 1), else the stretch
    is infinite. When radius is given only pairs with d_G(u<->v) <= radius count.

    Raises:
        ArgumentError: an edge is not in g
        CapacityError: g too large for all-pairs distances
    """
    keys: List[EdgeKey] = [(int(e[0]), int(e[1])) for e in spanner_edges]
    h = g.edge_subgraph(keys)
    rt_g = roundtrip_matrix(distance_matrix(g, limit, workers))
    rt_h = roundtrip_matrix(distance_matrix(h, limit, workers))

    upper = np.triu(np.ones_like(rt_g, dtype=bool), k=1)
    considered = upper & (rt_g < INF)
    if radius is not None:
        considered &= rt_g <= radius
    pairs_checked = int(considered.sum())

    max_stretch: Stretch = Fraction(1)
    worst = None
    if pairs_checked:
        broken = considered & ((rt_h >= INF) | ((rt_g == 0) & (rt_h > 0)))
        if broken.any():
            u, v = (int(x) for x in np.argwhere(broken)[0])
            max_stretch = float('inf')
            worst = (u, v, int(rt_g[u, v]), int(rt_h[u, v]))
        else:
            positive = considered & (rt_g > 0)
            if positive.any():
                ratios = np.where(positive, rt_h / np.where(rt_g > 0, rt_g, 1), 0.0)
                u, v = (int(x) for x in np.unravel_index(np.argmax(ratios), ratios.shape))
                candidate = Fraction(int(rt_h[u, v]), int(rt_g[u, v]))
                if candidate > max_stretch:
                    max_stretch = candidate
                    worst = (u, v, int(rt_g[u, v]), int(rt_h[u, v]))

    ok = max_stretch <= Fraction(alpha).limit_denominator()
    return StretchReport(
        max_stretch=max_stretch,
        worst_pair=worst,
        pairs_checked=pairs_checked,
        alpha=float(alpha),
        ok=ok,
        edge_count=h.m,
    )
