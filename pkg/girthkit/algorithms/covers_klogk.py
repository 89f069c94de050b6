"""Randomized (O(k log k), R) roundtrip covers.

A cover call samples vertex sets, emits a roundtrip ball around every sample
and switches off every vertex that is close to a sample in both directions.
The survivors get per-vertex witness samples, which bound the vertices that
can still be "similar" to them. Ball growing then works on the survivors
using similarity-filtered searches, recursing on the induced subgraph of the
larger ball at every good cut.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from ..errors import ArgumentError, BallGrowStalled, ContractError, InvariantViolation, RetryBudgetExhausted
from ..graph.core import INF, EdgeKey, Graph, VertexMap
from ..graph.cycles import self_loop_witness, zero_weight_cycle, zero_weight_skeleton
from ..graph.search import Direction, DistanceCache, dijkstra, pruned_dijkstra, shortest_cycle_through
from ..utils.numeric import at_most, dyadic_schedule, klogk_rounds, log_factor
from ..utils.rng import RngStreams
from .base import BasePipeline, GirthResult
from .cover import Ball, Cover, ball_from_searches
from .oracle import distance_matrix, roundtrip_matrix
from .regularize import RegularizedGraph, lift_cycle, lift_subgraph, regularize


logger = logging.getLogger(__name__)

ABSORB_CHECK_LIMIT = 128


@dataclass(frozen=True)
class KlogkParams:
    """Sampling constants; None means the default for the graph at hand.

    Defaults: sample_sets = 100 ceil(log2 n_hat), sample_size =
    min(n, 100 n^(1/k) ceil(log2 n_hat)^2), witness_size = 50 ceil(log2 n_hat).
    """

    sample_sets: Optional[int] = None
    sample_size: Optional[int] = None
    witness_size: Optional[int] = None

    def counts(self, n: int, n_hat: int, k: int) -> Tuple[int, int, int]:
        log_hat = log_factor(n_hat)
        sets = self.sample_sets if self.sample_sets is not None else 100 * log_hat
        size = self.sample_size if self.sample_size is not None else int(np.ceil(100 * n ** (1 / k) * log_hat ** 2))
        witnesses = self.witness_size if self.witness_size is not None else 50 * log_hat
        if sets < 1 or size < 1 or witnesses < 1:
            raise ArgumentError(f"sample parameters must be positive, got {(sets, size, witnesses)}")
        return sets, min(n, size), witnesses


class OnFlags:
    """Per-vertex on flags; a flag once cleared is never set again."""

    def __init__(self, n: int, on: Optional[np.ndarray] = None):
        self._on = np.ones(n, dtype=bool) if on is None else on.astype(bool).copy()

    def __getitem__(self, v: int) -> bool:
        return bool(self._on[v])

    def turn_off(self, vertices) -> None:
        self._on[list(vertices)] = False

    def mask(self) -> np.ndarray:
        return self._on.copy()

    def lowest_on(self) -> Optional[int]:
        on = np.flatnonzero(self._on)
        return int(on[0]) if len(on) else None

    def count(self) -> int:
        return int(self._on.sum())


@dataclass
class SimilarityData:
    """Distances to and from the global samples plus per-vertex witness rows.

    ``from_sample[r, x]`` is d(s_r, x) and ``to_sample[r, x]`` is d(x, s_r)
    for the r-th sampled vertex s_r. ``witness_rows[v]`` lists the rows of the
    witnesses drawn for v; ``exempt`` holds vertices whose rounds stopped
    early because too few candidates remained.
    """

    n_hat: int
    K: int
    samples: np.ndarray
    sample_sets: List[np.ndarray]
    from_sample: np.ndarray
    to_sample: np.ndarray
    witness_rows: Dict[int, np.ndarray] = field(default_factory=dict)
    exempt: Set[int] = field(default_factory=set)

    def witnesses(self, v: int) -> List[int]:
        return [int(self.samples[r]) for r in self._rows(v)]

    def _rows(self, v: int) -> np.ndarray:
        try:
            return self.witness_rows[v]
        except KeyError:
            raise ContractError(f"vertex {v} has no similarity data") from None

    def similar_mask(self, v: int, i: int, R: int) -> np.ndarray:
        """Vertices u passing the witness clause d(u, w) <= (i + K) R for every witness w of v."""
        rows = self._rows(v)
        n = self.to_sample.shape[1]
        if len(rows) == 0:
            return np.ones(n, dtype=bool)
        return self.to_sample[rows].max(axis=0) <= (i + self.K) * R


@dataclass
class BuildSimilarResult:
    """Residual on flags, the sample balls, and the similarity data."""

    on: OnFlags
    balls: List[Ball]
    data: SimilarityData

    def residual(self, g: Graph) -> Tuple[Graph, VertexMap]:
        """G' = G[on vertices]."""
        return g.induced_subgraph(np.flatnonzero(self.on.mask()).tolist())


@dataclass
class GrowEvent:
    """One good cut: the recursion set and the vertices switched off."""

    center: int
    ring: int
    inner: frozenset
    outer: frozenset


def good_cut2(n: int, inner: int, outer: int, k: int) -> bool:
    """outer <= n^(1/k) * inner^((k-1)/k)."""
    return at_most(outer, n ** (1 / k) * inner ** ((k - 1) / k))


def cover2_stretch(k: int) -> int:
    return 4 * klogk_rounds(k) + 1


def check_absorbed(
    g: Graph,
    rt: np.ndarray,
    on: np.ndarray,
    inner: Set[int],
    outer: Set[int],
    R: int,
) -> int:
    """Ring i + 1 absorbs the on neighbours of ring i.

    An on vertex x with a roundtrip of weight <= R to some u in inner, using
    on vertices only, must lie in outer. rt holds roundtrip distances in g;
    the pairs it flags are re-measured inside the on vertices.

    Returns:
        the number of flagged pairs whose short roundtrip leaves the on vertices

    Raises:
        InvariantViolation: an on neighbour of inner is missing from outer
    """
    if not inner:
        return 0
    missing = on.copy()
    missing[list(outer)] = False
    rows = sorted(inner)
    near = (rt[rows] <= R) & missing
    detours = 0
    for row, x in zip(*np.nonzero(near)):
        u, x = rows[int(row)], int(x)
        there = pruned_dijkstra(g, u, Direction.FROM, R, on)[x]
        back = pruned_dijkstra(g, x, Direction.FROM, R, on)[u]
        if there + back <= R:
            raise InvariantViolation(
                f"vertex {x} is within roundtrip {there + back} of ring member {u} but outside the next ring"
            )
        detours += 1
    return detours


def build_similar(
    g: Graph,
    k: int,
    R: int,
    n_hat: int,
    streams: RngStreams,
    params: Optional[KlogkParams] = None,
) -> BuildSimilarResult:
    """Sample balls, off marking, and witness sets for one cover call."""
    if n_hat < g.n:
        raise ArgumentError(f"n_hat ({n_hat}) must be at least n ({g.n})")
    K = klogk_rounds(k)
    n = g.n
    set_count, set_size, witness_size = (params or KlogkParams()).counts(max(n, 1), n_hat, k)

    sample_sets = []
    for j in range(set_count if n else 0):
        sample_sets.append(np.sort(streams.generator('sample', j).choice(n, size=set_size, replace=False)))
    samples = np.unique(np.concatenate(sample_sets)) if sample_sets else np.zeros(0, dtype=np.int64)
    row_of = {int(s): r for r, s in enumerate(samples)}

    radius = (4 * K + 1) * R
    cache = DistanceCache(g)
    out_maps = [cache.get(int(s), Direction.FROM, radius) for s in samples]
    in_maps = [cache.get(int(s), Direction.TO, radius) for s in samples]
    balls = [ball_from_searches(radius, out, back) for out, back in zip(out_maps, in_maps)]
    from_sample = np.array([m.dist for m in out_maps], dtype=np.int64).reshape(len(samples), n)
    to_sample = np.array([m.dist for m in in_maps], dtype=np.int64).reshape(len(samples), n)

    near = (from_sample <= 2 * K * R) & (to_sample <= 2 * K * R)
    on = OnFlags(n, ~near.any(axis=0) if len(samples) else None)

    data = SimilarityData(
        n_hat=n_hat,
        K=K,
        samples=samples,
        sample_sets=[np.array([row_of[int(s)] for s in chosen], dtype=np.int64) for chosen in sample_sets],
        from_sample=from_sample,
        to_sample=to_sample,
    )
    # d(u, w) for sampled u and w: pairwise[w_row, u_row]
    pairwise = to_sample[:, samples] if len(samples) else np.zeros((0, 0), dtype=np.int64)
    rounds = min(K, len(sample_sets))
    for v in np.flatnonzero(on.mask()):
        v = int(v)
        rng = streams.generator('witness', v)
        worst = np.zeros(len(samples), dtype=np.int64)
        chosen: List[int] = []
        for i in range(rounds):
            rows = data.sample_sets[i]
            candidates = rows[(to_sample[rows, v] <= K * R) & (worst[rows] <= 2 * K * R)]
            if len(candidates) < witness_size:
                data.exempt.add(v)
                break
            drawn = rng.choice(candidates, size=witness_size, replace=False)
            chosen.extend(int(r) for r in drawn)
            worst = np.maximum(worst, pairwise[drawn].max(axis=0))
        data.witness_rows[v] = np.array(sorted(set(chosen)), dtype=np.int64)

    logger.debug(
        f"build_similar n={n} R={R}: {len(samples)} samples, {on.count()} on, {len(data.exempt)} exempt"
    )
    return BuildSimilarResult(on=on, balls=balls, data=data)


def similar(
    g: Graph,
    u: int,
    v: int,
    data: SimilarityData,
    i: int,
    R: int,
    dist_vu: Optional[int] = None,
) -> bool:
    """Whether u is i-similar to v: d(v, u) <= iR and d(u, w) <= (i + K) R for every witness w.

    Raises:
        ContractError: v has no similarity data
    """
    rows = data._rows(v)
    if dist_vu is None:
        dist_vu = dijkstra(g, v, Direction.FROM, i * R)[u]
    if dist_vu > i * R:
        return False
    return bool(np.all(data.to_sample[rows, u] <= (i + data.K) * R))


class RoundtripCover2Builder(BasePipeline[Cover]):
    """Randomized roundtrip cover with stretch 4K + 1, K = klogk_rounds(k).

    Args:
        k: trade-off parameter, >= 1
        R: cover radius, >= 1
        seed: base seed; retries derive fresh streams from it
        retries: reseeds after a stalled ball growth
        params: sampling overrides
        record: keep the good-cut events for inspection
        check_limit: largest subgraph whose rings are checked against exact
            roundtrip distances; None disables the check
    """

    def __init__(
        self,
        k: int,
        R: int,
        seed: int = 0,
        retries: int = 3,
        params: Optional[KlogkParams] = None,
        record: bool = False,
        debug: bool = False,
        check_limit: Optional[int] = ABSORB_CHECK_LIMIT,
    ):
        super().__init__(debug=debug)
        if k < 1:
            raise ArgumentError(f"k must be >= 1, got {k}")
        if R < 1:
            raise ArgumentError(f"radius must be >= 1, got {R}")
        if retries < 0:
            raise ArgumentError(f"retries must be non-negative, got {retries}")
        self.k = k
        self.R = R
        self.K = klogk_rounds(k)
        self.seed = seed
        self.retries = retries
        self.params = params
        self.record = record
        self.check_limit = check_limit
        self.events: List[GrowEvent] = []
        self._calls = 0
        self._streams = RngStreams(seed)
        self._attempt_streams = self._streams.child('cover2', R, 0)

    def ball_grow(self, g: Graph, data: SimilarityData, flags: OnFlags, n_hat: int) -> List[Ball]:
        """Partition the on vertices by similarity-filtered ball growing."""
        R, K = self.R, self.K
        n = flags.count()
        balls: List[Ball] = []
        rt = None
        if n and self.check_limit is not None and g.n <= self.check_limit:
            rt = roundtrip_matrix(distance_matrix(g, self.check_limit))
        while True:
            v = flags.lowest_on()
            if v is None:
                return balls
            on = flags.mask()

            def grow(i: int) -> Set[int]:
                keep = on & data.similar_mask(v, i, R)
                if not keep[v]:
                    raise InvariantViolation(f"vertex {v} is not similar to itself at ring {i}")
                return pruned_dijkstra(g, v, Direction.FROM, i * R, keep).reached_set()

            inner = grow(0)
            for i in range(K):
                outer = grow(i + 1)
                if not inner <= outer:
                    raise InvariantViolation(f"ring {i} at {v} is not nested in ring {i + 1}")
                if rt is not None:
                    self.stats.absorb_detours += check_absorbed(g, rt, on, inner, outer, R)
                    self.stats.absorb_checks += 1
                if good_cut2(n, len(inner), len(outer), self.k):
                    if self.record:
                        self.events.append(GrowEvent(v, i, frozenset(inner), frozenset(outer)))
                    sub, vertex_map = g.induced_subgraph(outer)
                    balls.extend(b.lift(vertex_map) for b in self._cover(sub, n_hat))
                    flags.turn_off(inner)
                    self.stats.cuts += 1
                    break
                inner = outer
            else:
                raise BallGrowStalled(v, K * R, len(inner))

    def _cover(self, g: Graph, n_hat: int) -> List[Ball]:
        if g.n == 0:
            return []
        self._calls += 1
        streams = self._attempt_streams.child('call', self._calls)
        built = build_similar(g, self.k, self.R, n_hat, streams, self.params)
        self.stats.sample_balls += len(built.balls)
        return built.balls + self.ball_grow(g, built.data, built.on, n_hat)

    def run(self, g: Graph) -> Cover:
        last: Optional[BallGrowStalled] = None
        for attempt in range(self.retries + 1):
            self._calls = 0
            self.events = []
            self._attempt_streams = self._streams.child('cover2', self.R, attempt)
            try:
                with self.timed('cover'):
                    balls = self._cover(g, g.n)
            except BallGrowStalled as e:
                last = e
                self.stats.retries += 1
                self.error_tracker.add_error('WHP_RETRY', str(e), {'attempt': attempt, 'R': self.R})
                self.logger.warning(f"ball growth stalled on attempt {attempt + 1}: {e}")
                continue
            cover = Cover(balls=balls, k=self.k, R=self.R, stretch_factor=cover2_stretch(self.k))
            cover.stats = self.get_stats()
            if self.debug:
                self.logger.debug(f"R={self.R}: {len(balls)} balls over {self._calls} cover calls")
            return cover
        raise RetryBudgetExhausted(
            f"roundtrip cover at R={self.R} stalled in all {self.retries + 1} attempts",
            self.retries + 1,
            last,
        )


def ball_grow(
    g: Graph,
    k: int,
    R: int,
    data: SimilarityData,
    flags: OnFlags,
    seed: int = 0,
    params: Optional[KlogkParams] = None,
) -> List[Ball]:
    """Ball growing over the on vertices of g; recursive covers use data.n_hat.

    Raises:
        BallGrowStalled: no ring passes the good-cut test for some vertex
    """
    return RoundtripCover2Builder(k, R, seed, 0, params).ball_grow(g, data, flags, data.n_hat)


def roundtrip_cover2(
    g: Graph,
    k: int,
    R: int,
    seed: int = 0,
    retries: int = 3,
    params: Optional[KlogkParams] = None,
) -> Cover:
    """(4K + 1, R) roundtrip cover, complete with high probability."""
    return RoundtripCover2Builder(k, R, seed, retries, params).run(g)


def _lift_ball(rg: RegularizedGraph, ball: Ball) -> Ball:
    return Ball(
        center=rg.owner[ball.center],
        radius_bound=ball.radius_bound,
        members=frozenset(rg.owner[x] for x in ball.members),
        in_tree=frozenset(lift_subgraph(rg, ball.in_tree)),
        out_tree=frozenset(lift_subgraph(rg, ball.out_tree)),
    )


def klogk_girth(
    g: Graph,
    k: int,
    seed: int = 0,
    retries: int = 3,
    params: Optional[KlogkParams] = None,
    debug: bool = False,
) -> GirthResult:
    """Declared radius of the first nontrivial ball over dyadic scales, on the regularized graph.

    girth <= estimate always; estimate <= 2 (4K + 1) girth with high probability.
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

    rg = regularize(g)
    schedule = []
    timings: Dict[str, float] = {}
    for R in dyadic_schedule(g.n * g.max_weight):
        builder = RoundtripCover2Builder(k, R, seed, retries, params, debug=debug)
        cover = builder.run(rg.h)
        timings['cover_time'] = timings.get('cover_time', 0.0) + builder.stats['cover_time']
        nontrivial = sorted(cover.nontrivial(), key=lambda b: (b.radius_bound, b.center))
        schedule.append((R, bool(nontrivial)))
        if not nontrivial:
            continue
        ball = nontrivial[0]
        cycle = shortest_cycle_through(rg.h, ball.center, ball.members)
        if cycle is None:
            raise InvariantViolation(f"nontrivial ball at {ball.center} holds no cycle through its center")
        witness = lift_cycle(rg, cycle)
        estimate = ball.radius_bound
        if loop is not None and loop.length < estimate:
            return GirthResult(estimate=loop.length, witness=loop, schedule=schedule, timings=timings)
        logger.info(f"klogk girth estimate {estimate} at scale {R}")
        return GirthResult(estimate=estimate, witness=witness, schedule=schedule, scale=R,
                           ball=_lift_ball(rg, ball), timings=timings)
    raise InvariantViolation("cyclic graph produced no nontrivial ball at any scale")


def klogk_spanner(
    g: Graph,
    k: int,
    seed: int = 0,
    retries: int = 3,
    params: Optional[KlogkParams] = None,
    debug: bool = False,
) -> Tuple[Set[EdgeKey], Dict[int, int]]:
    """Lifted union of cover trees over dyadic scales up to 2nW, plus the zero-weight skeleton.

    Returns:
        (edges of g, per-scale edge counts measured in the regularized graph)
    """
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    edges: Set[EdgeKey] = set()
    per_scale: Dict[int, int] = {}
    if g.n == 0:
        return edges, per_scale
    rg = regularize(g)
    tree_edges: Set[EdgeKey] = set()
    for R in dyadic_schedule(2 * g.n * g.max_weight):
        scale_edges = RoundtripCover2Builder(k, R, seed, retries, params, debug=debug).run(rg.h).tree_edges()
        per_scale[R] = len(scale_edges)
        tree_edges |= scale_edges
    edges = lift_subgraph(rg, tree_edges) | zero_weight_skeleton(g)
    logger.info(f"klogk spanner: {len(edges)} of {g.m} edges over {len(per_scale)} scales")
    return edges, per_scale
