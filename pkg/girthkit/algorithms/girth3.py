"""Randomized 3-approximation of the girth.

similar_set filters, for every vertex, the vertices that could share a cycle
of length <= R with it; girth_approx then looks for such a cycle inside the
union of the forward and backward sets; girth_estimate searches the radius.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from ..errors import ArgumentError, RetryBudgetExhausted
from ..graph.core import INF, CycleWitness, Graph
from ..graph.cycles import self_loop_witness, zero_weight_cycle
from ..graph.search import Direction, DistanceCache, DistanceMap, cycle_from_search, shortest_cycle_through
from ..utils.numeric import geometric_schedule
from ..utils.rng import RngStreams
from .base import BasePipeline, GirthResult
from .filtering import SimilarSetParams, WitnessFilter, sample_rounds
from .regularize import lift_cycle, regularize

logger = logging.getLogger(__name__)

MODES = ('binary', 'geometric')


@dataclass
class SimilarSetOutcome:
    """Either a cycle of length <= 3R through a sampled vertex, or A_v for every v."""

    cycle: Optional[CycleWitness] = None
    sets: Dict[int, Set[int]] = field(default_factory=dict)
    trees: Dict[int, DistanceMap] = field(default_factory=dict)
    witnesses: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    sampled: int = 0

    @property
    def found_cycle(self) -> bool:
        return self.cycle is not None

    def mean_set_size(self) -> float:
        if not self.sets:
            return 0.0
        return sum(len(s) for s in self.sets.values()) / len(self.sets)


class GirthApprox3(BasePipeline[GirthResult]):
    """Radius search over girth_approx on the regularized graph.

    Args:
        params: sampling constants (defaults derived from the graph size)
        mode: 'binary' or 'geometric'
        epsilon: geometric ratio, geometric mode only
        retries: reruns of a failing radius with a derived seed
        workers: threads for the per-vertex filtering loop
    """

    def __init__(
        self,
        params: Optional[SimilarSetParams] = None,
        mode: str = 'binary',
        epsilon: float = 0.25,
        retries: int = 1,
        workers: int = 1,
        debug: bool = False,
    ):
        super().__init__(debug=debug)
        if mode not in MODES:
            raise ArgumentError(f"mode must be one of {MODES}, got {mode!r}")
        if mode == 'geometric' and epsilon <= 0:
            raise ArgumentError(f"epsilon must be positive, got {epsilon}")
        if retries < 0:
            raise ArgumentError(f"retries must be non-negative, got {retries}")
        self.params = params or SimilarSetParams()
        self.mode = mode
        self.epsilon = epsilon
        self.retries = retries
        self.workers = workers

    # Building blocks

    def similar_set(
        self,
        g: Graph,
        R: int,
        cache: Optional[DistanceCache] = None,
        tag: str = 'out',
        attempt: int = 0,
    ) -> SimilarSetOutcome:
        if R < 1:
            raise ArgumentError(f"radius must be >= 1, got {R}")
        params = self.params.resolved(g.n)
        cache = cache if cache is not None else DistanceCache(g)
        streams = RngStreams(params.seed).child('similar_set', tag, R, attempt)

        rounds = sample_rounds(streams, g.n, params.rounds, params.sample_prob)
        sampled = sorted(set().union(*(set(r.tolist()) for r in rounds)))
        self.stats.searches += 2 * len(sampled)

        best: Optional[CycleWitness] = None
        for s in sampled:
            cycle = cycle_from_search(g, cache.get(s, Direction.FROM, 3 * R), 3 * R)
            if cycle is not None and (best is None or cycle.length < best.length):
                best = cycle
        if best is not None:
            if self.debug:
                self.logger.debug(f"R={R} {tag}: sampled vertex on a cycle of length {best.length}")
            return SimilarSetOutcome(cycle=best, sampled=len(sampled))

        witness_filter = WitnessFilter(g, R, rounds, cache, streams, params.witness_size)
        filtered = witness_filter.filter_all(list(g.vertices()), self.workers)
        outcome = SimilarSetOutcome(
            sets={v: f.members for v, f in filtered.items()},
            trees={v: f.tree for v, f in filtered.items()},
            witnesses={v: f.witnesses for v, f in filtered.items()},
            sampled=len(sampled),
        )
        if self.debug:
            self.logger.debug(f"R={R} {tag}: {len(sampled)} samples, mean |A_v| {outcome.mean_set_size():.1f}")
        return outcome

    def girth_approx(
        self,
        g: Graph,
        R: int,
        cache: Optional[DistanceCache] = None,
        attempt: int = 0,
    ) -> Optional[CycleWitness]:
        cache = cache if cache is not None else DistanceCache(g)
        forward = self.similar_set(g, R, cache, 'out', attempt)
        if forward.cycle is not None:
            return forward.cycle
        backward = self.similar_set(g.reversed(), R, cache.reversed(), 'in', attempt)
        if backward.cycle is not None:
            return backward.cycle.reversed()
        for v in g.vertices():
            members = forward.sets[v] | backward.sets[v]
            members.add(v)
            cycle = shortest_cycle_through(g, v, members, R)
            if cycle is not None:
                return cycle
        return None

    def _probe(self, h: Graph, R: int, cache: DistanceCache, schedule: List[Tuple[int, bool]]) -> Optional[CycleWitness]:
        """girth_approx at R, rerun with derived seeds before reporting failure."""
        for attempt in range(self.retries + 1):
            with self.timed('approx'):
                cycle = self.girth_approx(h, R, cache, attempt)
            if cycle is not None:
                schedule.append((R, True))
                return cycle
            if attempt < self.retries:
                self.stats.retries += 1
                if self.debug:
                    self.logger.debug(f"R={R}: no cycle, retrying with attempt {attempt + 1}")
        schedule.append((R, False))
        return None

    # Outer search

    def run(self, g: Graph) -> GirthResult:
        loop = self_loop_witness(g)
        zero = zero_weight_cycle(g)
        if zero is not None:
            return GirthResult(estimate=0, witness=zero)
        if nx.is_directed_acyclic_graph(g.to_networkx()):
            if loop is not None:
                return GirthResult(estimate=loop.length, witness=loop)
            return GirthResult(estimate=INF, witness=None)

        with self.timed('regularize'):
            rg = regularize(g)
        h = rg.h
        cache = DistanceCache(h)
        schedule: List[Tuple[int, bool]] = []
        top = g.n * g.max_weight

        if self.mode == 'binary':
            best = self._probe(h, top, cache, schedule)
            if best is None:
                raise RetryBudgetExhausted(f"no cycle found at the top radius {top}", self.retries + 1)
            lo, hi = 0, top
            while hi - lo > 1:
                mid = (lo + hi) // 2
                cycle = self._probe(h, mid, cache, schedule)
                if cycle is not None:
                    hi, best = mid, cycle
                else:
                    lo = mid
        else:
            best = None
            for R in geometric_schedule(g.min_positive_weight or 1, top, self.epsilon):
                best = self._probe(h, R, cache, schedule)
                if best is not None:
                    break
            if best is None:
                raise RetryBudgetExhausted(f"no cycle found up to radius {top}", self.retries + 1)

        witness = lift_cycle(rg, best)
        if loop is not None and loop.length < witness.length:
            witness = loop
        self.stats.cache_hits = cache.hits
        self.stats.radii_evaluated = len(schedule)
        self.logger.info(f"girth estimate {witness.length} after {len(schedule)} radius evaluations")
        self.finish()
        timings = {k: v for k, v in self.get_stats().items() if k.endswith('_time')}
        return GirthResult(estimate=witness.length, witness=witness, schedule=schedule, timings=timings)


def similar_set(g: Graph, R: int, params: Optional[SimilarSetParams] = None) -> SimilarSetOutcome:
    """Similarity sets at radius R (g should already be degree-bounded)."""
    return GirthApprox3(params).similar_set(g, R)


def girth_approx(g: Graph, R: int, params: Optional[SimilarSetParams] = None) -> Optional[CycleWitness]:
    """A cycle of length <= 3R, or None; finds one w.h.p. when girth(g) <= R."""
    return GirthApprox3(params).girth_approx(g, R)


def girth_estimate(
    g: Graph,
    mode: str = 'binary',
    epsilon: float = 0.25,
    params: Optional[SimilarSetParams] = None,
    retries: int = 1,
    workers: int = 1,
) -> GirthResult:
    """Estimate g' with girth <= g' <= 3 girth w.h.p. (times 1 + epsilon in geometric mode).

    Returns INF with no witness for acyclic graphs.
    """
    return GirthApprox3(params, mode, epsilon, retries, workers).run(g)
