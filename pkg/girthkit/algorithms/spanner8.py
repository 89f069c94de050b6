"""Roundtrip spanners with stretch 8 per target radius.

For a radius R, full shortest-path trees to and from a global sample U go
into the spanner. Vertices within roundtrip 3R of some sample are then
settled; the remaining survivors Z get similarity sets through the same
witness filtering as the girth pipeline, restricted to Z, and a tree grown
inside each survivor's sets completes the spanner. The multi-scale union over
a geometric radius schedule gives an 8(1 + epsilon) roundtrip spanner.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Set, Tuple

import numpy as np

from ..errors import ArgumentError
from ..graph.core import INF, EdgeKey, Graph
from ..graph.cycles import zero_weight_skeleton
from ..graph.search import Direction, DistanceCache, pruned_dijkstra
from ..utils.numeric import geometric_schedule, log_factor
from ..utils.rng import RngStreams
from .base import BasePipeline
from .filtering import SimilarSetParams, WitnessFilter, sample_rounds
from .regularize import lift_subgraph, regularize

logger = logging.getLogger(__name__)

SAMPLE_TREE = 'sample-tree'
REVERSED_SAMPLE_TREE = 'reversed-sample-tree'
VERTEX_TREE = 'vertex-tree'


class SpannerAccumulator:
    """Deduplicated edge set with the tags of every contribution."""

    def __init__(self, g: Graph):
        self.g = g
        self.provenance: Dict[EdgeKey, Set[str]] = defaultdict(set)

    def add(self, edges: Iterable[EdgeKey], tag: str) -> None:
        for u, v in edges:
            if not self.g.has_edge(u, v):
                raise ArgumentError(f"({u}, {v}) is not an edge of the graph")
            self.provenance[(u, v)].add(tag)

    def add_reversed(self, edges: Iterable[EdgeKey], tag: str) -> None:
        """Add edges found in the reversed graph, flipped back."""
        self.add(((v, u) for u, v in edges), tag)

    @property
    def edges(self) -> Set[EdgeKey]:
        return set(self.provenance)

    def tagged(self, tag: str) -> Set[EdgeKey]:
        return {e for e, tags in self.provenance.items() if tag in tags}

    def __len__(self) -> int:
        return len(self.provenance)


@dataclass
class SurvivorSet:
    """Z: vertices at roundtrip distance more than 3R from every global sample."""

    R: int
    samples: Tuple[int, ...]
    mask: np.ndarray

    @property
    def vertices(self) -> Set[int]:
        return {int(v) for v in np.flatnonzero(self.mask)}

    def __contains__(self, v: int) -> bool:
        return bool(self.mask[v])

    def __len__(self) -> int:
        return int(self.mask.sum())


@dataclass
class SpannerSetOutcome:
    """H' (edges of the searched graph), Z, and A_v for every v in Z."""

    edges: Set[EdgeKey]
    survivors: SurvivorSet
    sets: Dict[int, Set[int]] = field(default_factory=dict)


def global_sample_prob(n: int) -> float:
    """min(1, 100 ceil(log2 n) / sqrt(n))."""
    if n <= 1:
        return 1.0
    return min(1.0, 100 * log_factor(n) / n ** 0.5)


class SpannerApprox8(BasePipeline[Set[EdgeKey]]):
    """Per-radius spanners and their multi-scale union.

    Args:
        params: witness-filter sampling constants
        global_prob: probability of a vertex joining U (default min(1, 100 log n / sqrt n))
        epsilon: ratio of the radius schedule used by run()
        workers: threads for the per-vertex filtering loop
    """

    def __init__(
        self,
        params: Optional[SimilarSetParams] = None,
        global_prob: Optional[float] = None,
        epsilon: float = 0.25,
        workers: int = 1,
        debug: bool = False,
    ):
        super().__init__(debug=debug)
        if epsilon <= 0:
            raise ArgumentError(f"epsilon must be positive, got {epsilon}")
        if global_prob is not None and not 0 <= global_prob <= 1:
            raise ArgumentError(f"global sample probability must lie in [0, 1], got {global_prob}")
        self.params = params or SimilarSetParams()
        self.global_prob = global_prob
        self.epsilon = epsilon
        self.workers = workers
        self.per_scale: Dict[int, int] = {}

    def similar_set_spanner(
        self,
        g: Graph,
        R: int,
        cache: Optional[DistanceCache] = None,
        tag: str = 'out',
    ) -> SpannerSetOutcome:
        if R < 1:
            raise ArgumentError(f"radius must be >= 1, got {R}")
        params = self.params.resolved(g.n)
        cache = cache if cache is not None else DistanceCache(g)
        streams = RngStreams(params.seed).child('spanner', tag, R)
        prob = self.global_prob if self.global_prob is not None else global_sample_prob(g.n)

        samples = np.flatnonzero(streams.generator('global').random(g.n) < prob)
        edges: Set[EdgeKey] = set()
        far = np.ones(g.n, dtype=bool)
        for u in samples:
            out = cache.get(int(u), Direction.FROM)
            back = cache.get(int(u), Direction.TO)
            edges |= out.tree_edges() | back.tree_edges()
            there, home = out.as_array(), back.as_array()
            roundtrip = np.where((there >= INF) | (home >= INF), INF, there + home)
            far &= roundtrip > 3 * R
        self.stats.searches += 2 * len(samples)
        survivors = SurvivorSet(R, tuple(int(u) for u in samples), far)

        rounds = sample_rounds(streams, g.n, params.rounds, params.sample_prob, universe=far)
        witness_filter = WitnessFilter(g, R, rounds, cache, streams, params.witness_size, universe=far)
        filtered = witness_filter.filter_all(sorted(survivors.vertices), self.workers)
        if self.debug:
            self.logger.debug(f"R={R} {tag}: |U|={len(samples)}, |Z|={len(survivors)}, |H'|={len(edges)}")
        return SpannerSetOutcome(
            edges=edges,
            survivors=survivors,
            sets={v: f.members for v, f in filtered.items()},
        )

    def spanner_approx(self, g: Graph, R: int, cache: Optional[DistanceCache] = None) -> SpannerAccumulator:
        cache = cache if cache is not None else DistanceCache(g)
        forward = self.similar_set_spanner(g, R, cache, 'out')
        backward = self.similar_set_spanner(g.reversed(), R, cache.reversed(), 'in')

        spanner = SpannerAccumulator(g)
        spanner.add(forward.edges, SAMPLE_TREE)
        spanner.add_reversed(backward.edges, REVERSED_SAMPLE_TREE)
        for v in sorted(set(forward.sets) | set(backward.sets)):
            members = forward.sets.get(v, set()) | backward.sets.get(v, set()) | {v}
            if len(members) < 2:
                continue
            spanner.add(pruned_dijkstra(g, v, Direction.FROM, None, members).tree_edges(), VERTEX_TREE)
        return spanner

    def run(self, g: Graph) -> Set[EdgeKey]:
        """Union of spanner_approx over the geometric schedule up to 2nW, lifted back to g."""
        self.per_scale = {}
        skeleton = zero_weight_skeleton(g)
        w_min = g.min_positive_weight
        if w_min is None:
            return skeleton

        with self.timed('regularize'):
            rg = regularize(g)
        cache = DistanceCache(rg.h)
        union: Set[EdgeKey] = set()
        for R in geometric_schedule(w_min, 2 * g.n * g.max_weight, self.epsilon):
            with self.timed('scale'):
                scale_edges = self.spanner_approx(rg.h, R, cache).edges
            self.per_scale[R] = len(scale_edges)
            union |= scale_edges
            if self.debug:
                self.logger.debug(f"R={R}: {len(scale_edges)} edges")

        edges = lift_subgraph(rg, union) | skeleton
        self.logger.info(f"spanner: {len(edges)} of {g.m} edges over {len(self.per_scale)} scales")
        self.finish()
        return edges


def similar_set_spanner(g: Graph, R: int, params: Optional[SimilarSetParams] = None,
                        global_prob: Optional[float] = None) -> SpannerSetOutcome:
    return SpannerApprox8(params, global_prob).similar_set_spanner(g, R)


def spanner_approx(g: Graph, R: int, params: Optional[SimilarSetParams] = None,
                   global_prob: Optional[float] = None) -> Set[EdgeKey]:
    """Edges H with d_H(u<->v) <= 8R w.h.p. for every pair with d_G(u<->v) <= R."""
    return SpannerApprox8(params, global_prob).spanner_approx(g, R).edges


def full_spanner(
    g: Graph,
    epsilon: float = 0.25,
    params: Optional[SimilarSetParams] = None,
    global_prob: Optional[float] = None,
    workers: int = 1,
) -> Tuple[Set[EdgeKey], Dict[int, int]]:
    """8(1 + epsilon) roundtrip spanner of g w.h.p.

    Returns:
        (edges of g, per-scale edge counts in the regularized graph)
    """
    pipeline = SpannerApprox8(params, global_prob, epsilon, workers)
    edges = pipeline.run(g)
    return edges, dict(pipeline.per_scale)
