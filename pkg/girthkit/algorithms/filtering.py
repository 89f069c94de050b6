"""Sampled-witness filtering of the vertices that could share a short cycle with v.

For each vertex v the filter walks the sample rounds S_0..S_M. Round i keeps
the samples s of S_i with d(v, s) <= R/2 that are within 3R/2 of every
witness collected so far; a bounded random subset of the survivors joins the
witnesses. Finally a search of depth R/2 from v keeps only vertices within
3R/2 of every witness, and the reached vertices form v's set.

All distance tests read the precomputed sample searches; no fresh search is
run per test.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..errors import ArgumentError
from ..graph.core import Graph
from ..graph.search import Direction, DistanceCache, DistanceMap, pruned_dijkstra
from ..utils.numeric import log_factor
from ..utils.rng import RngStreams

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimilarSetParams:
    """Sampling constants; None means "derive from n".

    Defaults: rounds M = 50 ceil(log2 n), sample_prob p = n^(-1/2),
    witness_size = 100 ceil(log2 n).
    """

    rounds: Optional[int] = None
    sample_prob: Optional[float] = None
    witness_size: Optional[int] = None
    seed: int = 0

    def resolved(self, n: int) -> 'SimilarSetParams':
        """Concrete constants for a graph with n vertices.

        Raises:
            ArgumentError: M < 1, p outside (0, 1], or witness_size < 1
        """
        log_n = log_factor(n)
        rounds = self.rounds if self.rounds is not None else 50 * log_n
        prob = self.sample_prob if self.sample_prob is not None else (1.0 if n <= 1 else n ** -0.5)
        witness_size = self.witness_size if self.witness_size is not None else 100 * log_n
        if rounds < 1:
            raise ArgumentError(f"round count must be >= 1, got {rounds}")
        if not 0 < prob <= 1:
            raise ArgumentError(f"sample probability must lie in (0, 1], got {prob}")
        if witness_size < 1:
            raise ArgumentError(f"witness size must be >= 1, got {witness_size}")
        return SimilarSetParams(rounds, min(1.0, prob), witness_size, self.seed)

    def with_seed(self, seed: int) -> 'SimilarSetParams':
        return SimilarSetParams(self.rounds, self.sample_prob, self.witness_size, seed)


@dataclass
class FilteredVertex:
    """Output of the filter for one vertex."""

    vertex: int
    members: Set[int]
    tree: DistanceMap
    witnesses: Tuple[int, ...] = field(default_factory=tuple)


def sample_rounds(
    streams: RngStreams,
    n: int,
    rounds: int,
    prob: float,
    universe: Optional[np.ndarray] = None,
) -> List[np.ndarray]:
    """S_0..S_rounds, each vertex of the universe included with probability prob."""
    sets = []
    for i in range(rounds + 1):
        chosen = streams.generator('round', i).random(n) < prob
        if universe is not None:
            chosen &= universe
        sets.append(np.flatnonzero(chosen))
    return sets


class WitnessFilter:
    """Runs the per-vertex filtering over precomputed sample searches.

    Args:
        g: graph the sets are built in
        R: target radius
        rounds: S_0..S_M as vertex-id arrays
        cache: search cache over g; searches from/to every sampled vertex must
            be exact up to 3R/2
        streams: per-vertex random streams are derived from this node
        witness_size: cap on each round's witness draw
        universe: optional boolean mask restricting kept vertices
    """

    def __init__(
        self,
        g: Graph,
        R: int,
        rounds: Sequence[np.ndarray],
        cache: DistanceCache,
        streams: RngStreams,
        witness_size: int,
        universe: Optional[np.ndarray] = None,
    ):
        self.g = g
        self.R = R
        self.streams = streams
        self.witness_size = witness_size
        self.universe = universe
        self.sampled = np.array(sorted(set().union(*(set(r.tolist()) for r in rounds))), dtype=np.int64)
        row_of = {int(s): i for i, s in enumerate(self.sampled)}
        self.round_rows = [np.array([row_of[int(s)] for s in r], dtype=np.int64) for r in rounds]
        bound = (3 * R + 1) // 2
        if len(self.sampled):
            self.from_sample = np.array([cache.get(int(s), Direction.FROM, bound).dist for s in self.sampled],
                                        dtype=np.int64)
            self.to_sample = np.array([cache.get(int(s), Direction.TO, bound).dist for s in self.sampled],
                                      dtype=np.int64)
        else:
            self.from_sample = np.zeros((0, g.n), dtype=np.int64)
            self.to_sample = np.zeros((0, g.n), dtype=np.int64)

    def _draw(self, rng: np.random.Generator, candidates: np.ndarray) -> np.ndarray:
        if len(candidates) > self.witness_size:
            return rng.choice(candidates, size=self.witness_size, replace=False)
        return candidates

    def filter_vertex(self, v: int) -> FilteredVertex:
        R = self.R
        rng = self.streams.generator('vertex', v)
        rows = len(self.sampled)
        worst = np.zeros(rows, dtype=np.int64)
        witness_rows: List[int] = []
        near = 2 * self.to_sample[:, v] <= R if rows else np.zeros(0, dtype=bool)

        first = self.round_rows[0]
        survivors = first[near[first]]
        for round_rows in self.round_rows[1:]:
            drawn = self._draw(rng, survivors)
            if len(drawn):
                witness_rows.extend(int(r) for r in drawn)
                worst = np.maximum(worst, self.from_sample[:, self.sampled[drawn]].max(axis=1))
            survivors = round_rows[near[round_rows] & (2 * worst[round_rows] <= 3 * R)]
        drawn = self._draw(rng, survivors)
        witness_rows.extend(int(r) for r in drawn)

        unique_rows = sorted(set(witness_rows))
        if unique_rows:
            keep = 2 * self.to_sample[unique_rows].max(axis=0) <= 3 * R
        else:
            keep = np.ones(self.g.n, dtype=bool)
        if self.universe is not None:
            keep &= self.universe
        keep[v] = True
        tree = pruned_dijkstra(self.g, v, Direction.FROM, R // 2, keep)
        return FilteredVertex(
            vertex=v,
            members=tree.reached_set(),
            tree=tree,
            witnesses=tuple(int(self.sampled[r]) for r in unique_rows),
        )

    def filter_all(self, vertices: Sequence[int], workers: int = 1) -> Dict[int, FilteredVertex]:
        """Filter every listed vertex; results do not depend on workers."""
        if workers > 1 and len(vertices) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(self.filter_vertex, vertices))
        else:
            results = [self.filter_vertex(v) for v in vertices]
        return {r.vertex: r for r in results}
