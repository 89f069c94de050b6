"""Name -> pipeline dispatch shared by the single-run commands and bench."""

import time
from dataclasses import dataclass
from typing import Dict, Optional, Set, Tuple

from ..algorithms.base import GirthResult
from ..algorithms.cover import Cover
from ..algorithms.covers_det import RoundtripCoverBuilder, det_girth, det_spanner
from ..algorithms.covers_klogk import RoundtripCover2Builder, klogk_girth, klogk_spanner
from ..algorithms.filtering import SimilarSetParams
from ..algorithms.girth3 import GirthApprox3
from ..algorithms.oracle import exact_girth
from ..algorithms.spanner8 import SpannerApprox8
from ..errors import ArgumentError
from ..graph.core import EdgeKey, Graph

GIRTH_ALGORITHMS = ('exact', 'approx3', 'det', 'klogk')
COVER_ALGORITHMS = ('det', 'klogk')
SPANNER_ALGORITHMS = ('const8', 'det', 'klogk')


@dataclass
class RunOptions:
    """Knobs of every pipeline; each algorithm reads the ones it uses."""

    k: int = 2
    mode: str = 'binary'
    epsilon: float = 0.25
    seed: int = 0
    retries: int = 3
    workers: int = 1
    rounds: Optional[int] = None
    sample_prob: Optional[float] = None
    witness_size: Optional[int] = None
    global_prob: Optional[float] = None
    debug: bool = False

    @property
    def similar_set_params(self) -> SimilarSetParams:
        return SimilarSetParams(self.rounds, self.sample_prob, self.witness_size, self.seed)


def run_girth(g: Graph, algorithm: str, options: RunOptions) -> GirthResult:
    if algorithm == 'exact':
        start = time.perf_counter()
        estimate, witness = exact_girth(g)
        return GirthResult(estimate=estimate, witness=witness,
                           timings={'exact_time': time.perf_counter() - start})
    if algorithm == 'approx3':
        pipeline = GirthApprox3(options.similar_set_params, options.mode, options.epsilon,
                                max(1, options.retries), options.workers, options.debug)
        return pipeline.run(g)
    if algorithm == 'det':
        return det_girth(g, options.k, debug=options.debug)
    if algorithm == 'klogk':
        return klogk_girth(g, options.k, options.seed, options.retries, debug=options.debug)
    raise ArgumentError(f"unknown girth algorithm '{algorithm}' (choose from {', '.join(GIRTH_ALGORITHMS)})")


def run_cover(g: Graph, algorithm: str, R: int, options: RunOptions) -> Cover:
    if algorithm == 'det':
        return RoundtripCoverBuilder(options.k, R, debug=options.debug).run(g)
    if algorithm == 'klogk':
        return RoundtripCover2Builder(options.k, R, options.seed, options.retries, debug=options.debug).run(g)
    raise ArgumentError(f"unknown cover algorithm '{algorithm}' (choose from {', '.join(COVER_ALGORITHMS)})")


def run_spanner(g: Graph, algorithm: str, options: RunOptions) -> Tuple[Set[EdgeKey], Dict[int, int]]:
    """(edges of g, per-scale edge counts)."""
    if algorithm == 'const8':
        pipeline = SpannerApprox8(options.similar_set_params, options.global_prob, options.epsilon,
                                  options.workers, options.debug)
        edges = pipeline.run(g)
        return edges, dict(pipeline.per_scale)
    if algorithm == 'det':
        return det_spanner(g, options.k, debug=options.debug)
    if algorithm == 'klogk':
        return klogk_spanner(g, options.k, options.seed, options.retries, debug=options.debug)
    raise ArgumentError(f"unknown spanner algorithm '{algorithm}' (choose from {', '.join(SPANNER_ALGORITHMS)})")
