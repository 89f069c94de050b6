"""Corpus-sized checks of every pipeline against the exact oracle.

Marked slow; the scaling smoke test at the bottom is opt-in.
"""

import json
import math
import time
from typing import Iterator, List

import numpy as np
import pytest

from ..algorithms.covers_det import det_girth, det_spanner, roundtrip_cover
from ..algorithms.covers_klogk import KlogkParams, RoundtripCover2Builder, cover2_stretch, klogk_girth
from ..algorithms.filtering import SimilarSetParams
from ..algorithms.girth3 import girth_estimate
from ..algorithms.oracle import exact_girth, verify_cover, verify_spanner
from ..algorithms.regularize import branching_factor, regularize
from ..algorithms.spanner8 import full_spanner, spanner_approx
from ..errors import RetryBudgetExhausted
from ..graph import INF, Graph
from ..graph.generators import generate
from ..reporting import cover_report
from ..utils.numeric import loglog
from .conftest import min_plus_girth, random_digraph, roundtrip_closure

SAMPLING = SimilarSetParams(rounds=10, sample_prob=0.2, witness_size=4)
KLOGK_SAMPLING = KlogkParams(sample_sets=4, sample_size=4, witness_size=2)


def corpus(count: int, max_n: int, seed: int = 0) -> Iterator[Graph]:
    """Seeded mix of every generator family with 8 <= n <= max_n."""
    rng = np.random.default_rng(seed)
    kinds = ('er', 'planted-girth', 'ring-of-cliques', 'grid-chords')
    for i in range(count):
        n = int(rng.integers(8, max_n + 1))
        kind = kinds[i % len(kinds)]
        if kind == 'er':
            params = {'p': min(1.0, 3 / n), 'wmax': 100}
        elif kind == 'planted-girth':
            params = {'L': int(rng.integers(3, 60))}
        elif kind == 'ring-of-cliques':
            params = {'cliques': max(1, n // 6), 'wmax': 100}
        else:
            params = {'chords': n // 3, 'wmax': 100}
        g, _ = generate(kind, n, seed=seed * 1000 + i, **params)
        yield g


def planted(count: int, max_n: int) -> List[Graph]:
    rng = np.random.default_rng(99)
    graphs = []
    for i in range(count):
        n = int(rng.integers(8, max_n + 1))
        g, _ = generate('planted-girth', n, seed=i, L=int(rng.integers(2, 100)), spread=1)
        graphs.append(g)
    return graphs


@pytest.mark.slow
def test_every_estimate_is_a_real_cycle():
    """No pipeline ever reports less than the girth, and every witness replays."""
    for g in corpus(200, 120):
        girth, _ = exact_girth(g)
        results = [
            girth_estimate(g, params=SAMPLING),
            girth_estimate(g, mode='geometric', params=SAMPLING),
            det_girth(g, 2),
            klogk_girth(g, 2, params=KLOGK_SAMPLING),
        ]
        for result in results:
            assert result.estimate >= girth
            if girth < INF:
                assert result.witness.is_valid(g)
                assert result.witness.length <= result.estimate


@pytest.mark.slow
def test_binary_estimate_within_three_times_girth():
    within = 0
    for g in planted(100, 120):
        girth, _ = exact_girth(g)
        estimate = girth_estimate(g, params=SAMPLING).estimate
        assert estimate >= girth
        within += estimate <= 3 * girth
    assert within >= 95


@pytest.mark.slow
def test_deterministic_covers_on_corpus():
    for g in corpus(50, 80, seed=1):
        for k in (2, 3):
            for R in (1, 2, 4, 8):
                cover = roundtrip_cover(g, k, R)
                assert verify_cover(g, cover, cover.stretch_factor, R).ok
                assert cover.total_members <= 10 * g.n ** (k / (k - 1))
            first, second = (json.dumps(cover_report(roundtrip_cover(g, k, 4), {})) for _ in range(2))
            assert first == second

            girth, _ = exact_girth(g)
            estimate = det_girth(g, k).estimate
            if girth < INF:
                assert girth <= estimate <= (20 * k * loglog(g.n) + 2) * girth
            else:
                assert estimate >= INF


@pytest.mark.slow
def test_deterministic_spanners_on_corpus():
    k = 2
    for g in corpus(30, 60, seed=2):
        edges, _ = det_spanner(g, k)
        assert verify_spanner(g, edges, 2 * (20 * k * loglog(g.n) + 2)).ok


@pytest.mark.slow
def test_randomized_covers_on_corpus():
    """Ball growing runs with few samples; every ring is checked for nesting and absorption."""
    k, passed, runs, checked = 2, 0, 0, 0
    for g in corpus(50, 70, seed=3):
        for seed in (0, 1):
            runs += 1
            builder = RoundtripCover2Builder(k, 4, seed=seed, params=KLOGK_SAMPLING)
            try:
                cover = builder.run(g)
            except RetryBudgetExhausted:
                continue
            assert cover.stretch_factor == cover2_stretch(k)
            checked += builder.stats.absorb_checks
            passed += verify_cover(g, cover, cover.stretch_factor, 4).ok
    assert checked > 0
    assert passed >= 0.95 * runs


@pytest.mark.slow
def test_spanners_on_corpus():
    single, runs = 0, 0
    for seed, g in enumerate(corpus(40, 60, seed=4)):
        girth, _ = exact_girth(g)
        if girth >= INF or girth == 0:
            continue
        runs += 1
        R = 2 * girth
        edges = spanner_approx(g, R, SAMPLING.with_seed(seed))
        single += verify_spanner(g, edges, 8, radius=R).ok
    assert single >= 0.95 * runs

    full = 0
    graphs = list(corpus(20, 40, seed=5))
    for seed, g in enumerate(graphs):
        edges, per_scale = full_spanner(g, 0.25, SAMPLING.with_seed(seed))
        full += verify_spanner(g, edges, 8 * 1.25).ok
        bound = 4 * 4 * g.n ** 1.5 * max(1.0, math.log2(max(g.n, 2)))
        assert all(count <= bound for count in per_scale.values())
    assert full >= 0.95 * len(graphs)


@pytest.mark.slow
def test_regularize_on_corpus():
    for seed in range(100):
        g = random_digraph(int(8 + seed % 33), 0.05 + 0.4 * (seed % 7) / 7, seed, wmin=0, wmax=30)
        rg = regularize(g)
        delta = branching_factor(g)
        assert rg.h.max_out_degree() <= delta
        assert rg.h.max_in_degree() <= delta
        assert (roundtrip_closure(g) == roundtrip_closure(rg.h)[:g.n, :g.n]).all()
        assert exact_girth(g)[0] == exact_girth(rg.h)[0]


@pytest.mark.slow
def test_exact_girth_matches_min_plus_on_corpus():
    for seed in range(100):
        g = random_digraph(int(4 + seed % 21), 0.2, seed, wmin=0, wmax=50)
        assert exact_girth(g)[0] == min_plus_girth(g)


def _fit_exponent(sizes: List[int], seconds: List[float]) -> float:
    slope, _ = np.polyfit(np.log(sizes), np.log(seconds), 1)
    return float(slope)


@pytest.mark.scaling
def test_scaling_smoke():
    """approx3 must stay clearly below the exact baseline's growth on m ~ n graphs."""
    sizes = [1000, 4000, 16000]
    approx, exact = [], []
    for n in sizes:
        g, _ = generate('regular', n, seed=n, d=3)
        start = time.perf_counter()
        girth_estimate(g)
        approx.append(time.perf_counter() - start)
        start = time.perf_counter()
        exact_girth(g)
        exact.append(time.perf_counter() - start)
    assert _fit_exponent(sizes, approx) <= 1.8 + 0.3
    assert _fit_exponent(sizes, exact) >= 1.9 - 0.3
