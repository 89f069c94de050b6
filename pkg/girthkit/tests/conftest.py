"""Shared test fixtures and utilities."""

import os
from pathlib import Path
from typing import Callable, List, Sequence, Tuple

import numpy as np
import pytest

from ..graph.core import INF, Graph
from ..graph.io import write_graph

Arc = Tuple[int, int, int]


def pytest_collection_modifyitems(config, items):
    """Skip the scaling smoke test unless GIRTHKIT_RUN_SCALING=1."""
    if os.getenv('GIRTHKIT_RUN_SCALING') == '1':
        return
    skip = pytest.mark.skip(reason="set GIRTHKIT_RUN_SCALING=1 to run")
    for item in items:
        if 'scaling' in item.keywords:
            item.add_marker(skip)


# Oracles

def bellman_ford(g: Graph, source: int) -> List[int]:
    """Single-source distances by plain edge relaxation."""
    dist = [INF] * g.n
    dist[source] = 0
    for _ in range(max(g.n - 1, 1)):
        changed = False
        for u, v, w in g.edges:
            if dist[u] < INF and dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    return dist


def min_plus_closure(g: Graph) -> np.ndarray:
    """All-pairs distances by Floyd-Warshall over the min-plus semiring."""
    d = np.full((g.n, g.n), INF, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v, w in g.edges:
        d[u, v] = min(d[u, v], w)
    for k in range(g.n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
        d[d > INF] = INF
    return d


def min_plus_girth(g: Graph) -> int:
    """min over edges (v, u) of d(u, v) + w(v, u), and over self-loops."""
    d = min_plus_closure(g)
    best = min(g.self_loops.values(), default=INF)
    for v, u, w in g.edges:
        if d[u, v] < INF:
            best = min(best, int(d[u, v]) + w)
    return best


def roundtrip_closure(g: Graph) -> np.ndarray:
    d = min_plus_closure(g)
    return np.where((d >= INF) | (d.T >= INF), INF, d + d.T)


# Graph factories

def random_digraph(n: int, p: float, seed: int, wmin: int = 1, wmax: int = 10) -> Graph:
    """Seeded G(n, p) digraph with integer weights in [wmin, wmax]."""
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    sources, targets = np.nonzero(mask)
    weights = rng.integers(wmin, wmax + 1, size=len(sources))
    return Graph(n, [(int(u), int(v), int(w)) for u, v, w in zip(sources, targets, weights)])


def directed_cycle(lengths: Sequence[int]) -> Graph:
    """Cycle 0 -> 1 -> ... -> 0 with the given edge weights."""
    n = len(lengths)
    return Graph(n, [(i, (i + 1) % n, w) for i, w in enumerate(lengths)])


@pytest.fixture
def triangle() -> Graph:
    """0 -> 1 -> 2 -> 0 with weights 1, 2, 3 (girth 6)."""
    return directed_cycle([1, 2, 3])


@pytest.fixture
def dag() -> Graph:
    return Graph(5, [(0, 1, 1), (1, 2, 2), (0, 2, 5), (2, 3, 1), (3, 4, 1), (0, 4, 9)])


@pytest.fixture
def two_cycles() -> Graph:
    """A 2-cycle of length 7 and a 4-cycle of length 4 sharing vertex 0."""
    return Graph(5, [
        (0, 1, 3), (1, 0, 4),
        (0, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1),
    ])


@pytest.fixture
def zero_cycle() -> Graph:
    """Positive cycle of length 10 plus a zero-weight cycle 2 -> 3 -> 2."""
    return Graph(4, [(0, 1, 5), (1, 0, 5), (1, 2, 1), (2, 3, 0), (3, 2, 0)])


@pytest.fixture
def self_loop() -> Graph:
    """Self-loop of weight 2 at vertex 1 next to a 2-cycle of length 9."""
    return Graph(3, [(0, 1, 4), (1, 0, 5), (1, 1, 2), (1, 2, 1)])


@pytest.fixture
def digraph_factory() -> Callable[..., Graph]:
    return random_digraph


@pytest.fixture
def graph_file(tmp_path) -> Callable[..., Path]:
    """Write a graph (or raw text) into tmp_path and return its path."""
    def _write(content, name: str = 'graph.gr', comments: Sequence[str] = ()) -> Path:
        path = tmp_path / name
        if isinstance(content, Graph):
            write_graph(content, path, comments)
        else:
            path.write_text(content)
        return path
    return _write
