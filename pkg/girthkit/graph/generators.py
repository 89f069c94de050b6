"""Seeded instance generators for tests and benchmarks."""

import logging
import math
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from ..errors import GenerationError
from ..utils.rng import RngStreams
from .core import Graph

logger = logging.getLogger(__name__)

# Certification of planted instances runs the exact oracle up to this size.
CERTIFY_LIMIT = 512

Arcs = List[Tuple[int, int, int]]


def _weights(rng: np.random.Generator, count: int, wmin: int, wmax: int) -> np.ndarray:
    if wmin < 0 or wmax < wmin:
        raise GenerationError(f"invalid weight range [{wmin}, {wmax}]")
    return rng.integers(wmin, wmax + 1, size=count)


def erdos_renyi(rng: np.random.Generator, n: int, p: float = 0.1, wmin: int = 1, wmax: int = 10) -> Arcs:
    """Every ordered pair u != v independently with probability p."""
    if not 0 <= p <= 1:
        raise GenerationError(f"edge probability must lie in [0, 1], got {p}")
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    sources, targets = np.nonzero(mask)
    weights = _weights(rng, len(sources), wmin, wmax)
    return [(int(u), int(v), int(w)) for u, v, w in zip(sources, targets, weights)]


def planted_girth(
    rng: np.random.Generator,
    n: int,
    L: int = 7,
    p: float = 0.05,
    spread: int = 20,
) -> Arcs:
    """A cycle of length L over random vertices plus background arcs of weight >= L.

    Every other cycle uses at least one background arc and one more arc of
    weight >= 1, so the planted cycle is the unique shortest one.
    """
    if L < 2 or n < 2:
        raise GenerationError(f"cannot plant a cycle of length {L} in {n} vertices: "
                              "a cycle needs two arcs of weight >= 1")
    size = int(rng.integers(2, min(n, L) + 1))
    members = rng.permutation(n)[:size]
    cuts = np.sort(rng.choice(np.arange(1, L), size=size - 1, replace=False)) if size > 1 else np.array([], int)
    lengths = np.diff(np.concatenate(([0], cuts, [L])))
    planted = {}
    for i in range(size):
        planted[(int(members[i]), int(members[(i + 1) % size]))] = int(lengths[i])

    arcs = [(u, v, w) for (u, v), w in planted.items()]
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    sources, targets = np.nonzero(mask)
    weights = _weights(rng, len(sources), L, L + max(spread, 0))
    arcs.extend(
        (int(u), int(v), int(w))
        for u, v, w in zip(sources, targets, weights)
        if (int(u), int(v)) not in planted
    )
    return arcs


def ring_of_cliques(
    rng: np.random.Generator,
    n: int,
    cliques: int = 3,
    wmin: int = 1,
    wmax: int = 10,
) -> Arcs:
    """Complete digraphs joined in a directed ring (last vertex -> next first vertex)."""
    if cliques < 1 or cliques > n:
        raise GenerationError(f"cannot split {n} vertices into {cliques} cliques")
    base, extra = divmod(n, cliques)
    groups, start = [], 0
    for i in range(cliques):
        size = base + (1 if i < extra else 0)
        groups.append(list(range(start, start + size)))
        start += size
    pairs = [(u, v) for group in groups for u in group for v in group if u != v]
    if cliques > 1:
        pairs.extend((groups[i][-1], groups[(i + 1) % cliques][0]) for i in range(cliques))
    weights = _weights(rng, len(pairs), wmin, wmax)
    return [(u, v, int(w)) for (u, v), w in zip(pairs, weights)]


def grid_chords(
    rng: np.random.Generator,
    n: int,
    chords: int = 10,
    wmin: int = 1,
    wmax: int = 10,
) -> Arcs:
    """Row-major grid with right/down arcs plus random backward chords."""
    if n < 1:
        raise GenerationError("grid needs at least one vertex")
    cols = max(1, math.ceil(math.sqrt(n)))
    pairs = []
    for v in range(n):
        if (v + 1) % cols and v + 1 < n:
            pairs.append((v, v + 1))
        if v + cols < n:
            pairs.append((v, v + cols))
    for _ in range(chords if n > 1 else 0):
        a, b = rng.choice(n, size=2, replace=False)
        pairs.append((int(max(a, b)), int(min(a, b))))
    weights = _weights(rng, len(pairs), wmin, wmax)
    return [(u, v, int(w)) for (u, v), w in zip(pairs, weights)]


def regular(rng: np.random.Generator, n: int, d: int = 3, wmin: int = 1, wmax: int = 10) -> Arcs:
    """Each vertex gets d distinct random out-neighbours (m = d n)."""
    if not 0 <= d < n:
        raise GenerationError(f"out-degree {d} impossible with {n} vertices")
    pairs = []
    for u in range(n):
        others = rng.choice(n - 1, size=d, replace=False)
        pairs.extend((u, int(v) + (1 if v >= u else 0)) for v in others)
    weights = _weights(rng, len(pairs), wmin, wmax)
    return [(u, v, int(w)) for (u, v), w in zip(pairs, weights)]


GENERATORS: Dict[str, Callable[..., Arcs]] = {
    'er': erdos_renyi,
    'planted-girth': planted_girth,
    'ring-of-cliques': ring_of_cliques,
    'grid-chords': grid_chords,
    'regular': regular,
}


def generate(kind: str, n: int, seed: int = 0, **params: Any) -> Tuple[Graph, List[str]]:
    """Build a seeded instance.

    Args:
        kind: one of GENERATORS
        n: vertex count
        seed: stream seed; equal inputs give equal graphs
        **params: generator specific parameters

    Returns:
        (graph, comment lines carrying the instance descriptor)

    Raises:
        GenerationError: unknown kind, bad parameters, or failed certification
    """
    if kind not in GENERATORS:
        raise GenerationError(f"unknown generator '{kind}' (choose from {', '.join(GENERATORS)})")
    if n < 0:
        raise GenerationError(f"vertex count must be non-negative, got {n}")
    rng = RngStreams(seed).generator('generate', kind, n)
    try:
        arcs = GENERATORS[kind](rng, n, **params)
    except TypeError as e:
        raise GenerationError(f"bad parameters for '{kind}': {e}") from e
    graph = Graph(n, arcs)

    if kind == 'planted-girth' and n <= CERTIFY_LIMIT:
        from ..algorithms.oracle import exact_girth

        expected = params.get('L', 7)
        found, _ = exact_girth(graph)
        if found != expected:
            raise GenerationError(f"planted girth {expected} not certified (exact girth {found})")
        logger.debug(f"certified planted girth {expected} on n={n}")

    extras = ' '.join(f"{k}={v}" for k, v in sorted(params.items()))
    descriptor = f"generator={kind} n={n} m={graph.m} seed={seed}" + (f" {extras}" if extras else "")
    return graph, [descriptor]
