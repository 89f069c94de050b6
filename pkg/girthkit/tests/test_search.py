"""Tests for bounded and pruned Dijkstra, cycle extraction and the search cache."""

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ..errors import ArgumentError
from ..graph import (
    INF,
    Direction,
    DistanceCache,
    Graph,
    cycle_from_search,
    dijkstra,
    pruned_dijkstra,
    roundtrip_distance,
    shortest_cycle_through,
)
from .conftest import bellman_ford, min_plus_closure
from .strategies import GRAPH_SETTINGS, digraphs


@GRAPH_SETTINGS
@given(digraphs(), st.data())
def test_dijkstra_matches_bellman_ford(g, data):
    """Unbounded FROM distances equal Bellman-Ford; TO distances equal the reversed graph's."""
    source = data.draw(st.integers(0, g.n - 1))
    forward = dijkstra(g, source)
    assert forward.dist == bellman_ford(g, source)
    backward = dijkstra(g, source, Direction.TO)
    assert backward.dist == bellman_ford(g.reversed(), source)


@GRAPH_SETTINGS
@given(digraphs(), st.data())
def test_dijkstra_matches_networkx(g, data):
    source = data.draw(st.integers(0, g.n - 1))
    expected = nx.single_source_dijkstra_path_length(g.to_networkx(), source)
    found = dijkstra(g, source)
    assert {v: d for v, d in enumerate(found.dist) if d < INF} == expected


@GRAPH_SETTINGS
@given(digraphs(), st.data())
def test_radius_bound_truncates(g, data):
    """A bounded search reports exactly the vertices within the bound, with exact distances."""
    source = data.draw(st.integers(0, g.n - 1))
    bound = data.draw(st.integers(0, 20))
    full = bellman_ford(g, source)
    bounded = dijkstra(g, source, radius_bound=bound)
    for v in g.vertices():
        if full[v] <= bound:
            assert bounded.dist[v] == full[v]
        else:
            assert bounded.dist[v] == INF


@GRAPH_SETTINGS
@given(digraphs(), st.data())
def test_pruned_search_stays_inside(g, data):
    """Pruned distances equal distances in the induced subgraph of the kept vertices."""
    source = data.draw(st.integers(0, g.n - 1))
    keep = set(data.draw(st.sets(st.integers(0, g.n - 1)))) | {source}
    pruned = pruned_dijkstra(g, source, Direction.FROM, None, keep)
    sub, vertex_map = g.induced_subgraph(keep)
    reference = bellman_ford(sub, vertex_map.lower(source))
    for v in g.vertices():
        if v in keep:
            assert pruned.dist[v] == reference[vertex_map.lower(v)]
        else:
            assert pruned.dist[v] == INF


@GRAPH_SETTINGS
@given(digraphs(), st.data())
def test_tree_paths_replay(g, data):
    """Every reached vertex's tree path replays to its distance, both directions."""
    source = data.draw(st.integers(0, g.n - 1))
    for direction in (Direction.FROM, Direction.TO):
        search = dijkstra(g, source, direction)
        for v in search.reached():
            assert search.replay(g, v) == search.dist[v]
        assert search.tree_edges() <= g.edge_keys()


@GRAPH_SETTINGS
@given(digraphs(), st.data())
def test_roundtrip_symmetry(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    d = min_plus_closure(g)
    expected = INF if d[u, v] >= INF or d[v, u] >= INF else int(d[u, v] + d[v, u])
    assert roundtrip_distance(g, u, v) == roundtrip_distance(g, v, u) == expected


def test_path_orientation(two_cycles):
    """FROM paths run source -> v, TO paths run v -> source."""
    assert dijkstra(two_cycles, 0).path(4) == [0, 2, 3, 4]
    assert dijkstra(two_cycles, 0, Direction.TO).path(2) == [2, 3, 4, 0]
    assert dijkstra(two_cycles, 0, Direction.TO).parent_edge(4) == (4, 0)
    with pytest.raises(ArgumentError):
        dijkstra(Graph(2), 0).path(1)


def test_search_errors(triangle):
    with pytest.raises(ArgumentError):
        dijkstra(triangle, 3)
    with pytest.raises(ArgumentError):
        dijkstra(triangle, 0, radius_bound=-1)
    with pytest.raises(ArgumentError):
        pruned_dijkstra(triangle, 0, Direction.FROM, None, {1, 2})


def test_keep_accepts_masks_and_callables(two_cycles):
    mask = np.array([True, False, True, True, True])
    by_mask = pruned_dijkstra(two_cycles, 0, Direction.FROM, None, mask)
    by_callable = pruned_dijkstra(two_cycles, 0, Direction.FROM, None, lambda v: v != 1)
    assert by_mask.dist == by_callable.dist
    assert by_mask.dist[1] == INF


def test_shortest_cycle_through(two_cycles):
    cycle = shortest_cycle_through(two_cycles, 0)
    assert cycle.length == 4
    assert cycle.is_valid(two_cycles)
    assert shortest_cycle_through(two_cycles, 0, keep={0, 1}).length == 7
    assert shortest_cycle_through(two_cycles, 0, radius_bound=3) is None
    assert shortest_cycle_through(two_cycles, 1).length == 7


def test_cycle_from_search_respects_bound(triangle):
    search = dijkstra(triangle, 0)
    assert cycle_from_search(triangle, search).length == 6
    assert cycle_from_search(triangle, search, radius_bound=5) is None


def test_distance_cache_reuses_larger_bounds(two_cycles):
    """A search with a larger bound serves smaller requests; the reversed view shares storage."""
    cache = DistanceCache(two_cycles)
    cache.get(0, Direction.FROM, 10)
    small = cache.get(0, Direction.FROM, 2)
    assert cache.hits == 1 and cache.misses == 1
    assert small.dist[3] == 2

    cache.get(0, Direction.FROM, 20)
    assert cache.misses == 2

    view = cache.reversed()
    flipped = view.get(0, Direction.TO, 5)
    assert view.hits == 1
    assert flipped.direction is Direction.TO
    assert flipped.dist == dijkstra(two_cycles.reversed(), 0, Direction.TO).dist
    assert flipped.dist[1] == 3


def test_distance_cache_capacity(triangle):
    cache = DistanceCache(triangle, capacity=1)
    cache.get(0, Direction.FROM)
    cache.get(1, Direction.FROM)
    cache.get(0, Direction.FROM)
    assert cache.misses == 3
