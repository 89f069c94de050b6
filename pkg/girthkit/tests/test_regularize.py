"""Tests for degree reduction and lifting back to the original graph."""

import pytest
from hypothesis import given

from ..algorithms.regularize import branching_factor, lift_cycle, lift_subgraph, regularize
from ..errors import ArgumentError, InvariantViolation
from ..graph import CycleWitness, Graph, shortest_cycle_through
from .conftest import random_digraph, roundtrip_closure
from .strategies import GRAPH_SETTINGS, digraphs


def star(n: int) -> Graph:
    """Vertex 0 with edges to and from every other vertex."""
    arcs = [(0, v, v) for v in range(1, n)] + [(v, 0, 1) for v in range(1, n)]
    return Graph(n, arcs)


@GRAPH_SETTINGS
@given(digraphs(max_n=12))
def test_degrees_bounded_and_roundtrips_preserved(g):
    """Every h vertex has in/out-degree <= delta; original-pair roundtrips are unchanged."""
    rg = regularize(g)
    assert rg.delta == branching_factor(g)
    assert rg.h.max_out_degree() <= rg.delta
    assert rg.h.max_in_degree() <= rg.delta
    before = roundtrip_closure(g)
    after = roundtrip_closure(rg.h)[:g.n, :g.n]
    assert (before == after).all()


@pytest.mark.parametrize('seed', range(10))
def test_random_instances(seed):
    g = random_digraph(30, 0.3, seed)
    rg = regularize(g)
    assert rg.h.n <= g.n + 4 * g.m
    assert rg.h.max_out_degree() <= rg.delta
    assert rg.h.max_in_degree() <= rg.delta
    assert (roundtrip_closure(g) == roundtrip_closure(rg.h)[:g.n, :g.n]).all()


def test_star_bookkeeping():
    """Originals keep their ids; tree vertices are owned by the hub and carry zero-weight edges."""
    g = star(10)
    rg = regularize(g)
    assert rg.delta == 2
    assert rg.h.n > g.n
    assert rg.owner[:g.n] == tuple(range(g.n))
    tree_vertices = range(g.n, rg.h.n)
    assert all(rg.owner[x] == 0 for x in tree_vertices)
    assert set(rg.tree_side[x] for x in tree_vertices) == {'in', 'out'}
    assert rg.tree_edge_count() == rg.h.n - g.n
    assert sorted(rg.edge_origin.values()) == sorted(g.edge_keys())
    for (a, b), (u, v) in rg.edge_origin.items():
        assert rg.h.weight(a, b) == g.weight(u, v)
    tree_edges = rg.h.edge_keys() - set(rg.edge_origin)
    assert all(rg.h.weight(a, b) == 0 for a, b in tree_edges)

    data = rg.to_dict()
    assert data['n'] == 10 and data['h_n'] == rg.h.n
    assert data['is_original'] == [x < 10 for x in range(rg.h.n)]


def test_low_degree_graph_is_unchanged(triangle):
    rg = regularize(triangle)
    assert rg.h == triangle
    assert rg.tree_edge_count() == 0


def test_self_loops_survive(self_loop):
    rg = regularize(self_loop)
    assert rg.h.self_loops == self_loop.self_loops


def test_lift_cycle():
    """An h-cycle through tree vertices lifts to a g-cycle of the same length."""
    g = star(8)
    rg = regularize(g)
    for v in range(1, g.n):
        cycle_h = shortest_cycle_through(rg.h, v)
        lifted = lift_cycle(rg, cycle_h)
        assert lifted.length == cycle_h.length == v + 1
        assert lifted.is_valid(g)
        assert set(lifted.vertices) == {0, v}


def test_lift_cycle_rejects_cycles_without_original_edges():
    rg = regularize(star(8))
    with pytest.raises(InvariantViolation):
        lift_cycle(rg, CycleWitness((0, 1, 2), 0))
    assert lift_cycle(rg, CycleWitness((3,), 4)).vertices == (3,)


def test_lift_cycle_length_mismatch():
    g = star(8)
    rg = regularize(g)
    cycle_h = shortest_cycle_through(rg.h, 5)
    with pytest.raises(InvariantViolation):
        lift_cycle(rg, CycleWitness(cycle_h.vertices, cycle_h.length + 1))


def test_lift_subgraph_requires_tree_paths():
    """An original edge hanging from a tree leaf is kept only with its tree path."""
    g = star(8)
    rg = regularize(g)
    assert lift_subgraph(rg, rg.h.edge_keys()) == g.edge_keys()
    assert lift_subgraph(rg, rg.edge_origin.keys()) < g.edge_keys()
    with pytest.raises(ArgumentError):
        lift_subgraph(rg, [(0, 0)])


@GRAPH_SETTINGS
@given(digraphs(max_n=10))
def test_lifted_subgraph_keeps_roundtrips(g):
    """Lifting all of h gives back g's roundtrip distances exactly."""
    rg = regularize(g)
    lifted = g.edge_subgraph(lift_subgraph(rg, rg.h.edge_keys()))
    assert (roundtrip_closure(lifted) == roundtrip_closure(g)).all()
