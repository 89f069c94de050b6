"""Tests for the deterministic roundtrip cover and its girth/spanner wrappers."""

import pytest

from ..algorithms.covers_det import (
    BallGrower,
    RoundtripCoverBuilder,
    det_girth,
    det_spanner,
    good_cut,
    grows_in_ball,
    roundtrip_cover,
    stretch_factor,
)
from ..algorithms.oracle import exact_girth, verify_cover, verify_spanner
from ..errors import ArgumentError
from ..graph import INF, Direction, Graph
from ..graph.generators import generate
from ..utils.numeric import loglog
from .conftest import random_digraph


def test_good_cut():
    """Outer ball must stay below 3n/4 and within the vertex and edge growth limits."""
    assert good_cut(100, 400, (10, 20), (20, 30), 2)
    assert not good_cut(100, 400, (10, 20), (80, 30), 2)
    # |V(B2)| <= sqrt(10) * sqrt(100) ~ 31.6
    assert not good_cut(100, 400, (10, 20), (32, 30), 2)
    # |E(B2)| <= max(1.5 * 20, sqrt(20) * sqrt(400)) ~ 89.4
    assert good_cut(100, 400, (10, 20), (20, 89), 2)
    assert not good_cut(100, 400, (10, 20), (20, 90), 2)
    # empty inner ball: only an empty outer ball passes
    assert good_cut(100, 400, (0, 0), (0, 0), 2)
    assert not good_cut(100, 400, (0, 0), (1, 0), 2)
    # k = 1 allows any outer ball below 3n/4 with at most m edges
    assert good_cut(100, 400, (1, 0), (75, 400), 1)


def test_grows_in_ball():
    """The lighter ball grows; a big in-ball waits while the out-ball is small."""
    assert grows_in_ball((1, 1), (1, 5), 4)
    assert not grows_in_ball((1, 6), (1, 5), 4)
    # in-ball holds 3n/4 vertices, out-ball does not
    assert not grows_in_ball((3, 1), (1, 5), 4)
    # a big out-ball always lets the in-ball catch up
    assert grows_in_ball((1, 6), (3, 5), 4)
    assert grows_in_ball((3, 6), (3, 5), 4)


def test_stretch_factor():
    assert stretch_factor(16, 2) == 2 * 5 * 2 * 2 + 1
    assert stretch_factor(3, 1) == 11


def test_ball_grower_prefixes(two_cycles):
    grower = BallGrower(two_cycles, 0, Direction.FROM, set(two_cycles.vertices()))
    assert grower.members(0) == {0}
    assert grower.tally(1) == (2, 1)
    assert grower.members(2) == {0, 2, 3}
    assert grower.members(3) == {0, 1, 2, 3, 4}
    assert grower.members(100) == {0, 1, 2, 3, 4}
    assert grower.tally(100) == (5, 6)

    inward = BallGrower(two_cycles, 0, Direction.TO, {0, 1, 4})
    assert inward.members(100) == {0, 1, 4}


@pytest.mark.parametrize('k', [2, 3])
@pytest.mark.parametrize('R', [1, 2, 4, 8])
@pytest.mark.parametrize('seed', range(4))
def test_cover_verifies(k, R, seed):
    """Complete, radii within the declared bound, and declared bound within stretch * R."""
    g = random_digraph(30, 0.1, seed, wmax=6)
    cover = roundtrip_cover(g, k, R)
    assert cover.stretch_factor == stretch_factor(g.n, k)
    report = verify_cover(g, cover, cover.stretch_factor, R)
    assert report.ok, report.to_dict()
    assert cover.total_members <= 10 * g.n ** (k / (k - 1))


@pytest.mark.parametrize('kind, params', [
    ('ring-of-cliques', {'cliques': 4}),
    ('grid-chords', {'chords': 15}),
    ('planted-girth', {'L': 6}),
])
def test_cover_verifies_on_structured_graphs(kind, params):
    g, _ = generate(kind, 40, seed=1, **params)
    for R in (1, 4, 16):
        cover = roundtrip_cover(g, 2, R)
        assert verify_cover(g, cover, cover.stretch_factor, R).ok


def test_cover_is_deterministic():
    g = random_digraph(40, 0.08, 11)
    first = roundtrip_cover(g, 2, 4)
    second = roundtrip_cover(g, 2, 4)
    assert first.balls == second.balls


def test_dag_cover_has_only_singleton_balls(dag):
    cover = roundtrip_cover(dag, 2, 8)
    assert all(ball.size == 1 for ball in cover.balls)
    assert not cover.nontrivial()
    assert verify_cover(dag, cover, cover.stretch_factor, 8).ok


def test_cover_of_a_vertex_subset(two_cycles):
    cover = RoundtripCoverBuilder(2, 4).run(two_cycles, vertices={2, 3, 4})
    covered = set().union(*(ball.members for ball in cover.balls))
    assert covered <= {2, 3, 4}
    assert RoundtripCoverBuilder(2, 4).run(Graph(0)).balls == []


def test_cover_records_stats(two_cycles):
    cover = roundtrip_cover(two_cycles, 2, 4)
    assert cover.stats['pieces'] >= 1
    assert 'cover_time' in cover.stats


def test_builder_errors():
    with pytest.raises(ArgumentError):
        RoundtripCoverBuilder(0, 1)
    with pytest.raises(ArgumentError):
        RoundtripCoverBuilder(2, 0)


# Wrappers

@pytest.mark.parametrize('k', [2, 3])
@pytest.mark.parametrize('seed', range(6))
def test_det_girth_sandwich(k, seed):
    g = random_digraph(24, 0.12, seed, wmax=15)
    girth, _ = exact_girth(g)
    result = det_girth(g, k)
    if girth >= INF:
        assert result.is_acyclic
        return
    assert girth <= result.estimate <= (20 * k * loglog(g.n) + 2) * girth
    assert result.witness.is_valid(g)
    assert result.witness.length <= result.estimate
    assert result.ball is not None and result.ball.radius_bound == result.estimate
    assert result.ball.center in result.witness.vertices


def test_det_girth_special_inputs(dag, zero_cycle, self_loop):
    assert det_girth(dag, 2).estimate == INF
    assert det_girth(zero_cycle, 2).estimate == 0
    assert det_girth(self_loop, 2).estimate == 2
    with pytest.raises(ArgumentError):
        det_girth(dag, 0)


def test_det_girth_is_deterministic():
    g, _ = generate('planted-girth', 40, seed=3, L=5)
    assert det_girth(g, 2).estimate == det_girth(g, 2).estimate


@pytest.mark.parametrize('seed', range(4))
def test_det_spanner_stretch(seed):
    k = 2
    g = random_digraph(25, 0.15, seed, wmax=8)
    edges, per_scale = det_spanner(g, k)
    assert edges <= g.edge_keys()
    assert list(per_scale) == sorted(per_scale)
    alpha = 2 * (20 * k * loglog(g.n) + 2)
    assert verify_spanner(g, edges, alpha).ok


def test_det_spanner_keeps_zero_roundtrips(zero_cycle):
    edges, _ = det_spanner(zero_cycle, 2)
    assert {(2, 3), (3, 2)} <= edges
    assert det_spanner(Graph(0), 2) == (set(), {})
