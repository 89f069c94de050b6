"""Graph core: immutable digraph, searches, text format."""

from .core import INF, CycleWitness, Edge, EdgeKey, Graph, VertexMap
from .cycles import is_acyclic, self_loop_witness, zero_weight_cycle, zero_weight_skeleton
from .io import descriptor_from_comments, format_graph, parse_graph, read_graph, write_graph
from .search import (
    Direction,
    DistanceCache,
    DistanceMap,
    cycle_from_search,
    dijkstra,
    pruned_dijkstra,
    roundtrip_distance,
    shortest_cycle_through,
)
from .validator import GraphFileValidator, ValidationError, validate_graph_file


def induced_subgraph(g: Graph, vertices):
    """G[W] with a map back to g's ids."""
    return g.induced_subgraph(vertices)


__all__ = [
    'INF',
    'CycleWitness',
    'Direction',
    'DistanceCache',
    'DistanceMap',
    'Edge',
    'EdgeKey',
    'Graph',
    'GraphFileValidator',
    'ValidationError',
    'VertexMap',
    'cycle_from_search',
    'descriptor_from_comments',
    'dijkstra',
    'format_graph',
    'induced_subgraph',
    'is_acyclic',
    'parse_graph',
    'pruned_dijkstra',
    'read_graph',
    'roundtrip_distance',
    'self_loop_witness',
    'shortest_cycle_through',
    'validate_graph_file',
    'write_graph',
    'zero_weight_cycle',
    'zero_weight_skeleton',
]
