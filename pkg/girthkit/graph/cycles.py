"""Structural cycle screens built on networkx."""

from typing import Optional, Set

import networkx as nx

from .core import CycleWitness, EdgeKey, Graph


def is_acyclic(g: Graph) -> bool:
    """True when g (self-loops included) has no directed cycle."""
    if g.self_loops:
        return False
    return nx.is_directed_acyclic_graph(g.to_networkx())


def self_loop_witness(g: Graph) -> Optional[CycleWitness]:
    """The lightest self-loop recorded at load, lowest vertex on ties."""
    loops = g.self_loops
    if not loops:
        return None
    vertex = min(loops, key=lambda v: (loops[v], v))
    return CycleWitness((vertex,), loops[vertex])


def _zero_weight_digraph(g: Graph) -> nx.DiGraph:
    zero = nx.DiGraph()
    zero.add_nodes_from(range(g.n))
    zero.add_edges_from((u, v) for u, v, w in g.edges if w == 0)
    return zero


def zero_weight_cycle(g: Graph) -> Optional[CycleWitness]:
    """A cycle of total length 0, if one exists."""
    loops = g.self_loops
    for v in sorted(loops):
        if loops[v] == 0:
            return CycleWitness((v,), 0)
    try:
        cycle_edges = nx.find_cycle(_zero_weight_digraph(g), orientation='original')
    except nx.NetworkXNoCycle:
        return None
    return CycleWitness(tuple(edge[0] for edge in cycle_edges), 0)


def zero_weight_skeleton(g: Graph) -> Set[EdgeKey]:
    """Zero-weight in/out BFS trees rooted at the lowest vertex of every
    zero-weight strongly connected component.

    Any two vertices of such a component keep roundtrip distance 0 inside the
    returned edges.
    """
    zero = _zero_weight_digraph(g)
    skeleton: Set[EdgeKey] = set()
    for component in nx.strongly_connected_components(zero):
        if len(component) < 2:
            continue
        root = min(component)
        inside = zero.subgraph(component)
        skeleton.update(nx.bfs_edges(inside, root))
        skeleton.update((v, u) for u, v in nx.bfs_edges(inside, root, reverse=True))
    return skeleton
