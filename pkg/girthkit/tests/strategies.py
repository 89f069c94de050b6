"""Hypothesis strategies for small weighted digraphs."""

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ..graph.core import Graph

GRAPH_SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
SLOW_GRAPH_SETTINGS = settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 9, min_weight: int = 0, max_weight: int = 9,
             self_loops: bool = False) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if self_loops or u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=3 * n, unique=True)) if pairs else []
    weights = draw(st.lists(st.integers(min_weight, max_weight), min_size=len(chosen), max_size=len(chosen)))
    return Graph(n, [(u, v, w) for (u, v), w in zip(chosen, weights)])


@st.composite
def positive_digraphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    """Digraphs with weights >= 1, so no zero-weight cycle exists."""
    return draw(digraphs(min_n=min_n, max_n=max_n, min_weight=1))
