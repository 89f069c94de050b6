"""JSON reports for single runs.

Vertex ids are 1-based in every report, matching the graph text format.
Each report carries ``schema_version`` and is validated against its schema
under ``girthkit/schemas`` before it is written.
"""

import json
import logging
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import jsonschema

from .algorithms.base import GirthResult
from .algorithms.cover import Ball, Cover
from .algorithms.oracle import CoverReport, StretchReport
from .algorithms.regularize import RegularizedGraph
from .errors import ArgumentError, InvariantViolation
from .graph.core import INF, CycleWitness, EdgeKey

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SCHEMAS = ('girth', 'cover', 'spanner', 'cover_check', 'stretch_check', 'regularize_map')


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict[str, Any]:
    if name not in SCHEMAS:
        raise ArgumentError(f"unknown report schema '{name}'")
    text = resources.files('girthkit.schemas').joinpath(f"{name}.json").read_text(encoding='utf-8')
    return json.loads(text)


def validate_report(report: Dict[str, Any], name: str) -> None:
    """Raises InvariantViolation when a report does not match its schema."""
    try:
        jsonschema.validate(instance=report, schema=load_schema(name))
    except jsonschema.ValidationError as e:
        raise InvariantViolation(f"{name} report does not match its schema: {e.message}") from e


def write_report(report: Dict[str, Any], name: str, path: Path) -> None:
    validate_report(report, name)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w') as f:
        json.dump(report, f, indent=2)
    logger.debug(f"wrote {name} report to {path}")


# Encoding

def encode_length(value: int) -> Any:
    return 'inf' if value >= INF else int(value)


def encode_cycle(cycle: Optional[CycleWitness]) -> Optional[Dict[str, Any]]:
    if cycle is None:
        return None
    return {'vertices': [v + 1 for v in cycle.vertices], 'length': int(cycle.length)}


def encode_edges(edges: Iterable[EdgeKey]) -> List[List[int]]:
    return [[u + 1, v + 1] for u, v in sorted(edges)]


def encode_ball(ball: Ball) -> Dict[str, Any]:
    return {
        'center': ball.center + 1,
        'radius_bound': int(ball.radius_bound),
        'members': sorted(v + 1 for v in ball.members),
        'in_tree': encode_edges(ball.in_tree),
        'out_tree': encode_edges(ball.out_tree),
    }


def girth_report(result: GirthResult, config: Dict[str, Any]) -> Dict[str, Any]:
    report = {
        'schema_version': SCHEMA_VERSION,
        'config': config,
        'estimate': encode_length(result.estimate),
        'cycle': encode_cycle(result.witness),
        'radius_schedule': [{'radius': int(r), 'found': bool(found)} for r, found in result.schedule],
        'timings': {k: round(float(v), 6) for k, v in result.timings.items()},
    }
    if result.scale is not None:
        report['scale'] = int(result.scale)
    if result.ball is not None:
        report['ball'] = encode_ball(result.ball)
    return report


def cover_report(cover: Cover, config: Dict[str, Any]) -> Dict[str, Any]:
    return {
        'schema_version': SCHEMA_VERSION,
        'config': config,
        'k': cover.k,
        'R': cover.R,
        'stretch_factor': cover.stretch_factor,
        'total_members': cover.total_members,
        'balls': [encode_ball(b) for b in cover.balls],
    }


def spanner_report(edges: Iterable[EdgeKey], per_scale: Dict[int, int], config: Dict[str, Any]) -> Dict[str, Any]:
    edges = encode_edges(edges)
    return {
        'schema_version': SCHEMA_VERSION,
        'config': config,
        'edges': edges,
        'edge_count': len(edges),
        'scales': sorted(int(r) for r in per_scale),
        'per_scale_edge_counts': {str(r): int(c) for r, c in sorted(per_scale.items())},
    }


def cover_check_report(report: CoverReport) -> Dict[str, Any]:
    data = report.to_dict()
    data['max_radius_seen'] = encode_length(report.max_radius_seen)
    if report.violating_pair:
        u, v, d = report.violating_pair
        data['violating_pair'] = [u + 1, v + 1, d]
    data['radius_violations'] = [dict(item, center=item['center'] + 1) for item in report.radius_violations]
    data['schema_version'] = SCHEMA_VERSION
    return data


def stretch_check_report(report: StretchReport) -> Dict[str, Any]:
    data = report.to_dict()
    if report.worst_pair:
        u, v, d_g, d_h = report.worst_pair
        data['worst_pair'] = [u + 1, v + 1, d_g, encode_length(d_h)]
    data['schema_version'] = SCHEMA_VERSION
    return data


def regularize_map_report(rg: RegularizedGraph) -> Dict[str, Any]:
    data = rg.to_dict()
    return {
        'schema_version': SCHEMA_VERSION,
        'n': data['n'],
        'h_n': data['h_n'],
        'delta': data['delta'],
        'owner': [v + 1 for v in data['owner']],
        'is_original': data['is_original'],
        'edge_origin': [[a + 1, b + 1, u + 1, v + 1] for a, b, u, v in data['edge_origin']],
    }


# Decoding

def _vertex(value: int, n: int) -> int:
    if not isinstance(value, int) or not 1 <= value <= n:
        raise ArgumentError(f"vertex id {value!r} outside [1, {n}]")
    return value - 1


def decode_edges(pairs: Iterable[Iterable[int]], n: int) -> List[EdgeKey]:
    return [(_vertex(u, n), _vertex(v, n)) for u, v in pairs]


def decode_cover(data: Dict[str, Any], n: int) -> Cover:
    """Cover from a cover report; ids are checked against n.

    Raises:
        ArgumentError: the document is not a cover report for a graph of this size
    """
    try:
        validate_report(data, 'cover')
    except InvariantViolation as e:
        raise ArgumentError(str(e)) from e
    balls = [
        Ball(
            center=_vertex(b['center'], n),
            radius_bound=b['radius_bound'],
            members=frozenset(_vertex(v, n) for v in b['members']),
            in_tree=frozenset(decode_edges(b['in_tree'], n)),
            out_tree=frozenset(decode_edges(b['out_tree'], n)),
        )
        for b in data['balls']
    ]
    return Cover(balls=balls, k=data['k'], R=data['R'], stretch_factor=data['stretch_factor'])


def decode_spanner(data: Dict[str, Any], n: int) -> List[EdgeKey]:
    try:
        validate_report(data, 'spanner')
    except InvariantViolation as e:
        raise ArgumentError(str(e)) from e
    return decode_edges(data['edges'], n)
