"""Reading and writing the graph text format."""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from ..errors import GraphFormatError
from .core import Graph
from .validator import GraphFileValidator

logger = logging.getLogger(__name__)


def parse_graph(lines: Iterable[str], source_name: str = '<text>') -> Tuple[Graph, List[str]]:
    """Parse graph text into a normalised Graph plus its comment lines.

    Raises:
        GraphFormatError: carrying every CRITICAL validation record
    """
    validator = GraphFileValidator(source_name)
    if not validator.feed(lines):
        critical = validator.critical_errors()
        first = critical[0]
        raise GraphFormatError(
            f"{source_name}: line {first.line_number}: {first.message}"
            + (f" (+{len(critical) - 1} more)" if len(critical) > 1 else ""),
            critical,
        )
    for record in validator.errors:
        logger.debug(f"{source_name}: line {record.line_number}: [{record.severity}] {record.message}")
    return Graph(validator.n, validator.arcs), validator.comments


def read_graph(path: Path) -> Tuple[Graph, List[str]]:
    """Read a graph file.

    Raises:
        GraphFormatError: malformed content or unreadable file
    """
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return parse_graph(f, str(path))
    except OSError as e:
        raise GraphFormatError(f"cannot read graph file {path}: {e}") from e


def format_graph(g: Graph, comments: Optional[Sequence[str]] = None) -> str:
    """Emit g (self-loops included) in the 1-indexed text format."""
    loops = g.self_loops
    lines = [f"c {c}" for c in (comments or [])]
    lines.append(f"p {g.n} {g.m + len(loops)}")
    lines.extend(f"a {u + 1} {v + 1} {w}" for u, v, w in g.edges)
    lines.extend(f"a {v + 1} {v + 1} {w}" for v, w in sorted(loops.items()))
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path: Path, comments: Optional[Sequence[str]] = None) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_graph(g, comments), encoding='utf-8')


def descriptor_from_comments(comments: Sequence[str]) -> dict:
    """Parse 'key=value' tokens from generator comment lines."""
    descriptor = {}
    for comment in comments:
        for token in comment.split():
            key, sep, value = token.partition('=')
            if sep:
                descriptor[key] = value
    return descriptor
