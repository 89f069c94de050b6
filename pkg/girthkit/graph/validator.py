"""Line-level validation of the graph text format.

Format (1-indexed on disk)::

    c <comment>
    p <n> <m>            (``p sp <n> <m>`` is accepted too)
    a <u> <v> <w>
"""

from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple


@dataclass
class ValidationError:
    line_number: int
    field: str
    message: str
    severity: str  # 'CRITICAL', 'WARNING', 'INFO'


class GraphFileValidator:
    """Parses graph text while recording every problem it finds."""

    def __init__(self, source_name: str = '<text>'):
        self.source_name = source_name
        self.errors: List[ValidationError] = []
        self.comments: List[str] = []
        self.n: Optional[int] = None
        self.declared_m: Optional[int] = None
        self.arcs: List[Tuple[int, int, int]] = []
        self.stats = {
            'total_lines': 0,
            'arc_lines': 0,
            'self_loops': 0,
            'parallel_edges': 0,
        }
        self._seen_pairs = set()

    def _error(self, line_number: int, field: str, message: str, severity: str = 'CRITICAL') -> None:
        self.errors.append(ValidationError(line_number, field, message, severity))

    @staticmethod
    def _ints(tokens: List[str]) -> Optional[List[int]]:
        try:
            return [int(t) for t in tokens]
        except ValueError:
            return None

    def feed(self, lines: Iterable[str]) -> bool:
        """Validate all lines. Returns True when no CRITICAL error was found."""
        for line_number, raw in enumerate(lines, start=1):
            self.stats['total_lines'] += 1
            line = raw.strip()
            if not line:
                continue
            kind, _, rest = line.partition(' ')
            if kind == 'c':
                self.comments.append(rest.strip())
            elif kind == 'p':
                self._problem_line(line_number, rest.split())
            elif kind == 'a':
                self._arc_line(line_number, rest.split())
            else:
                self._error(line_number, 'LINE', f"unknown line type '{kind}'")

        if self.n is None:
            self._error(0, 'HEADER', "missing 'p <n> <m>' header")
        elif self.declared_m is not None and self.declared_m != self.stats['arc_lines']:
            self._error(
                0, 'HEADER',
                f"header declares {self.declared_m} arcs but {self.stats['arc_lines']} were found",
                'WARNING',
            )
        return self.is_valid

    def _problem_line(self, line_number: int, tokens: List[str]) -> None:
        if self.n is not None:
            self._error(line_number, 'HEADER', "duplicate 'p' line")
            return
        if tokens and tokens[0] == 'sp':
            tokens = tokens[1:]
        values = self._ints(tokens)
        if values is None or len(values) != 2:
            self._error(line_number, 'HEADER', "header must be 'p <n> <m>' with integers")
            return
        n, m = values
        if n < 0 or m < 0:
            self._error(line_number, 'HEADER', f"negative counts in header: n={n}, m={m}")
            return
        self.n, self.declared_m = n, m

    def _arc_line(self, line_number: int, tokens: List[str]) -> None:
        self.stats['arc_lines'] += 1
        if self.n is None:
            self._error(line_number, 'ARC', "arc before the 'p' header")
            return
        values = self._ints(tokens)
        if values is None or len(values) != 3:
            self._error(line_number, 'ARC', "arc must be 'a <u> <v> <w>' with integers")
            return
        u, v, w = values
        if w < 0:
            self._error(line_number, 'WEIGHT', f"negative weight {w}")
            return
        bad = [x for x in (u, v) if not 1 <= x <= self.n]
        if bad:
            self._error(line_number, 'VERTEX', f"vertex {bad[0]} outside [1, {self.n}]")
            return
        if u == v:
            self.stats['self_loops'] += 1
            self._error(line_number, 'ARC', f"self-loop at {u} kept as a trivial cycle", 'INFO')
        elif (u, v) in self._seen_pairs:
            self.stats['parallel_edges'] += 1
            self._error(line_number, 'ARC', f"parallel arc {u}->{v}; the lighter one is kept", 'INFO')
        self._seen_pairs.add((u, v))
        self.arcs.append((u - 1, v - 1, w))

    @property
    def is_valid(self) -> bool:
        return not any(e.severity == 'CRITICAL' for e in self.errors)

    def critical_errors(self) -> List[ValidationError]:
        return [e for e in self.errors if e.severity == 'CRITICAL']

    def get_validation_summary(self) -> Dict[str, Any]:
        return {
            'source': self.source_name,
            'stats': dict(self.stats, n=self.n, declared_m=self.declared_m),
            'errors': [asdict(e) for e in self.errors],
        }


def validate_graph_file(path: Path) -> Dict[str, Any]:
    """Validate a graph file without raising.

    Returns:
        {'is_valid': bool, 'summary': validation summary}
    """
    validator = GraphFileValidator(str(path))
    try:
        with open(path, 'r', encoding='utf-8') as f:
            validator.feed(f)
    except OSError as e:
        validator.errors.append(ValidationError(0, 'FILE', f"failed to read file: {e}", 'CRITICAL'))
    return {
        'is_valid': validator.is_valid,
        'summary': validator.get_validation_summary(),
    }
