"""Check covers and spanners against exact all-pairs roundtrip distances.

Both commands write their report before failing, so a failed check still
leaves the evidence behind; the exit code is 3 when ok is false.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from ...algorithms.oracle import verify_cover, verify_spanner
from ...cli.base import GraphInputCommand, command_error_handler
from ...cli.config import Config
from ...errors import ArgumentError, VerificationFailed
from ...graph.core import EdgeKey, Graph
from ...graph.io import read_graph
from ...reporting import cover_check_report, decode_cover, decode_spanner, stretch_check_report


def _load_json(path: Path) -> Dict[str, Any]:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ArgumentError(f"{path} is not valid JSON: {e}") from e


def load_spanner_edges(g: Graph, path: Path) -> List[EdgeKey]:
    """Edges from a spanner JSON summary or a spanner graph file over the same vertices."""
    if path.suffix.lower() == '.json':
        return decode_spanner(_load_json(path), g.n)
    h, _ = read_graph(path)
    if h.n != g.n:
        raise ArgumentError(f"spanner has {h.n} vertices, graph has {g.n}")
    return [(e.source, e.target) for e in h.edges]


class VerifyCoverCommand(GraphInputCommand):
    """Command to verify a cover JSON against its graph."""

    def __init__(self, config: Config, graph_file: Path, object_file: Path, alpha: Optional[float] = None,
                 radius: Optional[int] = None, output_file: Optional[Path] = None):
        super().__init__(config, graph_file, output_file)
        self.object_file = object_file
        self.alpha = alpha
        self.radius = radius

    @command_error_handler
    def execute(self) -> None:
        g = self.load_graph()
        cover = decode_cover(_load_json(self.object_file), g.n)
        alpha = self.alpha if self.alpha is not None else cover.stretch_factor
        R = self.radius if self.radius is not None else cover.R
        self.logger.info(f"Verifying {len(cover)} balls at stretch {alpha}, R={R}")

        report = verify_cover(g, cover, alpha, R, self.config.apsp_limit, self.config.threads)
        if self.output_file:
            click.echo("\nCover Verification:")
            click.echo(f"Balls: {report.ball_count}, memberships: {report.total_ball_vertices}")
            click.echo(f"Largest realized radius: {report.max_radius_seen}")
        self.save_report(cover_check_report(report), 'cover_check', self.output_file)
        if not report.ok:
            if report.violating_pair:
                u, v, d = report.violating_pair
                click.secho(f"Pair ({u + 1}, {v + 1}) at roundtrip {d} shares no ball", fg='red', err=True)
            for violation in report.radius_violations:
                click.secho(f"Ball {violation['ball']} ({violation['kind']}): {violation}", fg='yellow', err=True)
            raise VerificationFailed("cover verification failed", report.to_dict())
        click.secho("Cover verified", fg='green', err=True)


class VerifySpannerCommand(GraphInputCommand):
    """Command to verify the roundtrip stretch of a spanner."""

    def __init__(self, config: Config, graph_file: Path, object_file: Path, alpha: Optional[float],
                 radius: Optional[int] = None, output_file: Optional[Path] = None):
        super().__init__(config, graph_file, output_file)
        self.object_file = object_file
        self.alpha = alpha
        self.radius = radius

    @command_error_handler
    def execute(self) -> None:
        if self.alpha is None:
            raise ArgumentError("--alpha is required to verify a spanner")
        g = self.load_graph()
        edges = load_spanner_edges(g, self.object_file)
        self.logger.info(f"Verifying {len(edges)} spanner edges at stretch {self.alpha}")

        report = verify_spanner(g, edges, self.alpha, self.radius, self.config.apsp_limit, self.config.threads)
        if self.output_file:
            click.echo("\nSpanner Verification:")
            click.echo(f"Pairs checked: {report.pairs_checked}")
            click.echo(f"Max stretch: {report.to_dict()['max_stretch']} (allowed {report.alpha})")
        self.save_report(stretch_check_report(report), 'stretch_check', self.output_file)
        if not report.ok:
            raise VerificationFailed(
                f"spanner stretch {report.to_dict()['max_stretch']} exceeds {report.alpha}",
                report.to_dict(),
            )
        click.secho("Spanner verified", fg='green', err=True)
