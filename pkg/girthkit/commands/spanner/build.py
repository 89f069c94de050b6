"""Compute a roundtrip spanner of a graph file.

The edge subset is written in the graph text format (``--out``) and a JSON
summary with per-scale edge counts goes to ``--output`` or stdout.
"""

from pathlib import Path
from typing import Dict, Optional, Set

import click

from ...cli.base import GraphInputCommand, command_error_handler
from ...cli.config import Config
from ...graph.core import EdgeKey
from ...graph.io import write_graph
from ...reporting import spanner_report
from ..runners import RunOptions, run_spanner


class SpannerCommand(GraphInputCommand):
    """Command to run the const8, det or klogk spanner."""

    def __init__(self, config: Config, graph_file: Path, algorithm: str, options: RunOptions,
                 spanner_file: Optional[Path] = None, output_file: Optional[Path] = None):
        super().__init__(config, graph_file, output_file)
        self.algorithm = algorithm
        self.options = options
        self.options.debug = self.debug
        self.spanner_file = config.output_path(spanner_file)

    @command_error_handler
    def execute(self) -> None:
        g = self.load_graph()
        self.logger.info(f"Running {self.algorithm} spanner")
        edges, per_scale = run_spanner(g, self.algorithm, self.options)
        self.logger.info(f"Spanner keeps {len(edges)} of {g.m} edges")

        if self.spanner_file:
            comments = list(self.comments) + [f"spanner algorithm={self.algorithm} edges={len(edges)}"]
            write_graph(g.edge_subgraph(edges), self.spanner_file, comments)
            self.logger.info(f"Wrote spanner to {self.spanner_file}")

        config = dict(algorithm=self.algorithm, graph=self.graph_file)
        if self.algorithm == 'const8':
            config.update(epsilon=self.options.epsilon, seed=self.options.seed)
        else:
            config.update(k=self.options.k)
            if self.algorithm == 'klogk':
                config.update(seed=self.options.seed, retries=self.options.retries)
        if self.output_file:
            self._display_summary(edges, per_scale, g.m)
        self.save_report(spanner_report(edges, per_scale, self.run_config(**config)), 'spanner', self.output_file)

    def _display_summary(self, edges: Set[EdgeKey], per_scale: Dict[int, int], m: int) -> None:
        click.echo("\nSpanner Summary:")
        click.echo(f"Edges kept: {len(edges)} of {m}")
        click.echo(f"Scales: {len(per_scale)}")
        if per_scale:
            click.echo(f"Largest scale contribution: {max(per_scale.values())}")
