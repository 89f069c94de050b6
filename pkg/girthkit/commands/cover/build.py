"""Build a roundtrip cover of a graph file at one radius."""

from pathlib import Path
from typing import Optional

import click

from ...algorithms.cover import Cover
from ...cli.base import GraphInputCommand, command_error_handler
from ...cli.config import Config
from ...reporting import cover_report
from ..runners import RunOptions, run_cover


class CoverCommand(GraphInputCommand):
    """Command to build a det or klogk roundtrip cover."""

    def __init__(self, config: Config, graph_file: Path, algorithm: str, radius: int, options: RunOptions,
                 output_file: Optional[Path] = None):
        super().__init__(config, graph_file, output_file)
        self.algorithm = algorithm
        self.radius = radius
        self.options = options
        self.options.debug = self.debug

    @command_error_handler
    def execute(self) -> None:
        g = self.load_graph()
        self.logger.info(f"Building {self.algorithm} cover with k={self.options.k}, R={self.radius}")
        cover = run_cover(g, self.algorithm, self.radius, self.options)

        config = dict(algorithm=self.algorithm, graph=self.graph_file, k=self.options.k, R=self.radius)
        if self.algorithm == 'klogk':
            config.update(seed=self.options.seed, retries=self.options.retries)
        if self.output_file:
            self._display_summary(cover)
        self.save_report(cover_report(cover, self.run_config(**config)), 'cover', self.output_file)

    def _display_summary(self, cover: Cover) -> None:
        click.echo("\nCover Summary:")
        click.echo(f"Balls: {len(cover)} ({len(cover.nontrivial())} with two or more members)")
        click.echo(f"Total memberships: {cover.total_members}")
        click.echo(f"Declared radius bound: {cover.stretch_factor} * {cover.R}")
