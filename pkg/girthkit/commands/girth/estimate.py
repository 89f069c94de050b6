"""Estimate the girth of a graph file with one of the pipelines."""

from pathlib import Path
from typing import Optional

import click

from ...algorithms.base import GirthResult
from ...cli.base import GraphInputCommand, command_error_handler
from ...cli.config import Config
from ...reporting import encode_length, girth_report
from ..runners import RunOptions, run_girth


class GirthCommand(GraphInputCommand):
    """Command to run exact, approx3, det or klogk girth on a graph."""

    def __init__(self, config: Config, graph_file: Path, algorithm: str, options: RunOptions,
                 output_file: Optional[Path] = None):
        super().__init__(config, graph_file, output_file)
        self.algorithm = algorithm
        self.options = options
        self.options.debug = self.debug

    @command_error_handler
    def execute(self) -> None:
        g = self.load_graph()
        self.logger.info(f"Running {self.algorithm} girth")
        result = run_girth(g, self.algorithm, self.options)

        report = girth_report(result, self.run_config(
            algorithm=self.algorithm,
            graph=self.graph_file,
            k=self.options.k,
            mode=self.options.mode,
            epsilon=self.options.epsilon,
            seed=self.options.seed,
            retries=self.options.retries,
        ))
        if self.output_file:
            self._display_summary(result)
        self.save_report(report, 'girth', self.output_file)

    def _display_summary(self, result: GirthResult) -> None:
        click.echo("\nGirth Summary:")
        click.echo(f"Algorithm: {self.algorithm}")
        click.echo(f"Estimate: {encode_length(result.estimate)}")
        if result.witness is not None:
            click.echo(f"Cycle: {' -> '.join(str(v + 1) for v in result.witness.vertices)}")
        else:
            click.secho("Graph is acyclic", fg='yellow')
        if result.scale is not None:
            click.echo(f"Scale: {result.scale}")
        click.echo(f"Radii evaluated: {len(result.schedule)}")
