"""Write the bounded-degree regularization of a graph and its vertex/edge map."""

from pathlib import Path
from typing import Optional

import click

from ...algorithms.regularize import regularize
from ...cli.base import GraphInputCommand, command_error_handler
from ...cli.config import Config
from ...graph.io import write_graph
from ...reporting import regularize_map_report


class RegularizeCommand(GraphInputCommand):
    """Command to regularize a graph."""

    def __init__(self, config: Config, graph_file: Path, output_file: Path, map_file: Optional[Path] = None):
        super().__init__(config, graph_file, config.output_path(output_file))
        self.map_file = map_file

    @command_error_handler
    def execute(self) -> None:
        g = self.load_graph()
        rg = regularize(g)
        self.logger.info(f"Regularized to n={rg.h.n}, m={rg.h.m} with delta={rg.delta}")

        comments = list(self.comments) + [f"regularized delta={rg.delta} n={g.n}"]
        write_graph(rg.h, self.output_file, comments)
        click.echo(f"Wrote regularized graph to {self.output_file}")
        if self.map_file:
            self.save_report(regularize_map_report(rg), 'regularize_map', self.map_file)
