"""Write a seeded synthetic instance in the graph text format."""

from pathlib import Path
from typing import Any, Dict, Optional, Sequence

import click

from ...cli.base import BaseCommand, command_error_handler
from ...cli.config import Config
from ...errors import ArgumentError
from ...graph.generators import generate
from ...graph.io import format_graph, write_graph


def parse_params(pairs: Sequence[str]) -> Dict[str, Any]:
    """'key=value' strings to generator keyword arguments (int, then float, else str)."""
    params: Dict[str, Any] = {}
    for pair in pairs:
        key, sep, value = pair.partition('=')
        if not sep or not key:
            raise ArgumentError(f"expected key=value, got '{pair}'")
        for cast in (int, float):
            try:
                params[key] = cast(value)
                break
            except ValueError:
                continue
        else:
            params[key] = value
    return params


class GenerateCommand(BaseCommand):
    """Command to generate a graph instance."""

    def __init__(self, config: Config, kind: str, n: int, seed: Optional[int] = None,
                 params: Optional[Dict[str, Any]] = None, output_file: Optional[Path] = None):
        super().__init__(config)
        self.kind = kind
        self.n = n
        self.seed = config.seed if seed is None else seed
        self.params = params or {}
        self.output_file = config.output_path(output_file)

    @command_error_handler
    def execute(self) -> None:
        self.logger.info(f"Generating {self.kind} instance with n={self.n}, seed={self.seed}")
        g, comments = generate(self.kind, self.n, self.seed, **self.params)
        if self.output_file is None:
            click.echo(format_graph(g, comments), nl=False)
            return
        write_graph(g, self.output_file, comments)
        click.echo(f"Wrote {self.kind} graph (n={g.n}, m={g.m}) to {self.output_file}")
