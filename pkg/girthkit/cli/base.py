"""
Base command infrastructure for the girthkit CLI.
Provides graph loading, report output and uniform error handling.
"""

import functools
import json
import logging
import time
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional

import click

from ..algorithms.error_tracker import ErrorTracker
from ..errors import EXIT_BAD_INPUT, GirthKitError, GraphFormatError
from ..graph.core import Graph
from ..graph.io import read_graph
from ..reporting import validate_report, write_report
from .config import Config


class BaseCommand(ABC):
    """Base class for all CLI commands."""

    def __init__(self, config: Config):
        self.config = config
        self.logger = logging.getLogger(self.__class__.__name__)
        self.error_tracker = ErrorTracker()

        ctx = click.get_current_context(silent=True)
        self.debug = bool(ctx and ctx.obj and ctx.obj.get('debug'))
        if self.debug:
            self.logger.debug(f"Debug mode enabled for {self.__class__.__name__}")

    @abstractmethod
    def execute(self) -> None:
        """Execute the command. Must be implemented by subclasses."""
        pass

    def validate(self) -> bool:
        """Validate command configuration and requirements.

        Returns:
            bool: True if validation passes, False otherwise
        """
        if self.debug:
            self.logger.debug("Validating command configuration")
        return True

    def run_config(self, **values: Any) -> Dict[str, Any]:
        """Config block recorded in every report: effective settings plus command flags."""
        block = self.config.to_dict()
        block['command'] = self.__class__.__name__
        block.update({k: (str(v) if isinstance(v, Path) else v) for k, v in values.items()})
        return block

    def save_report(self, report: Dict[str, Any], schema: str, path: Optional[Path]) -> None:
        """Validate and write a JSON report, or print it when no path is given."""
        path = self.config.output_path(path)
        if path is None:
            validate_report(report, schema)
            click.echo(json.dumps(report, indent=2))
            return
        write_report(report, schema, path)
        click.echo(f"\nDetailed results saved to {path}")


class GraphInputCommand(BaseCommand):
    """Base class for commands that read a graph file."""

    def __init__(self, config: Config, graph_file: Path, output_file: Optional[Path] = None):
        super().__init__(config)
        self.graph_file = graph_file
        self.output_file = output_file
        self.comments: List[str] = []

    def validate(self) -> bool:
        """Validate input file exists and is readable."""
        if not super().validate():
            return False

        if not self.graph_file.exists():
            self.logger.error(f"Graph file not found: {self.graph_file}")
            return False

        if not self.graph_file.is_file():
            self.logger.error(f"Graph path is not a file: {self.graph_file}")
            return False

        return True

    def load_graph(self) -> Graph:
        if not self.validate():
            raise click.exceptions.Exit(EXIT_BAD_INPUT)
        self.logger.info(f"Reading graph from {self.graph_file}")
        g, comments = read_graph(self.graph_file)
        self.comments = comments
        self.logger.info(f"Loaded graph with n={g.n}, m={g.m}, W={g.max_weight}")
        return g


def fail(error: Exception) -> NoReturn:
    """Report an error in red and leave with its exit code."""
    click.secho(f"Error: {str(error)}", fg='red', err=True)
    records = error.errors if isinstance(error, GraphFormatError) else []
    for record in records[:20]:
        color = 'red' if record.severity == 'CRITICAL' else 'yellow'
        click.secho(f"[{record.severity}] Line {record.line_number}, Field: {record.field} - {record.message}",
                    fg=color, err=True)
    if isinstance(error, GirthKitError):
        raise click.exceptions.Exit(error.exit_code)
    if isinstance(error, ValueError):
        raise click.exceptions.Exit(EXIT_BAD_INPUT)
    raise click.Abort()


def command_error_handler(f):
    """Decorator to handle command execution errors consistently."""
    @functools.wraps(f)
    def wrapper(self, *args, **kwargs):
        try:
            if self.debug:
                self.logger.debug(f"Starting command execution: {f.__name__}")
                start = time.time()

            result = f(self, *args, **kwargs)

            if self.debug:
                self.logger.debug(f"Command completed in {time.time() - start:.3f}s")

            return result

        except (click.exceptions.Exit, click.Abort):
            raise
        except Exception as e:
            self.error_tracker.add_error(
                'COMMAND_EXECUTION_ERROR',
                f"Command failed: {str(e)}",
                {
                    'command': f.__name__,
                    'args': str(args),
                    'kwargs': str(kwargs),
                    'error': str(e),
                    'exit_code': getattr(e, 'exit_code', None),
                }
            )
            if self.debug:
                self.logger.debug(f"Command failed with error: {str(e)}", exc_info=True)
            fail(e)
    return wrapper
