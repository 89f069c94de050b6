"""
Core CLI implementation for girthkit.
"""

from pathlib import Path
from typing import Optional, Tuple

import click

from ..algorithms.girth3 import MODES
from ..commands import (
    BenchCommand,
    CoverCommand,
    GenerateCommand,
    GirthCommand,
    RegularizeCommand,
    SpannerCommand,
    VerifyCoverCommand,
    VerifySpannerCommand,
)
from ..commands.graphs import parse_params
from ..commands.runners import RunOptions
from ..errors import EXIT_BAD_INPUT
from ..graph.generators import GENERATORS
from .base import fail
from .config import Config
from .logging import get_logger, setup_logging

GRAPH = click.option('--graph', 'graph_file', required=True,
                     type=click.Path(exists=True, file_okay=True, dir_okay=False, path_type=Path),
                     help='Graph file in the text format')
OUTPUT = click.option('--output', 'output_file', type=click.Path(file_okay=True, dir_okay=False, path_type=Path),
                      help='Save the JSON report to file (default: stdout)')
SEED = click.option('--seed', type=click.IntRange(min=0), default=None, help='Random seed (default GIRTHKIT_SEED)')
RETRIES = click.option('--retries', type=click.IntRange(min=0), default=None,
                       help='Reseed budget for w.h.p. failures (default GIRTHKIT_RETRIES)')
K = click.option('--k', type=click.IntRange(min=1), default=2, show_default=True, help='Trade-off parameter')


def _options(config: Config, **values) -> RunOptions:
    seed = values.pop('seed', None)
    retries = values.pop('retries', None)
    return RunOptions(
        seed=config.seed if seed is None else seed,
        retries=config.retries if retries is None else retries,
        workers=config.threads,
        **{k: v for k, v in values.items() if v is not None},
    )


def _run(factory) -> None:
    """Build the config, then the command, and execute it."""
    try:
        config = Config.from_env()
        command = factory(config)
        command.execute()
    except (click.exceptions.Exit, click.Abort):
        raise
    except Exception as e:
        fail(e)


@click.group()
@click.option('--debug', is_flag=True, help='Enable detailed debug output')
@click.pass_context
def cli(ctx, debug: bool):
    """Girth approximation, roundtrip covers and roundtrip spanners for weighted digraphs"""
    ctx.ensure_object(dict)
    ctx.obj['debug'] = debug

    try:
        config = Config.from_env()
    except Exception as e:
        setup_logging(debug=debug)
        click.echo(f"Error initializing configuration: {str(e)}", err=True)
        ctx.exit(EXIT_BAD_INPUT)
    ctx.obj['config'] = config

    setup_logging(debug=debug, level=config.log_level)
    logger = get_logger('cli')
    if debug:
        logger.debug("Debug mode enabled")
        logger.debug(f"Using {config.threads} thread(s), APSP limit {config.apsp_limit}")


@cli.command()
@click.argument('kind', type=click.Choice(sorted(GENERATORS)))
@click.option('--n', type=click.IntRange(min=0), required=True, help='Number of vertices')
@SEED
@click.option('--param', 'params', multiple=True, help='Generator parameter as key=value (repeatable)')
@click.option('--out', 'output_file', type=click.Path(file_okay=True, dir_okay=False, path_type=Path),
              help='Graph file to write (default: stdout)')
def gen(kind: str, n: int, seed: Optional[int], params: Tuple[str, ...], output_file: Optional[Path]):
    """Generate a seeded graph instance."""
    _run(lambda config: GenerateCommand(config, kind, n, seed, parse_params(params), output_file))


@cli.command()
@click.option('--in', 'graph_file', required=True,
              type=click.Path(exists=True, file_okay=True, dir_okay=False, path_type=Path), help='Input graph file')
@click.option('--out', 'output_file', required=True, type=click.Path(file_okay=True, dir_okay=False, path_type=Path),
              help='Regularized graph file to write')
@click.option('--map', 'map_file', type=click.Path(file_okay=True, dir_okay=False, path_type=Path),
              help='Save the vertex/edge map JSON to file')
def regularize(graph_file: Path, output_file: Path, map_file: Optional[Path]):
    """Rewrite a graph with in/out-degrees bounded by max(2, ceil(m/n))."""
    _run(lambda config: RegularizeCommand(config, graph_file, output_file, map_file))


# Girth Commands Group
@cli.group()
def girth():
    """Girth estimation commands"""
    pass


@girth.command('exact')
@GRAPH
@OUTPUT
def girth_exact(graph_file: Path, output_file: Optional[Path]):
    """Exact girth by one Dijkstra per vertex."""
    _run(lambda config: GirthCommand(config, graph_file, 'exact', _options(config), output_file))


@girth.command('approx3')
@GRAPH
@click.option('--mode', type=click.Choice(MODES), default='binary', show_default=True,
              help='Radius search: binary search or geometric sweep')
@click.option('--epsilon', type=click.FloatRange(min=0, min_open=True), default=0.25, show_default=True,
              help='Ratio of the geometric sweep')
@SEED
@RETRIES
@click.option('--rounds', type=click.IntRange(min=1), default=None, help='Sampling rounds (default 50 log n)')
@click.option('--sample-prob', type=click.FloatRange(min=0, max=1, min_open=True), default=None,
              help='Per-round sample probability (default n^-1/2)')
@click.option('--witness-size', type=click.IntRange(min=1), default=None, help='Witnesses per vertex (default 100 log n)')
@OUTPUT
def girth_approx3(graph_file: Path, mode: str, epsilon: float, seed: Optional[int], retries: Optional[int],
                  rounds: Optional[int], sample_prob: Optional[float], witness_size: Optional[int],
                  output_file: Optional[Path]):
    """Randomized 3-approximation of the girth."""
    _run(lambda config: GirthCommand(config, graph_file, 'approx3', _options(
        config, mode=mode, epsilon=epsilon, seed=seed, retries=retries,
        rounds=rounds, sample_prob=sample_prob, witness_size=witness_size,
    ), output_file))


@girth.command('det')
@GRAPH
@K
@OUTPUT
def girth_det(graph_file: Path, k: int, output_file: Optional[Path]):
    """Deterministic girth estimate from roundtrip covers."""
    _run(lambda config: GirthCommand(config, graph_file, 'det', _options(config, k=k), output_file))


@girth.command('klogk')
@GRAPH
@K
@SEED
@RETRIES
@OUTPUT
def girth_klogk(graph_file: Path, k: int, seed: Optional[int], retries: Optional[int], output_file: Optional[Path]):
    """Randomized girth estimate from O(k log k) roundtrip covers."""
    _run(lambda config: GirthCommand(config, graph_file, 'klogk',
                                     _options(config, k=k, seed=seed, retries=retries), output_file))


# Cover Commands Group
@cli.group()
def cover():
    """Roundtrip cover commands"""
    pass


@cover.command('det')
@GRAPH
@K
@click.option('--radius', type=click.IntRange(min=1), required=True, help='Cover radius R')
@OUTPUT
def cover_det(graph_file: Path, k: int, radius: int, output_file: Optional[Path]):
    """Deterministic (O(k log log n), R) roundtrip cover."""
    _run(lambda config: CoverCommand(config, graph_file, 'det', radius, _options(config, k=k), output_file))


@cover.command('klogk')
@GRAPH
@K
@click.option('--radius', type=click.IntRange(min=1), required=True, help='Cover radius R')
@SEED
@RETRIES
@OUTPUT
def cover_klogk(graph_file: Path, k: int, radius: int, seed: Optional[int], retries: Optional[int],
                output_file: Optional[Path]):
    """Randomized (O(k log k), R) roundtrip cover."""
    _run(lambda config: CoverCommand(config, graph_file, 'klogk', radius,
                                     _options(config, k=k, seed=seed, retries=retries), output_file))


# Spanner Commands Group
@cli.group()
def spanner():
    """Roundtrip spanner commands"""
    pass


SPANNER_OUT = click.option('--out', 'spanner_file', type=click.Path(file_okay=True, dir_okay=False, path_type=Path),
                           help='Write the spanner edges as a graph file')


@spanner.command('const8')
@GRAPH
@click.option('--epsilon', type=click.FloatRange(min=0, min_open=True), default=0.25, show_default=True,
              help='Ratio of the radius sweep')
@SEED
@SPANNER_OUT
@OUTPUT
def spanner_const8(graph_file: Path, epsilon: float, seed: Optional[int], spanner_file: Optional[Path],
                   output_file: Optional[Path]):
    """8(1 + epsilon) roundtrip spanner."""
    _run(lambda config: SpannerCommand(config, graph_file, 'const8', _options(config, epsilon=epsilon, seed=seed),
                                       spanner_file, output_file))


@spanner.command('det')
@GRAPH
@K
@SPANNER_OUT
@OUTPUT
def spanner_det(graph_file: Path, k: int, spanner_file: Optional[Path], output_file: Optional[Path]):
    """Deterministic roundtrip spanner from cover trees."""
    _run(lambda config: SpannerCommand(config, graph_file, 'det', _options(config, k=k), spanner_file, output_file))


@spanner.command('klogk')
@GRAPH
@K
@SEED
@RETRIES
@SPANNER_OUT
@OUTPUT
def spanner_klogk(graph_file: Path, k: int, seed: Optional[int], retries: Optional[int],
                  spanner_file: Optional[Path], output_file: Optional[Path]):
    """Randomized roundtrip spanner from O(k log k) cover trees."""
    _run(lambda config: SpannerCommand(config, graph_file, 'klogk', _options(config, k=k, seed=seed, retries=retries),
                                       spanner_file, output_file))


# Verify Commands Group
@cli.group()
def verify():
    """Check covers and spanners against exact distances"""
    pass


OBJECT = click.option('--object', 'object_file', required=True,
                      type=click.Path(exists=True, file_okay=True, dir_okay=False, path_type=Path),
                      help='Cover JSON, spanner JSON summary or spanner graph file')
RADIUS = click.option('--radius', type=click.IntRange(min=0), default=None, help='Radius R to check')


@verify.command('cover')
@GRAPH
@OBJECT
@click.option('--alpha', type=click.FloatRange(min=1), default=None,
              help='Stretch bound (default: the cover\'s own stretch factor)')
@RADIUS
@OUTPUT
def verify_cover(graph_file: Path, object_file: Path, alpha: Optional[float], radius: Optional[int],
                 output_file: Optional[Path]):
    """Verify completeness and radii of a cover."""
    _run(lambda config: VerifyCoverCommand(config, graph_file, object_file, alpha, radius, output_file))


@verify.command('spanner')
@GRAPH
@OBJECT
@click.option('--alpha', type=click.FloatRange(min=1), required=True, help='Allowed roundtrip stretch')
@RADIUS
@OUTPUT
def verify_spanner(graph_file: Path, object_file: Path, alpha: float, radius: Optional[int],
                   output_file: Optional[Path]):
    """Verify the roundtrip stretch of a spanner."""
    _run(lambda config: VerifySpannerCommand(config, graph_file, object_file, alpha, radius, output_file))


@cli.command()
@click.argument('suite', type=click.Path(exists=True, file_okay=True, dir_okay=False, path_type=Path))
@click.option('--output', 'output_file', type=click.Path(file_okay=True, dir_okay=False, path_type=Path),
              help='Save bench records CSV to file (default: stdout)')
def bench(suite: Path, output_file: Optional[Path]):
    """Run a benchmark suite CSV."""
    _run(lambda config: BenchCommand(config, suite, output_file))
