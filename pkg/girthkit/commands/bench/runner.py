"""Run a suite of (instance, algorithm) rows and write one CSV record per row.

Suite CSV columns: instance, algorithm, and optionally k, epsilon, seed.
Instance paths are resolved against the suite file's directory. Rows run
concurrently up to the configured thread count; output keeps suite order.
A failing row yields a record with the error column set and the run goes on.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

import click
import numpy as np
import pandas as pd

from ...algorithms.oracle import exact_girth
from ...cli.base import BaseCommand, command_error_handler
from ...cli.config import Config
from ...errors import ArgumentError
from ...graph.core import INF
from ...graph.io import descriptor_from_comments, read_graph
from ...reporting import SCHEMA_VERSION
from ..runners import GIRTH_ALGORITHMS, SPANNER_ALGORITHMS, RunOptions, run_girth, run_spanner

BENCH_COLUMNS = [
    'schema_version', 'instance', 'generator', 'n', 'm', 'seed', 'algorithm',
    'wall_time', 'estimate', 'edge_count', 'baseline', 'ratio', 'error',
]

# girth algorithms keep their names; spanner algorithms are prefixed
BENCH_ALGORITHMS = {name: ('girth', name) for name in GIRTH_ALGORITHMS}
BENCH_ALGORITHMS.update({f"spanner-{name}": ('spanner', name) for name in SPANNER_ALGORITHMS})


@dataclass
class BenchRow:
    instance: str
    algorithm: str
    k: int = 2
    epsilon: float = 0.25
    seed: Optional[int] = None


def _as_float(value: int) -> float:
    return np.inf if value >= INF else float(value)


def _ratio(estimate: int, baseline: int) -> Optional[float]:
    if baseline >= INF:
        return None
    if baseline == 0:
        return 1.0 if estimate == 0 else np.inf
    return estimate / baseline


def run_bench_row(row: BenchRow, base_dir: Path, config: Config) -> Dict[str, Any]:
    """One BenchRecord; exceptions end up in the error column."""
    record: Dict[str, Any] = {column: None for column in BENCH_COLUMNS}
    record.update(schema_version=SCHEMA_VERSION, instance=row.instance, algorithm=row.algorithm)
    try:
        if row.algorithm not in BENCH_ALGORITHMS:
            raise ArgumentError(f"unknown bench algorithm '{row.algorithm}'")
        path = Path(row.instance)
        if not path.is_absolute():
            path = base_dir / path
        if not path.is_file():
            raise ArgumentError(f"instance file not found: {path}")
        g, comments = read_graph(path)
        descriptor = descriptor_from_comments(comments)
        seed = row.seed if row.seed is not None else int(descriptor.get('seed', config.seed))
        record.update(generator=descriptor.get('generator'), n=g.n, m=g.m, seed=seed)

        options = RunOptions(k=row.k, epsilon=row.epsilon, seed=seed, retries=config.retries)
        family, name = BENCH_ALGORITHMS[row.algorithm]
        start = time.perf_counter()
        if family == 'girth':
            result = run_girth(g, name, options)
            record['wall_time'] = time.perf_counter() - start
            record['estimate'] = _as_float(result.estimate)
            if g.n <= config.apsp_limit:
                baseline, _ = exact_girth(g)
                record['baseline'] = _as_float(baseline)
                record['ratio'] = _ratio(result.estimate, baseline)
        else:
            edges, _ = run_spanner(g, name, options)
            record['wall_time'] = time.perf_counter() - start
            record['edge_count'] = len(edges)
    except Exception as e:
        record['error'] = f"{type(e).__name__}: {e}"
    return record


def read_suite(path: Path) -> List[BenchRow]:
    df = pd.read_csv(path, dtype=str, skipinitialspace=True).fillna('')
    df.columns = [c.strip().lower() for c in df.columns]
    missing = {'instance', 'algorithm'} - set(df.columns)
    if missing:
        raise ArgumentError(f"suite is missing columns: {', '.join(sorted(missing))}")
    rows = []
    for index, item in df.iterrows():
        try:
            rows.append(BenchRow(
                instance=item['instance'].strip(),
                algorithm=item['algorithm'].strip(),
                k=int(item['k']) if item.get('k') else 2,
                epsilon=float(item['epsilon']) if item.get('epsilon') else 0.25,
                seed=int(item['seed']) if item.get('seed') else None,
            ))
        except ValueError as e:
            raise ArgumentError(f"suite row {index + 2}: {e}") from e
    return rows


class BenchCommand(BaseCommand):
    """Command to run a benchmark suite."""

    def __init__(self, config: Config, suite_file: Path, output_file: Optional[Path] = None):
        super().__init__(config)
        self.suite_file = suite_file
        self.output_file = config.output_path(output_file)

    @command_error_handler
    def execute(self) -> None:
        rows = read_suite(self.suite_file)
        self.logger.info(f"Running {len(rows)} bench rows on {self.config.threads} thread(s)")
        base_dir = self.suite_file.parent

        with ThreadPoolExecutor(max_workers=self.config.threads) as executor:
            records = list(executor.map(lambda row: run_bench_row(row, base_dir, self.config), rows))

        df = pd.DataFrame(records, columns=BENCH_COLUMNS)
        failed = df['error'].notna().sum()
        for record in records:
            if record['error']:
                self.error_tracker.add_error('BENCH_ROW_ERROR', record['error'],
                                             {'instance': record['instance'], 'algorithm': record['algorithm']})
        if self.output_file is None:
            click.echo(df.to_csv(index=False), nl=False)
        else:
            self.output_file.parent.mkdir(parents=True, exist_ok=True)
            df.to_csv(self.output_file, index=False)
            self._display_summary(df, failed)
            click.echo(f"\nDetailed results saved to {self.output_file}")
        self.error_tracker.log_summary(self.logger)

    def _display_summary(self, df: pd.DataFrame, failed: int) -> None:
        click.echo("\nBench Summary:")
        click.echo(f"Records: {len(df)}")
        if failed:
            click.secho(f"Rows with errors: {failed}", fg='yellow')
        ratios = pd.to_numeric(df['ratio'], errors='coerce').dropna()
        if len(ratios):
            click.echo(f"Worst girth ratio: {ratios.max():.3f}")
