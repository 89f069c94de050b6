"""Benchmark suite command."""

from .runner import BENCH_ALGORITHMS, BENCH_COLUMNS, BenchCommand, BenchRow, run_bench_row

__all__ = ['BENCH_ALGORITHMS', 'BENCH_COLUMNS', 'BenchCommand', 'BenchRow', 'run_bench_row']
