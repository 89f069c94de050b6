"""End-to-end tests of the command line through click's runner.

Reports are written with --output and read back, since the runner mixes
stderr into the captured output.
"""

import json

import pandas as pd
import pytest
from click.testing import CliRunner

from ..algorithms.oracle import exact_girth
from ..cli import cli
from ..graph import Graph
from ..graph.io import read_graph
from ..reporting import validate_report
from ..utils.numeric import loglog
from .conftest import random_digraph


@pytest.fixture
def runner(monkeypatch):
    for name in ('GIRTHKIT_THREADS', 'GIRTHKIT_SEED', 'GIRTHKIT_RETRIES', 'GIRTHKIT_OUTPUT_DIR', 'GIRTHKIT_APSP_LIMIT'):
        monkeypatch.delenv(name, raising=False)
    return CliRunner()


@pytest.fixture
def instance(graph_file):
    g = random_digraph(16, 0.2, 3, wmax=9)
    return g, graph_file(g, 'instance.gr', ['generator=er n=16 seed=3'])


def invoke(runner, *args, **kwargs):
    return runner.invoke(cli, [str(a) for a in args], catch_exceptions=False, **kwargs)


def test_gen_writes_a_seeded_graph(runner, tmp_path):
    path = tmp_path / 'out' / 'g.gr'
    result = invoke(runner, 'gen', 'er', '--n', 12, '--seed', 3, '--param', 'p=0.3', '--out', path)
    assert result.exit_code == 0, result.output
    g, comments = read_graph(path)
    assert g.n == 12
    assert any('generator=er' in c for c in comments)

    again = tmp_path / 'again.gr'
    invoke(runner, 'gen', 'er', '--n', 12, '--seed', 3, '--param', 'p=0.3', '--out', again)
    assert read_graph(again)[0] == g


def test_gen_bad_params(runner, tmp_path):
    result = invoke(runner, 'gen', 'planted-girth', '--n', 10, '--param', 'L=1', '--out', tmp_path / 'g.gr')
    assert result.exit_code == 2
    result = invoke(runner, 'gen', 'er', '--n', 10, '--param', 'oops', '--out', tmp_path / 'g.gr')
    assert result.exit_code == 2


def test_girth_exact(runner, instance, tmp_path):
    g, path = instance
    out = tmp_path / 'girth.json'
    result = invoke(runner, 'girth', 'exact', '--graph', path, '--output', out)
    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text())
    validate_report(report, 'girth')
    expected, _ = exact_girth(g)
    assert report['estimate'] == expected
    assert report['cycle']['length'] == expected


def test_girth_approx3(runner, instance, tmp_path):
    g, path = instance
    out = tmp_path / 'girth.json'
    result = invoke(runner, 'girth', 'approx3', '--graph', path, '--seed', 1, '--rounds', 3,
                    '--sample-prob', 0.5, '--witness-size', 2, '--output', out)
    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text())
    expected, _ = exact_girth(g)
    assert expected <= report['estimate'] <= 3 * expected
    assert report['config']['seed'] == 1


def test_girth_det_and_klogk(runner, instance, tmp_path):
    g, path = instance
    expected, _ = exact_girth(g)
    for algorithm in ('det', 'klogk'):
        out = tmp_path / f'{algorithm}.json'
        result = invoke(runner, 'girth', algorithm, '--graph', path, '--k', 2, '--output', out)
        assert result.exit_code == 0, result.output
        assert json.loads(out.read_text())['estimate'] >= expected


def test_girth_prints_json_without_output(runner, graph_file):
    path = graph_file(Graph(3, [(0, 1, 1), (1, 2, 1)]))
    result = invoke(runner, 'girth', 'exact', '--graph', path)
    assert result.exit_code == 0
    assert '"estimate": "inf"' in result.output


def test_bad_graph_exits_2(runner, graph_file, tmp_path):
    path = graph_file("p 3 1\na 1 9 2\n", 'bad.gr')
    result = invoke(runner, 'girth', 'exact', '--graph', path, '--output', tmp_path / 'r.json')
    assert result.exit_code == 2
    assert not (tmp_path / 'r.json').exists()


def test_cover_then_verify(runner, instance, tmp_path):
    _, path = instance
    cover = tmp_path / 'cover.json'
    result = invoke(runner, 'cover', 'det', '--graph', path, '--k', 2, '--radius', 4, '--output', cover)
    assert result.exit_code == 0, result.output
    validate_report(json.loads(cover.read_text()), 'cover')

    check = tmp_path / 'check.json'
    result = invoke(runner, 'verify', 'cover', '--graph', path, '--object', cover, '--output', check)
    assert result.exit_code == 0, result.output
    assert json.loads(check.read_text())['ok']


def test_verify_cover_failure_exits_3(runner, instance, tmp_path):
    """A cover with its balls removed leaves every cyclic pair uncovered."""
    g, path = instance
    cover = tmp_path / 'cover.json'
    invoke(runner, 'cover', 'klogk', '--graph', path, '--radius', 1, '--output', cover)
    document = json.loads(cover.read_text())
    document['balls'] = []
    cover.write_text(json.dumps(document))

    check = tmp_path / 'check.json'
    result = invoke(runner, 'verify', 'cover', '--graph', path, '--object', cover,
                    '--radius', 2 * g.n * g.max_weight, '--output', check)
    assert result.exit_code == 3
    assert not json.loads(check.read_text())['ok']


def test_spanner_then_verify(runner, instance, tmp_path):
    g, path = instance
    spanner_graph = tmp_path / 'spanner.gr'
    summary = tmp_path / 'spanner.json'
    result = invoke(runner, 'spanner', 'det', '--graph', path, '--out', spanner_graph, '--output', summary)
    assert result.exit_code == 0, result.output
    validate_report(json.loads(summary.read_text()), 'spanner')

    alpha = 2 * (20 * 2 * loglog(g.n) + 2)
    for obj in (spanner_graph, summary):
        check = tmp_path / 'stretch.json'
        result = invoke(runner, 'verify', 'spanner', '--graph', path, '--object', obj,
                        '--alpha', alpha, '--output', check)
        assert result.exit_code == 0, result.output
        assert json.loads(check.read_text())['ok']


def test_empty_spanner_fails_verification(runner, instance, graph_file, tmp_path):
    g, path = instance
    empty = graph_file(Graph(g.n), 'empty.gr')
    check = tmp_path / 'stretch.json'
    result = invoke(runner, 'verify', 'spanner', '--graph', path, '--object', empty,
                    '--alpha', 100, '--output', check)
    assert result.exit_code == 3
    report = json.loads(check.read_text())
    assert report['max_stretch'] == 'inf'
    assert not report['ok']


def test_spanner_const8(runner, instance, tmp_path):
    _, path = instance
    summary = tmp_path / 'spanner.json'
    result = invoke(runner, 'spanner', 'const8', '--graph', path, '--seed', 2, '--output', summary)
    assert result.exit_code == 0, result.output
    check = tmp_path / 'stretch.json'
    result = invoke(runner, 'verify', 'spanner', '--graph', path, '--object', summary,
                    '--alpha', 10, '--output', check)
    assert result.exit_code == 0, result.output


def test_regularize(runner, graph_file, tmp_path):
    star = Graph(8, [(0, v, v) for v in range(1, 8)] + [(v, 0, 1) for v in range(1, 8)])
    path = graph_file(star, 'star.gr')
    out = tmp_path / 'h.gr'
    mapping = tmp_path / 'map.json'
    result = invoke(runner, 'regularize', '--in', path, '--out', out, '--map', mapping)
    assert result.exit_code == 0, result.output
    h, _ = read_graph(out)
    report = json.loads(mapping.read_text())
    validate_report(report, 'regularize_map')
    assert report['h_n'] == h.n > star.n
    assert h.max_out_degree() <= report['delta']


def test_bench(runner, graph_file, tmp_path):
    """Three instances by two algorithms, plus a row whose instance is missing."""
    names = []
    for seed in range(3):
        g = random_digraph(12, 0.25, seed)
        name = f'g{seed}.gr'
        graph_file(g, name, [f'generator=er n=12 seed={seed}'])
        names.append(name)
    rows = [f'{name},{algorithm}' for name in names for algorithm in ('exact', 'det')]
    suite = tmp_path / 'suite.csv'
    suite.write_text('instance,algorithm\n' + '\n'.join(rows + ['missing.gr,exact']) + '\n')

    out = tmp_path / 'bench.csv'
    result = invoke(runner, 'bench', suite, '--output', out)
    assert result.exit_code == 0, result.output
    df = pd.read_csv(out)
    assert len(df) == 7
    assert list(df['instance'][:2]) == ['g0.gr', 'g0.gr']
    good = df[df['error'].isna()]
    assert len(good) == 6
    ratios = good.dropna(subset=['ratio'])
    assert (ratios[ratios['algorithm'] == 'exact']['ratio'] == 1.0).all()
    assert (ratios['ratio'] >= 1.0).all()
    assert df['error'].iloc[-1].startswith('ArgumentError')


def test_bad_config_exits_2(runner, instance, tmp_path):
    _, path = instance
    result = invoke(runner, 'girth', 'exact', '--graph', path, env={'GIRTHKIT_THREADS': 'many'})
    assert result.exit_code == 2


def test_output_dir(runner, instance, tmp_path):
    _, path = instance
    target = tmp_path / 'reports'
    result = invoke(runner, 'girth', 'exact', '--graph', path, '--output', 'girth.json',
                    env={'GIRTHKIT_OUTPUT_DIR': str(target)})
    assert result.exit_code == 0, result.output
    assert (target / 'girth.json').exists()
