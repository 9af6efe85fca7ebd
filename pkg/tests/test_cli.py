import io

import pytest

from hyperrep.__main__ import RunConfig, build_parser, main
from hyperrep.core import Hypergraph
from hyperrep.text import dump_hypergraph, parse_hypergraph, parse_representation


def run(*argv):
    out = io.StringIO()
    status = main(list(map(str, argv)), out=out)
    return status, out.getvalue().splitlines()


def results(lines):
    return [line for line in lines if not line.startswith('#')]


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / 'g.hg'
    path.write_text(dump_hypergraph(Hypergraph(3, 6, [(0, 1, 2), (3, 4, 5)])))
    return path


class TestRunConfig:

    def test_echo(self):
        args = build_parser().parse_args(['gen', '--n', '12', '--delta', '2', '--seed', '4'])
        config = RunConfig.from_args(args)
        assert config.comments() == [
            'command=gen', 'model=matchings', 'n=12', 'r=3', 'delta=2', 'seed=4'
        ]

    def test_header_lines(self, graph_file):
        status, lines = run('decompose', graph_file)
        assert status == 0
        assert lines[0] == '# command=decompose'
        assert lines[1] == f'# input={graph_file}'


class TestGen:

    def test_stdout(self):
        status, lines = run('gen', '--n', 12, '--r', 3, '--delta', 2, '--seed', 1)
        assert status == 0
        body = '\n'.join(lines[:-1]) + '\n'
        graph = parse_hypergraph(body)
        assert graph.n == 12
        assert lines[-1] == f'RESULT edges={len(graph)} max_degree={graph.max_degree}'

    def test_file_and_determinism(self, tmp_path):
        first, second = tmp_path / 'a.hg', tmp_path / 'b.hg'
        run('gen', '--model', 'linear', '--n', 20, '--delta', 3, '--seed', 5, '-o', first)
        run('gen', '--model', 'linear', '--n', 20, '--delta', 3, '--seed', 5, '-o', second)
        def body(path):
            return [line for line in path.read_text().splitlines() if 'output=' not in line]

        assert body(first) == body(second)
        assert parse_hypergraph(first.read_text()).max_degree <= 3

    def test_invalid(self):
        assert run('gen', '--n', 2, '--delta', 1)[0] == 1


class TestPipeline:

    def test_represent_verify(self, graph_file, tmp_path):
        rep_file = tmp_path / 'g.rep'
        status, lines = run('represent', graph_file, '--seed', 3, '-o', rep_file)
        assert status == 0
        assert results(lines) == [
            'RESULT mode=general L=1 t=1033 k=129 ground_size=1033 build_attempts=1 '
            f'family_attempts={parse_representation(rep_file.read_text()).metadata.family_attempts[0]}',
            'RESULT size_bound=true',
        ]

        status, lines = run('verify', graph_file, rep_file)
        assert status == 0
        assert results(lines)[0].startswith('RESULT valid=true exhaustive=true checked=20')

        status, lines = run('verify', graph_file, rep_file, '--samples', 4, '--seed', 2)
        assert status == 0
        assert 'exhaustive=false checked=6' in results(lines)[0]

    def test_verify_failure(self, graph_file, tmp_path):
        rep_file = tmp_path / 'flat.rep'
        rep_file.write_text('6 1 1\n' + ''.join(f'{v} 1 0\n' for v in range(6)))
        status, lines = run('verify', graph_file, rep_file)
        assert status == 2
        assert 'violations=18' in results(lines)[0]
        assert results(lines)[1] == 'VIOLATION 0 1 3 1 nonedge'

    def test_decompose(self, graph_file, tmp_path):
        dec_file = tmp_path / 'g.dec'
        status, lines = run('decompose', graph_file, '-o', dec_file)
        assert status == 0
        assert results(lines) == ['RESULT L=1 bound=1']
        assert dec_file.read_text().splitlines()[-3:] == ['1', '0 0', '1 0']

    def test_missing_file(self, tmp_path):
        assert run('decompose', tmp_path / 'missing.hg')[0] == 1

    def test_malformed_file(self, tmp_path):
        path = tmp_path / 'bad.hg'
        path.write_text('3 6 1\n0 1\n')
        assert run('represent', path)[0] == 1

    def test_not_linear(self, tmp_path):
        path = tmp_path / 'k4.hg'
        path.write_text('3 4 2\n0 1 2\n0 1 3\n')
        assert run('represent', path, '--mode', 'linear')[0] == 1


class TestExact:

    def test_theta(self, graph_file):
        status, lines = run('exact', graph_file, '--k', 1)
        assert status == 0
        assert results(lines) == ['RESULT value=2 witness_k=1', 'SUPPORT 0 1 2', 'SUPPORT 3 4 5']

    def test_tilde(self, graph_file):
        status, lines = run('exact', graph_file, '--tilde')
        assert status == 0
        assert results(lines)[0] == 'RESULT value=2 witness_k=1'

    def test_caps(self, graph_file):
        assert run('exact', graph_file, '--k', 1, '--max-t', 1)[0] == 3
        assert run('exact', graph_file, '--k', 1, '--max-n', 5)[0] == 3

    def test_exclusive(self, graph_file):
        assert run('exact', graph_file)[0] == 1
        assert run('exact', graph_file, '--k', 1, '--tilde')[0] == 1


class TestBounds:

    def test_point(self):
        status, lines = run('bounds', '--n', 1000000, '--r', 3, '--delta', 10)
        assert status == 0
        values = dict(line.split()[1:3] for line in results(lines))
        assert values['argument_holds'] == 'true'
        assert values['exact_matchings'] == '-'

    def test_scan(self, tmp_path):
        csv_file = tmp_path / 'scan.csv'
        status, lines = run('bounds', '--delta', 4, '--scan', '--scan-to', 60, '--csv', csv_file)
        assert status == 0
        values = dict(line.split()[1:3] for line in results(lines))
        assert values['first_argument'] == '35'
        assert values['regressions'] == '-'
        rows = csv_file.read_text().splitlines()
        assert rows[0].startswith('n,r,delta,')
        assert len(rows) == 1 + 60 - 4

    def test_missing_n(self):
        assert run('bounds', '--delta', 4)[0] == 1


def test_usage_error():
    assert run('frobnicate')[0] == 1
    assert run()[0] == 1
