import io

from fractions import Fraction

import pytest

from hyperrep.core import Hypergraph, gen_union_of_matchings
from hyperrep.represent import (
    BuildOptions,
    Mode,
    Representation,
    build_representation,
    decompose
)
from hyperrep.text import (
    HypergraphCollector,
    HypergraphReader,
    HypergraphWriter,
    Line,
    RepresentationVisitor,
    dump_decomposition,
    dump_family,
    dump_hypergraph,
    dump_representation,
    format_number,
    parse_decomposition,
    parse_hypergraph,
    parse_number,
    parse_representation
)


class TestLine:

    def test_tokens(self):
        line = Line('3 4 5  # trailing', 7)
        assert line.next_int('r') == 3
        assert line.peek() == '4'
        assert line.ints() == [4, 5]
        assert not line.has_next()
        assert line.eol_comment == 'trailing'

    def test_comment(self):
        line = Line('  # mode general')
        assert line.is_comment()
        assert line.eol_comment == 'mode general'
        assert not line.has_next()

    def test_error_position(self):
        line = Line('x', 12)
        with pytest.raises(SyntaxError, match='line 12'):
            line.next_int()


class TestNumbers:

    @pytest.mark.parametrize('value', [Fraction(1, 48), 7, 0.1767766952966369])
    def test_format_parse(self, value):
        parsed = parse_number(format_number(value))
        assert parsed == value
        assert type(parsed) is type(value)


class TestHypergraphFormat:

    def test_dump(self):
        graph = Hypergraph(3, 5, [(0, 1, 2), (2, 3, 4)])
        assert dump_hypergraph(graph) == '3 5 2\n0 1 2\n2 3 4\n'
        assert dump_hypergraph(graph, ['seed=1']) == '# seed=1\n3 5 2\n0 1 2\n2 3 4\n'

    def test_parse(self):
        text = '# generated\n\n3 5 2\n0 1 2   # first\n2 3 4\n'
        graph = parse_hypergraph(text)
        assert graph.edges == ((0, 1, 2), (2, 3, 4))
        assert parse_hypergraph(text.encode()) == graph
        assert parse_hypergraph(io.StringIO(text)) == graph

    def test_round_trip(self):
        graph = gen_union_of_matchings(20, 3, 3, 4)
        assert parse_hypergraph(dump_hypergraph(graph)) == graph

    @pytest.mark.parametrize('text', [
        '3 5 2\n0 1 2\n',
        '3 5 1\n0 1\n',
        '3 5 1\n2 1 0\n',
        '3 5 1\n0 1 x\n',
        '3 5 1\n0 1 2\n3 4 0\n',
        '3 5\n',
        '',
    ])
    def test_malformed(self, text):
        with pytest.raises(SyntaxError):
            parse_hypergraph(text)

    def test_invalid_edges(self):
        with pytest.raises(ValueError):
            parse_hypergraph('3 5 1\n0 1 7\n')

    def test_source_type(self):
        with pytest.raises(TypeError):
            parse_hypergraph(42)

    def test_delegate_chain(self):
        text = '3 5 1\n0 1 2\n'
        writer = HypergraphWriter()
        collector = HypergraphCollector(delegate=writer)
        HypergraphReader().visit(text, collector)
        assert writer.code == text
        assert collector.graph.edges == ((0, 1, 2),)

    def test_comments_forwarded(self):
        writer = HypergraphWriter()
        HypergraphReader(comments=True).visit('# hello\n3 4 0\n', writer)
        assert writer.code == '# hello\n3 4 0\n'

    def test_wrong_delegate(self):
        with pytest.raises(TypeError):
            HypergraphCollector(delegate=RepresentationVisitor())


class TestRepresentationFormat:

    def test_plain(self):
        rep = Representation.from_sets(1, [{0, 2}, {2}, set()], ground_size=3)
        text = dump_representation(rep)
        assert text == '3 1 3\n0 2 0 2\n1 1 2\n2 0\n'
        parsed = parse_representation(text)
        assert parsed.metadata is None
        assert [s.tolist() for s in parsed.vertex_sets] == [[0, 2], [2], []]

    def test_metadata(self, path3):
        rep = build_representation(path3, seed=2)
        parsed = parse_representation(dump_representation(rep, ['command=represent']))
        assert parsed.k == rep.k
        assert parsed.ground_size == rep.ground_size
        assert parsed.metadata.mode is Mode.GENERAL
        assert parsed.metadata.p == Fraction(1, 8)
        assert parsed.metadata.epsilon == Fraction(1, 2)
        assert parsed.metadata.family_attempts == rep.metadata.family_attempts
        assert parsed.metadata.seed == 2
        assert all((a == b).all() for a, b in zip(parsed.vertex_sets, rep.vertex_sets))

    @pytest.mark.parametrize('text', [
        '2 1 3\n0 1 0\n',
        '2 1 3\n0 2 0\n1 0\n',
        '2 1 3\n0 1 5\n1 0\n',
        '2 1 3\n1 0\n0 0\n',
        '# mode general\n1 1 1\n0 0\n',
    ])
    def test_malformed(self, text):
        with pytest.raises(SyntaxError):
            parse_representation(text)

    @pytest.mark.parametrize('line', ['0 2 2 0\n', '0 2 1 1\n'])
    def test_unordered_without_validation(self, line):
        text = '2 1 3\n' + line + '1 1 1\n'
        with pytest.raises(SyntaxError):
            parse_representation(text)
        with pytest.raises(ValueError):
            parse_representation(text, validate=False)


class TestDecompositionFormat:

    def test_round_trip(self, path3):
        decomposition = decompose(path3)
        text = dump_decomposition(path3, decomposition)
        assert text == '2\n0 0\n1 1\n'
        assert parse_decomposition(text, path3) == decomposition

    def test_out_of_range(self, path3):
        with pytest.raises(ValueError):
            parse_decomposition('1\n0 0\n1 1\n', path3)
        with pytest.raises(ValueError):
            parse_decomposition('2\n0 0\n0 1\n', path3)


def test_dump_family(path3):
    rep = build_representation(path3, seed=2, options=BuildOptions(retain_families=True))
    text = dump_family(rep.metadata.families[0])
    assert text.startswith('0: ')
    assert len(text.splitlines()) == 1
