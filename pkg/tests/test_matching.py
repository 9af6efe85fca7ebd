from hyperrep.core import Hypergraph, gen_union_of_matchings
from hyperrep.represent import MatchingDecomposition, decompose, verify_decomposition


class TestDecompose:

    def test_disjoint_edges(self, two_edges):
        decomposition = decompose(two_edges)
        assert decomposition.L == 1
        assert decomposition.matchings == (((0, 1, 2), (3, 4, 5)),)

    def test_complete(self, complete4):
        decomposition = decompose(complete4)
        # every two edges of K_4^(3) intersect
        assert decomposition.L == 4
        assert verify_decomposition(complete4, decomposition)

    def test_colour_bound(self):
        graph = gen_union_of_matchings(60, 3, 4, 3)
        decomposition = decompose(graph)
        assert verify_decomposition(graph, decomposition)
        assert decomposition.L <= graph.r * (graph.max_degree - 1) + 1

    def test_edgeless(self):
        decomposition = decompose(Hypergraph(3, 5))
        assert decomposition.L == 0
        assert verify_decomposition(Hypergraph(3, 5), decomposition)

    def test_lookup(self, path3):
        decomposition = decompose(path3)
        assert decomposition.L == 2
        assert decomposition.assignment == {(0, 1, 2): 0, (2, 3, 4): 1}
        assert decomposition.edge_of(0, 1) == 0
        assert decomposition.edge_of(0, 3) is None


class TestVerifyDecomposition:

    def test_overlapping_matching(self, path3):
        bad = MatchingDecomposition(3, 5, (((0, 1, 2), (2, 3, 4)),))
        assert not verify_decomposition(path3, bad)

    def test_missing_edge(self, path3):
        bad = MatchingDecomposition(3, 5, (((0, 1, 2),),))
        assert not verify_decomposition(path3, bad)

    def test_foreign_or_repeated_edge(self, path3):
        foreign = MatchingDecomposition(3, 5, (((0, 1, 2),), ((1, 3, 4),)))
        repeated = MatchingDecomposition(3, 5, (((0, 1, 2),), ((2, 3, 4),), ((0, 1, 2),)))
        assert not verify_decomposition(path3, foreign)
        assert not verify_decomposition(path3, repeated)

    def test_empty_matching(self, path3):
        bad = MatchingDecomposition(3, 5, (((0, 1, 2),), (), ((2, 3, 4),)))
        assert not verify_decomposition(path3, bad)
