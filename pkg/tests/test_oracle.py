import pytest

from hyperrep.core import Hypergraph
from hyperrep.errors import CapExceededError
from hyperrep.represent import (
    OracleLimits,
    build_representation,
    theta_exact,
    theta_k_exact,
    theta_tilde_exact,
    verify_representation
)


class TestThetaK:

    def test_disjoint_edges(self, two_edges):
        result = theta_k_exact(two_edges, 1)
        assert result.value == 2
        assert result.witness_k == 1
        assert result.supports == ((0, 1, 2), (3, 4, 5))

    def test_single_edge(self, single_edge):
        assert theta_k_exact(single_edge, 1).value == 1

    def test_complete(self, complete4):
        result = theta_exact(complete4)
        assert result.value == 1
        assert result.supports == ((0, 1, 2, 3),)

    def test_higher_threshold(self, two_edges):
        # one full support shared by both edges plus one support per edge
        assert theta_k_exact(two_edges, 2).value == 3

    def test_unrestricted_agrees(self, path3):
        assert theta_k_exact(path3, 1, restrict=False).value == theta_k_exact(path3, 1).value == 2

    def test_edgeless(self):
        result = theta_k_exact(Hypergraph(3, 5), 1)
        assert (result.value, result.witness_k, result.supports) == (0, 1, ())

    def test_witness_represents(self, path3):
        result = theta_k_exact(path3, 1)
        rep = result.to_representation(path3.n)
        assert rep.ground_size == result.value
        assert verify_representation(path3, rep).valid

    def test_invalid(self, two_edges):
        with pytest.raises(ValueError):
            theta_k_exact(two_edges, 0)
        with pytest.raises(ValueError):
            theta_k_exact(two_edges, 2, restrict=True)


class TestThetaTilde:

    def test_disjoint_edges(self, two_edges):
        result = theta_tilde_exact(two_edges)
        assert result.value == 2
        assert result.witness_k == 1
        assert result.supports == ((0, 1, 2), (3, 4, 5))

    @pytest.mark.parametrize('name, expected', [
        ('single_edge', 1), ('complete4', 1), ('path3', 2)
    ])
    def test_small(self, request, name, expected):
        graph = request.getfixturevalue(name)
        result = theta_tilde_exact(graph)
        assert result.value == expected
        rep = result.to_representation(graph.n)
        assert verify_representation(graph, rep).valid

    def test_edgeless(self):
        assert theta_tilde_exact(Hypergraph(3, 4)).value == 0

    def test_not_above_theta(self, path3, two_edges):
        for graph in (path3, two_edges):
            assert theta_tilde_exact(graph).value <= theta_exact(graph).value


class TestLimits:

    def test_vertex_cap(self):
        graph = Hypergraph(3, 9, [(0, 1, 2)])
        with pytest.raises(CapExceededError) as info:
            theta_k_exact(graph, 1)
        assert info.value.limits == OracleLimits()

    def test_size_cap(self, two_edges):
        with pytest.raises(CapExceededError):
            theta_tilde_exact(two_edges, OracleLimits(max_t=1))
        with pytest.raises(CapExceededError):
            theta_k_exact(two_edges, 1, OracleLimits(max_t=1))


@pytest.mark.parametrize('name', ['single_edge', 'two_edges', 'path3', 'complete4'])
def test_exact_below_construction(request, name):
    graph = request.getfixturevalue(name)
    rep = build_representation(graph, seed=1)
    assert theta_tilde_exact(graph).value <= theta_exact(graph).value <= rep.ground_size
